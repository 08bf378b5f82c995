#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace skewnorm {

/// Exact rationals. mpq_class keeps numerator and denominator coprime with a
/// positive denominator after every operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

/// Accepts "p", "-p", "+p" and "p/q". Throws SchemaViolation on malformed
/// text and DivisionByZero on a zero denominator.
Rat parse_rat(std::string_view text);

}  // namespace skewnorm
