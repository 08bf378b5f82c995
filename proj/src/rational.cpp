#include "skewnorm/rational.hpp"

#include <cctype>

#include "skewnorm/error.hpp"

namespace skewnorm {

std::string to_string(const Rat& r) { return r.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorCode::SchemaViolation, "malformed rational '" + std::string(text) + "'");
  BigInt n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace skewnorm
