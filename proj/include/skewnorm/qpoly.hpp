#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skewnorm/rational.hpp"

namespace skewnorm {

/// Dense univariate polynomial over Q, coefficients from low to high degree.
/// The coefficient vector is always trimmed, so the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rat> coeffs);
  static QPoly constant(const Rat& c);
  static QPoly x();

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }
  Rat coeff(long k) const;
  bool is_constant() const { return c_.size() <= 1; }

  Rat eval(const Rat& at) const;

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rat& s) const;
  QPoly monic() const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient and remainder; throws DivisionByZero when b is zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

/// Monic gcd (zero if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

QPoly pow(const QPoly& p, unsigned k);

}  // namespace skewnorm
