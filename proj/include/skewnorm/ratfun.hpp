#pragma once

#include <optional>
#include <string>

#include "skewnorm/qpoly.hpp"

namespace skewnorm {

class RatFun;

/// x -> (a x + b) / (c x + d) with ad - bc != 0. Stored normalized: c = 1 when
/// c != 0, otherwise d = 1.
struct Mobius {
  Rat a{1}, b{0}, c{0}, d{1};

  static Mobius identity() { return {}; }
  static Mobius shift(const Rat& by) { return {Rat(1), by, Rat(0), Rat(1)}; }
  /// Throws MalformedAutomorphism on a singular matrix.
  static Mobius make(Rat a, Rat b, Rat c, Rat d);
  /// The Mobius map whose image of x is g; MalformedAutomorphism otherwise.
  static Mobius from_ratfun(const RatFun& g);

  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  bool is_shift() const { return c == 0 && a == 1 && d == 1; }
  RatFun image_of_x() const;

  friend bool operator==(const Mobius& l, const Mobius& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
  }
};

/// Matrix product l * r, i.e. the map x -> l(r(x)).
Mobius compose(const Mobius& l, const Mobius& r);
Mobius inverse(const Mobius& m);
Mobius pow(const Mobius& m, long k);

/// Element of Q(x): num / den with den monic and gcd(num, den) = 1.
class RatFun {
 public:
  RatFun() : den_(QPoly::constant(1)) {}
  RatFun(const Rat& c) : num_(QPoly::constant(c)), den_(QPoly::constant(1)) {}
  explicit RatFun(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}
  RatFun(QPoly num, QPoly den);

  static RatFun x() { return RatFun(QPoly::x()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rat> as_rational() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  RatFun inverse() const;

  /// r(x) -> r(m(x)).
  RatFun substitute(const Mobius& m) const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  QPoly num_, den_;
};

}  // namespace skewnorm
