#pragma once

#include <array>
#include <string>

#include "skewnorm/rational.hpp"

namespace skewnorm {

/// Rational quaternion a + b i + c j + d k.
struct Quat {
  Rat a, b, c, d;

  Quat() : a(0), b(0), c(0), d(0) {}
  Quat(Rat a_, Rat b_ = 0, Rat c_ = 0, Rat d_ = 0)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quat unit(int index);  // 0 -> 1, 1 -> i, 2 -> j, 3 -> k
  static Quat i() { return unit(1); }
  static Quat j() { return unit(2); }
  static Quat k() { return unit(3); }

  const Rat& component(int index) const;
  std::array<Rat, 4> components() const { return {a, b, c, d}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_real() const { return b == 0 && c == 0 && d == 0; }
  Rat norm() const { return a * a + b * b + c * c + d * d; }
  Quat conj() const { return {a, -b, -c, -d}; }
  Quat inverse() const;

  Quat operator-() const { return {-a, -b, -c, -d}; }
  friend Quat operator+(const Quat& x, const Quat& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quat operator-(const Quat& x, const Quat& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quat operator*(const Quat& x, const Quat& y);
  Quat scaled(const Rat& s) const { return {a * s, b * s, c * s, d * s}; }

  friend bool operator==(const Quat& x, const Quat& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  std::string str() const;
};

}  // namespace skewnorm
