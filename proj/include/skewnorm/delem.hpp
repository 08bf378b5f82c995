#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewnorm/quaternion.hpp"
#include "skewnorm/ratfun.hpp"

namespace skewnorm {

enum class AlgebraTag { HQ, QX };

std::string tag_name(AlgebraTag tag);
AlgebraTag parse_tag(const std::string& name);

/// An element of H(Q) or Q(x). Mixing the two in arithmetic is a TagMismatch.
class DElem {
 public:
  DElem(Quat q) : v_(std::move(q)) {}
  DElem(RatFun r) : v_(std::move(r)) {}

  static DElem zero(AlgebraTag tag);
  static DElem one(AlgebraTag tag);
  static DElem rational(AlgebraTag tag, const Rat& r);

  AlgebraTag tag() const { return v_.index() == 0 ? AlgebraTag::HQ : AlgebraTag::QX; }
  const Quat& quat() const;
  const RatFun& ratfun() const;

  bool is_zero() const;
  bool is_one() const;
  /// The rational value when the element lies in Q.
  std::optional<Rat> as_rational() const;

  DElem operator-() const;
  friend DElem operator+(const DElem& x, const DElem& y);
  friend DElem operator-(const DElem& x, const DElem& y);
  friend DElem operator*(const DElem& x, const DElem& y);
  DElem inverse() const;

  friend bool operator==(const DElem& x, const DElem& y) { return x.v_ == y.v_; }

  std::string str() const;

 private:
  std::variant<Quat, RatFun> v_;
};

enum class ArithOp { Add, Sub, Mul, Inv };

ArithOp parse_arith_op(const std::string& name);

/// Single entry point for the four field operations; `y` is ignored for Inv.
DElem delem_arith(ArithOp op, const DElem& x, const std::optional<DElem>& y);

/// {i, j} for HQ and {x} for QX. Together with Q these generate the algebra.
std::vector<DElem> generating_set(AlgebraTag tag);

/// Commutes with every member of the generating set.
bool is_central(const DElem& r);

}  // namespace skewnorm
