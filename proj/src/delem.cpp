#include "skewnorm/delem.hpp"

#include "skewnorm/error.hpp"

namespace skewnorm {

std::string tag_name(AlgebraTag tag) { return tag == AlgebraTag::HQ ? "HQ" : "QX"; }

AlgebraTag parse_tag(const std::string& name) {
  if (name == "HQ") return AlgebraTag::HQ;
  if (name == "QX") return AlgebraTag::QX;
  fail(ErrorCode::SchemaViolation, "unknown algebra '" + name + "'");
}

DElem DElem::zero(AlgebraTag tag) { return rational(tag, Rat(0)); }

DElem DElem::one(AlgebraTag tag) { return rational(tag, Rat(1)); }

DElem DElem::rational(AlgebraTag tag, const Rat& r) {
  if (tag == AlgebraTag::HQ) return DElem(Quat(r));
  return DElem(RatFun(r));
}

const Quat& DElem::quat() const {
  if (auto* q = std::get_if<Quat>(&v_)) return *q;
  fail(ErrorCode::TagMismatch, "expected an HQ element, got QX");
}

const RatFun& DElem::ratfun() const {
  if (auto* r = std::get_if<RatFun>(&v_)) return *r;
  fail(ErrorCode::TagMismatch, "expected a QX element, got HQ");
}

bool DElem::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, v_);
}

bool DElem::is_one() const {
  auto r = as_rational();
  return r && *r == 1;
}

std::optional<Rat> DElem::as_rational() const {
  if (auto* q = std::get_if<Quat>(&v_)) {
    if (q->is_real()) return q->a;
    return std::nullopt;
  }
  return std::get<RatFun>(v_).as_rational();
}

namespace {

void require_same(const DElem& x, const DElem& y) {
  if (x.tag() != y.tag())
    fail(ErrorCode::TagMismatch, "mixed algebras: " + tag_name(x.tag()) + " and " + tag_name(y.tag()));
}

}  // namespace

DElem DElem::operator-() const {
  return std::visit([](const auto& v) { return DElem(-v); }, v_);
}

DElem operator+(const DElem& x, const DElem& y) {
  require_same(x, y);
  if (x.tag() == AlgebraTag::HQ) return DElem(x.quat() + y.quat());
  return DElem(x.ratfun() + y.ratfun());
}

DElem operator-(const DElem& x, const DElem& y) {
  require_same(x, y);
  if (x.tag() == AlgebraTag::HQ) return DElem(x.quat() - y.quat());
  return DElem(x.ratfun() - y.ratfun());
}

DElem operator*(const DElem& x, const DElem& y) {
  require_same(x, y);
  if (x.tag() == AlgebraTag::HQ) return DElem(x.quat() * y.quat());
  return DElem(x.ratfun() * y.ratfun());
}

DElem DElem::inverse() const {
  return std::visit([](const auto& v) { return DElem(v.inverse()); }, v_);
}

std::string DElem::str() const {
  return std::visit([](const auto& v) { return v.str(); }, v_);
}

ArithOp parse_arith_op(const std::string& name) {
  if (name == "add") return ArithOp::Add;
  if (name == "sub") return ArithOp::Sub;
  if (name == "mul") return ArithOp::Mul;
  if (name == "inv") return ArithOp::Inv;
  fail(ErrorCode::SchemaViolation, "unknown arithmetic op '" + name + "'");
}

DElem delem_arith(ArithOp op, const DElem& x, const std::optional<DElem>& y) {
  if (op == ArithOp::Inv) return x.inverse();
  if (!y) fail(ErrorCode::SchemaViolation, "binary operation needs a second operand");
  switch (op) {
    case ArithOp::Add: return x + *y;
    case ArithOp::Sub: return x - *y;
    case ArithOp::Mul: return x * *y;
    case ArithOp::Inv: break;
  }
  return x.inverse();
}

std::vector<DElem> generating_set(AlgebraTag tag) {
  if (tag == AlgebraTag::HQ) return {DElem(Quat::i()), DElem(Quat::j())};
  return {DElem(RatFun::x())};
}

bool is_central(const DElem& r) {
  for (const auto& g : generating_set(r.tag()))
    if (!(r * g == g * r)) return false;
  return true;
}

}  // namespace skewnorm
