#include "skewnorm/autodesc.hpp"

#include "skewnorm/error.hpp"

namespace skewnorm {

struct AutoDesc::Node {
  Kind kind = Kind::Identity;
  std::optional<DElem> unit;
  std::optional<RatFun> image;
  std::vector<AutoDesc> children;  // Power: one child; Compose: the parts
  long k = 0;
  std::optional<AlgebraTag> algebra;
};

namespace {

using CK = AutoCanon::Kind;

AutoCanon canon_inner(const Quat& u) {
  AutoCanon c;
  if (u.is_real()) return c;
  Rat lead = 0;
  for (int idx = 0; idx < 4 && lead == 0; ++idx) lead = u.component(idx);
  c.kind = CK::Inner;
  c.unit = u.scaled(Rat(1) / lead);
  return c;
}

AutoCanon canon_mobius(const Mobius& m) {
  AutoCanon c;
  if (m.is_identity()) return c;
  c.kind = CK::Mobius;
  c.map = m;
  return c;
}

// outer o inner
AutoCanon canon_compose(const AutoCanon& outer, const AutoCanon& inner) {
  if (outer.kind == CK::Identity) return inner;
  if (inner.kind == CK::Identity) return outer;
  if (outer.kind != inner.kind)
    fail(ErrorCode::TagMismatch, "composition mixes HQ and QX automorphisms");
  if (outer.kind == CK::Inner) return canon_inner(outer.unit * inner.unit);
  // r -> r(N(x)) then r -> r(M(x)) gives r(N(M(x))).
  return canon_mobius(compose(inner.map, outer.map));
}

AutoCanon canon_pow(const AutoCanon& base, long k) {
  if (base.kind == CK::Identity || k == 0) return {};
  if (base.kind == CK::Mobius) return canon_mobius(pow(base.map, k));
  Quat b = k < 0 ? base.unit.inverse() : base.unit;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Quat acc(1);
  while (e) {
    if (e & 1ul) acc = acc * b;
    e >>= 1ul;
    if (e) b = b * b;
  }
  return canon_inner(acc);
}

std::optional<AlgebraTag> merge_algebra(std::optional<AlgebraTag> a, std::optional<AlgebraTag> b) {
  if (!a) return b;
  if (!b) return a;
  if (*a != *b) fail(ErrorCode::TagMismatch, "automorphism descriptor mixes HQ and QX");
  return a;
}

std::optional<AlgebraTag> canon_algebra(const AutoCanon& c) {
  switch (c.kind) {
    case CK::Identity: return std::nullopt;
    case CK::Inner: return AlgebraTag::HQ;
    case CK::Mobius: return AlgebraTag::QX;
  }
  return std::nullopt;
}

}  // namespace

AutoDesc::AutoDesc() : node_(std::make_shared<Node>()) {}

AutoDesc AutoDesc::inner(const DElem& u) {
  if (u.is_zero()) fail(ErrorCode::MalformedAutomorphism, "inner automorphism by zero");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inner;
  n->unit = u;
  n->algebra = u.tag();
  AutoDesc out;
  out.node_ = n;
  if (u.tag() == AlgebraTag::HQ) out.canon_ = canon_inner(u.quat());
  return out;
}

AutoDesc AutoDesc::gen_image(const RatFun& g) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::GenImage;
  n->image = g;
  n->algebra = AlgebraTag::QX;
  AutoDesc out;
  out.canon_ = canon_mobius(Mobius::from_ratfun(g));
  out.node_ = n;
  return out;
}

AutoDesc AutoDesc::power(const AutoDesc& base, long k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->children = {base};
  n->k = k;
  n->algebra = base.node_->algebra;
  AutoDesc out;
  out.canon_ = canon_pow(base.canon_, k);
  out.node_ = n;
  return out;
}

AutoDesc AutoDesc::compose(std::vector<AutoDesc> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compose;
  AutoCanon acc;
  std::optional<AlgebraTag> alg;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    alg = merge_algebra(alg, it->node_->algebra);
    acc = canon_compose(it->canon_, acc);
  }
  n->algebra = alg;
  n->children = std::move(parts);
  AutoDesc out;
  out.canon_ = acc;
  out.node_ = n;
  return out;
}

AutoDesc AutoDesc::from_canon(const AutoCanon& canon) {
  switch (canon.kind) {
    case CK::Identity: return AutoDesc();
    case CK::Inner: return inner(DElem(canon.unit));
    case CK::Mobius: return gen_image(canon.map.image_of_x());
  }
  return AutoDesc();
}

AutoDesc::Kind AutoDesc::kind() const { return node_->kind; }

const DElem& AutoDesc::unit() const {
  if (!node_->unit) fail(ErrorCode::InternalCheckFailed, "descriptor has no unit");
  return *node_->unit;
}

const RatFun& AutoDesc::image() const {
  if (!node_->image) fail(ErrorCode::InternalCheckFailed, "descriptor has no image");
  return *node_->image;
}

const AutoDesc& AutoDesc::base() const {
  if (node_->kind != Kind::Power) fail(ErrorCode::InternalCheckFailed, "descriptor is not a power");
  return node_->children.front();
}

long AutoDesc::exponent() const { return node_->k; }

const std::vector<AutoDesc>& AutoDesc::parts() const { return node_->children; }

std::optional<AlgebraTag> AutoDesc::algebra() const {
  return node_->algebra ? node_->algebra : canon_algebra(canon_);
}

namespace {

void require_algebra(const AutoDesc& sigma, AlgebraTag tag) {
  auto alg = sigma.algebra();
  if (alg && *alg != tag)
    fail(ErrorCode::TagMismatch, "automorphism of " + tag_name(*alg) + " applied to " + tag_name(tag));
}

}  // namespace

DElem auto_apply(const AutoDesc& sigma, const DElem& r) {
  require_algebra(sigma, r.tag());
  const AutoCanon& c = sigma.canon();
  switch (c.kind) {
    case CK::Identity: return r;
    case CK::Inner: return DElem(c.unit * r.quat() * c.unit.inverse());
    case CK::Mobius: return DElem(r.ratfun().substitute(c.map));
  }
  return r;
}

bool auto_equal(const AutoDesc& sigma, const AutoDesc& tau) {
  auto alg = merge_algebra(sigma.algebra(), tau.algebra());
  if (!alg) return true;
  for (const auto& g : generating_set(*alg))
    if (!(auto_apply(sigma, g) == auto_apply(tau, g))) return false;
  return true;
}

AutoDesc compose2(const AutoDesc& outer, const AutoDesc& inner) {
  return AutoDesc::compose({outer, inner});
}

bool auto_commute(const AutoDesc& sigma, const AutoDesc& tau) {
  return auto_equal(compose2(sigma, tau), compose2(tau, sigma));
}

bool is_fixed(const AutoDesc& sigma, const DElem& r) { return auto_apply(sigma, r) == r; }

AutoDesc auto_pow(const AutoDesc& sigma, long k) { return AutoDesc::power(sigma, k); }

AutoDesc auto_inverse(const AutoDesc& sigma) { return AutoDesc::power(sigma, -1); }

AutoDesc inner_twist(const DElem& u) { return AutoDesc::inner(u); }

bool is_inner(const AutoDesc& sigma) { return sigma.canon().kind != CK::Mobius; }

std::optional<long> inner_order(const AutoDesc& sigma, long bound) {
  if (bound <= 0) fail(ErrorCode::ZeroBound, "inner_order needs a positive bound");
  for (long k = 1; k <= bound; ++k)
    if (is_inner(auto_pow(sigma, k))) return k;
  return std::nullopt;
}

std::string describe(const AutoDesc& sigma) {
  const AutoCanon& c = sigma.canon();
  switch (c.kind) {
    case CK::Identity: return "id";
    case CK::Inner: return "in(" + c.unit.str() + ")";
    case CK::Mobius: return "x -> " + c.map.image_of_x().str();
  }
  return "?";
}

}  // namespace skewnorm
