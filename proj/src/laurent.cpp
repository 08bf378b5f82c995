#include "skewnorm/laurent.hpp"

#include <sstream>

#include "skewnorm/error.hpp"
#include "skewnorm/subst.hpp"

namespace skewnorm {

LaurentPoly::LaurentPoly(AlgebraTag algebra, AutoDesc sigma) : algebra_(algebra), sigma_(sigma.canonical()) {
  auto alg = sigma.algebra();
  if (alg && *alg != algebra)
    fail(ErrorCode::TagMismatch, "Laurent automorphism is not on " + tag_name(algebra));
}

LaurentPoly LaurentPoly::monomial(AlgebraTag algebra, const AutoDesc& sigma, long k, const DElem& c) {
  LaurentPoly f(algebra, sigma);
  f.add_term(k, c);
  return f;
}

LaurentPoly LaurentPoly::from_skewpoly(const SkewPoly& f) {
  if (f.nvars() != 1) fail(ErrorCode::RingMismatch, "Laurent embedding needs a one-variable ring");
  LaurentPoly out(f.algebra(), f.ring()->auto_at(0));
  for (const auto& [e, c] : f.terms()) out.add_term(e[0], c);
  return out;
}

long LaurentPoly::min_degree() const {
  if (terms_.empty()) fail(ErrorCode::ZeroElement, "degree of zero");
  return terms_.begin()->first;
}

long LaurentPoly::max_degree() const {
  if (terms_.empty()) fail(ErrorCode::ZeroElement, "degree of zero");
  return terms_.rbegin()->first;
}

DElem LaurentPoly::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? DElem::zero(algebra_) : it->second;
}

void LaurentPoly::add_term(long k, const DElem& c) {
  if (c.tag() != algebra_) fail(ErrorCode::TagMismatch, "coefficient from the wrong algebra");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void require_same(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.algebra() != g.algebra() || !auto_equal(f.sigma(), g.sigma()))
    fail(ErrorCode::RingMismatch, "Laurent operands live in different rings");
}

}  // namespace

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(algebra_, sigma_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  require_same(f, g);
  LaurentPoly out = f;
  for (const auto& [k, c] : g.terms_) out.add_term(k, c);
  return out;
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) {
  require_same(f, g);
  LaurentPoly out = f;
  for (const auto& [k, c] : g.terms_) out.add_term(k, -c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  require_same(f, g);
  LaurentPoly out(f.algebra_, f.sigma_);
  const bool trivial = f.sigma_.is_identity();
  for (const auto& [kf, cf] : f.terms_) {
    const AutoDesc s = trivial ? AutoDesc::identity() : auto_pow(f.sigma_, kf);
    for (const auto& [kg, cg] : g.terms_) out.add_term(kf + kg, cf * (trivial ? cg : auto_apply(s, cg)));
  }
  return out;
}

bool operator==(const LaurentPoly& f, const LaurentPoly& g) {
  return f.algebra_ == g.algebra_ && auto_equal(f.sigma_, g.sigma_) && f.terms_ == g.terms_;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    const auto& [k, c] = *it;
    if (k == 0) {
      out << "(" << c.str() << ")";
      continue;
    }
    if (!c.is_one()) out << "(" << c.str() << ")*";
    out << "t";
    if (k != 1) out << "^" << k;
  }
  return out.str();
}

LaurentPoly constant_like(const LaurentPoly& exemplar, const DElem& c) {
  return LaurentPoly::monomial(exemplar.algebra(), exemplar.sigma(), 0, c);
}

std::vector<AutoDesc> term_twists(const LaurentPoly& f) {
  std::vector<AutoDesc> out;
  for (const auto& [k, c] : f.terms()) out.push_back(compose2(inner_twist(c), auto_pow(f.sigma(), k)));
  return out;
}

std::vector<std::pair<BasisKey, DElem>> coordinates(const LaurentPoly& f) {
  std::vector<std::pair<BasisKey, DElem>> out;
  for (const auto& [k, c] : f.terms()) out.emplace_back(BasisKey{k}, c);
  return out;
}

std::string kind_name(LaurentClassification::Kind kind) {
  switch (kind) {
    case LaurentClassification::Kind::Monomial: return "Monomial";
    case LaurentClassification::Kind::MultiTerm: return "MultiTerm";
    case LaurentClassification::Kind::NotAutomorphic: return "NotAutomorphic";
  }
  return "?";
}

LaurentClassification classify_automorphic(const LaurentPoly& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "cannot classify the zero element");
  LaurentClassification out{LaurentClassification::Kind::NotAutomorphic, std::nullopt, std::nullopt, 0, {}, {}};
  for (const auto& [k, c] : a.terms())
    out.term_twists.emplace_back(k, compose2(inner_twist(c), auto_pow(a.sigma(), k)).canonical());
  const auto& first = out.term_twists.front();
  for (size_t i = 1; i < out.term_twists.size(); ++i) {
    if (!auto_equal(first.second, out.term_twists[i].second)) {
      out.conflict = std::make_pair(first.first, out.term_twists[i].first);
      return out;
    }
  }
  if (!satisfies_twist(a, first.second))
    fail(ErrorCode::InternalCheckFailed, "common twist fails the generator check");
  out.twist = first.second;
  if (a.terms().size() == 1) {
    out.kind = LaurentClassification::Kind::Monomial;
    out.coefficient = a.terms().begin()->second;
    out.exponent = a.terms().begin()->first;
  } else {
    out.kind = LaurentClassification::Kind::MultiTerm;
  }
  return out;
}

LaurentPoly evaluate_ut(const SkewPoly& rel, const LaurentPoly& u, const LaurentPoly& t) {
  if (rel.nvars() != 2) fail(ErrorCode::SchemaViolation, "relation must have two variables (u, t)");
  LaurentPoly acc = constant_like(t, DElem::zero(t.algebra()));
  const LaurentPoly one = constant_like(t, DElem::one(t.algebra()));
  for (const auto& [e, c] : rel.terms())
    acc = acc + constant_like(t, c) * power_of<LaurentPoly>(u, e[0], one) * power_of<LaurentPoly>(t, e[1], one);
  return acc;
}

LaurentWitness finite_inner_order_witness(const AutoDesc& sigma, long k, const DElem& c) {
  if (k < 1) fail(ErrorCode::WitnessHypothesisFails, "k must be positive");
  if (c.is_zero()) fail(ErrorCode::WitnessHypothesisFails, "c must be nonzero");
  const AlgebraTag tag = c.tag();
  const AutoDesc inner_c = AutoDesc::inner(c);
  if (!auto_equal(auto_pow(sigma, k), inner_c))
    fail(ErrorCode::WitnessHypothesisFails, "sigma^" + std::to_string(k) + " = " + describe(auto_pow(sigma, k)) +
                                                " differs from " + describe(inner_c));
  const DElem cinv = c.inverse();
  const DElem cm2 = cinv * cinv;
  LaurentPoly u(tag, sigma);
  u.add_term(-k, DElem::one(tag));
  u.add_term(k, cm2);
  const AutoDesc expected = AutoDesc::inner(cinv);
  const AutoDesc tw = check_automorphic(u);
  if (!auto_equal(tw, expected))
    fail(ErrorCode::InternalCheckFailed, "u twists by " + describe(tw) + " instead of " + describe(expected));
  RingPtr ring = make_ring(tag, {expected, sigma});
  SkewPoly rel(ring);
  rel.add_term({0, 2 * k}, cm2);
  rel.add_term({1, k}, -DElem::one(tag));
  rel.add_term({0, 0}, DElem::one(tag));
  const LaurentPoly t = LaurentPoly::monomial(tag, sigma, 1, DElem::one(tag));
  if (!evaluate_ut(rel, u, t).is_zero()) fail(ErrorCode::InternalCheckFailed, "witness relation does not vanish");
  LaurentWitness out{u, expected, rel, u * t == t * u, {}};
  LaurentPoly p = constant_like(u, DElem::one(tag));
  for (int j = 1; j <= 8; ++j) {
    p = p * u;
    out.low_degrees.push_back(p.min_degree());
    if (p.min_degree() != -k * j) fail(ErrorCode::InternalCheckFailed, "unexpected lowest degree of a power of u");
  }
  return out;
}

InversionCheck invert_via_integral_relation(const std::vector<SkewPoly>& coeffs) {
  if (coeffs.empty()) fail(ErrorCode::SchemaViolation, "need m >= 1 coefficients");
  const RingPtr& ring = coeffs.front().ring();
  for (const auto& f : coeffs) require_same_ring(ring, f.ring());
  const AlgebraTag tag = ring->algebra();
  const LaurentPoly t = LaurentPoly::from_skewpoly(SkewPoly::variable(ring, 0));
  const LaurentPoly one = constant_like(t, DElem::one(tag));
  const long m = static_cast<long>(coeffs.size());
  LaurentPoly cand = constant_like(t, DElem::zero(tag));
  for (long i = 0; i < m; ++i)
    cand = cand - LaurentPoly::from_skewpoly(coeffs[static_cast<size_t>(i)]) * power_of<LaurentPoly>(t, m - 1 - i, one);
  LaurentPoly prod = cand * t;
  return {prod == one, cand, prod};
}

}  // namespace skewnorm
