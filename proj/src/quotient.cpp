#include "skewnorm/quotient.hpp"

#include <sstream>

#include "skewnorm/error.hpp"
#include "skewnorm/subst.hpp"

namespace skewnorm {

namespace {

void add_into(std::map<long, DElem>& m, long k, const DElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) m.erase(it);
}

struct Term {
  int which;  // 0 constant, 1 or 2
  long k;
  DElem c;
};

std::vector<Term> terms_of(const QuotientElem& f) {
  std::vector<Term> out;
  if (!f.c0().is_zero()) out.push_back({0, 0, f.c0()});
  for (const auto& [k, c] : f.pos1()) out.push_back({1, k, c});
  for (const auto& [k, c] : f.pos2()) out.push_back({2, k, c});
  return out;
}

}  // namespace

QuotientElem::QuotientElem(RingPtr ring) : ring_(std::move(ring)), c0_(DElem::zero(ring_->algebra())) {
  if (ring_->n() != 2) fail(ErrorCode::RingMismatch, "the quotient ring has exactly two variables");
}

QuotientElem QuotientElem::constant(RingPtr ring, const DElem& c) { return monomial(std::move(ring), 0, 0, c); }

QuotientElem QuotientElem::monomial(RingPtr ring, int which, long k, const DElem& c) {
  QuotientElem out(std::move(ring));
  out.add_term(which, k, c);
  return out;
}

QuotientElem QuotientElem::project(const SkewPoly& f) {
  QuotientElem out(f.ring());
  for (const auto& [e, c] : f.terms()) {
    if (e[0] > 0 && e[1] > 0) continue;
    if (e[0] > 0) out.add_term(1, e[0], c);
    else out.add_term(2, e[1], c);
  }
  return out;
}

long QuotientElem::degree() const {
  if (is_zero()) return -1;
  long d = 0;
  if (!pos1_.empty()) d = std::max(d, pos1_.rbegin()->first);
  if (!pos2_.empty()) d = std::max(d, pos2_.rbegin()->first);
  return d;
}

void QuotientElem::add_term(int which, long k, const DElem& c) {
  if (c.tag() != algebra()) fail(ErrorCode::TagMismatch, "coefficient from the wrong algebra");
  if (k < 0 || which < 0 || which > 2) fail(ErrorCode::SchemaViolation, "bad quotient monomial");
  if (k == 0 || which == 0) {
    c0_ = c0_ + c;
    return;
  }
  add_into(which == 1 ? pos1_ : pos2_, k, c);
}

QuotientElem QuotientElem::operator-() const {
  QuotientElem out(ring_);
  for (const auto& t : terms_of(*this)) out.add_term(t.which, t.k, -t.c);
  return out;
}

QuotientElem operator+(const QuotientElem& f, const QuotientElem& g) {
  require_same_ring(f.ring_, g.ring_);
  QuotientElem out = f;
  for (const auto& t : terms_of(g)) out.add_term(t.which, t.k, t.c);
  return out;
}

QuotientElem operator-(const QuotientElem& f, const QuotientElem& g) { return f + (-g); }

QuotientElem operator*(const QuotientElem& f, const QuotientElem& g) {
  require_same_ring(f.ring_, g.ring_);
  QuotientElem out(f.ring_);
  const auto gt = terms_of(g);
  for (const auto& a : terms_of(f)) {
    const AutoDesc s = a.which == 0 ? AutoDesc::identity() : auto_pow(f.ring_->auto_at(size_t(a.which - 1)), a.k);
    for (const auto& b : gt) {
      if (a.which != 0 && b.which != 0 && a.which != b.which) continue;
      out.add_term(a.which != 0 ? a.which : b.which, a.k + b.k, a.c * auto_apply(s, b.c));
    }
  }
  return out;
}

bool operator==(const QuotientElem& f, const QuotientElem& g) {
  return same_ring(f.ring_, g.ring_) && f.c0_ == g.c0_ && f.pos1_ == g.pos1_ && f.pos2_ == g.pos2_;
}

std::string QuotientElem::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_of(*this)) {
    if (!first) out << " + ";
    first = false;
    if (t.which == 0) {
      out << "(" << t.c.str() << ")";
      continue;
    }
    if (!t.c.is_one()) out << "(" << t.c.str() << ")*";
    out << "z" << t.which;
    if (t.k != 1) out << "^" << t.k;
  }
  return out.str();
}

QuotientElem constant_like(const QuotientElem& exemplar, const DElem& c) {
  return QuotientElem::constant(exemplar.ring(), c);
}

std::vector<AutoDesc> term_twists(const QuotientElem& f) {
  std::vector<AutoDesc> out;
  for (const auto& t : terms_of(f)) {
    const AutoDesc s = t.which == 0 ? AutoDesc::identity() : auto_pow(f.ring()->auto_at(size_t(t.which - 1)), t.k);
    out.push_back(compose2(inner_twist(t.c), s));
  }
  return out;
}

std::vector<std::pair<BasisKey, DElem>> coordinates(const QuotientElem& f) {
  std::vector<std::pair<BasisKey, DElem>> out;
  for (const auto& t : terms_of(f)) {
    BasisKey key{0, 0};
    if (t.which != 0) key[size_t(t.which - 1)] = t.k;
    out.emplace_back(key, t.c);
  }
  return out;
}

std::string kind_name(DependenceWitness::Kind kind) {
  switch (kind) {
    case DependenceWitness::Kind::ZeroMonomial: return "zero_monomial";
    case DependenceWitness::Kind::EqualMonomials: return "equal_monomials";
    case DependenceWitness::Kind::Nullspace: return "nullspace";
  }
  return "?";
}

long counting_bound(long d) {
  if (d < 0) fail(ErrorCode::SchemaViolation, "negative degree");
  long N = 1;
  while ((N + 2) * (N + 1) / 2 <= 2 * d * N + 1) ++N;
  return N;
}

DependenceWitness find_dependence(const QuotientElem& x1, const QuotientElem& x2) {
  require_same_ring(x1.ring(), x2.ring());
  if (!(x1 * x2 == x2 * x1)) fail(ErrorCode::CommutationRequired, "find_dependence needs commuting inputs");
  const AlgebraTag tag = x1.algebra();
  const long d = std::max(x1.degree(), x2.degree());
  DependenceWitness w{DependenceWitness::Kind::ZeroMonomial, {}, counting_bound(std::max(d, 0L)), d};

  // Degree by degree: a vanishing monomial, then two equal monomials, then a
  // left linear relation over the basis 1, z1..z1^{dN}, z2..z2^{dN}.
  const long top = std::max(d, 0L) * w.N;
  const QuotientElem one = constant_like(x1, DElem::one(tag));
  std::vector<QuotientElem> p1{one}, p2{one};
  std::vector<std::pair<long, long>> mons;
  std::vector<QuotientElem> vals;
  LeftDependenceTracker tracker(tag, size_t(2 * top + 1));
  auto column = [top](const BasisKey& key) { return size_t(key[0] > 0 ? key[0] : key[1] > 0 ? top + key[1] : 0); };
  for (long s = 0; s <= w.N; ++s) {
    if (s > 0) {
      p1.push_back(p1.back() * x1);
      p2.push_back(p2.back() * x2);
    }
    const size_t first = vals.size();
    for (long k1 = s; k1 >= 0; --k1) {
      mons.emplace_back(k1, s - k1);
      vals.push_back(p1[size_t(k1)] * p2[size_t(s - k1)]);
    }
    for (size_t i = first; i < vals.size(); ++i) {
      if (vals[i].is_zero()) {
        w.combo.emplace(mons[i], DElem::one(tag));
        return w;
      }
    }
    for (size_t j = first; j < vals.size(); ++j) {
      for (size_t i = 0; i < j; ++i) {
        if (vals[i] == vals[j]) {
          w.kind = DependenceWitness::Kind::EqualMonomials;
          w.combo.emplace(mons[i], DElem::one(tag));
          w.combo.emplace(mons[j], -DElem::one(tag));
          return w;
        }
      }
    }
    for (size_t i = first; i < vals.size(); ++i) {
      std::vector<DElem> row(size_t(2 * top + 1), DElem::zero(tag));
      for (const auto& [key, c] : coordinates(vals[i])) row[column(key)] = c;
      auto combo = tracker.add_row(std::move(row));
      if (!combo) continue;
      w.kind = DependenceWitness::Kind::Nullspace;
      QuotientElem check(x1.ring());
      for (size_t r = 0; r < combo->size(); ++r) {
        if ((*combo)[r].is_zero()) continue;
        w.combo.emplace(mons[r], (*combo)[r]);
        check = check + constant_like(x1, (*combo)[r]) * vals[r];
      }
      if (!check.is_zero()) fail(ErrorCode::InternalCheckFailed, "dependence witness does not vanish");
      return w;
    }
  }
  fail(ErrorCode::InternalCheckFailed, "counting bound produced no relation");
}

SkewPoly witness_polynomial(const DependenceWitness& w, const RingPtr& formal) {
  if (formal->n() != 2) fail(ErrorCode::RingMismatch, "witness polynomial needs two variables");
  SkewPoly f(formal);
  for (const auto& [e, c] : w.combo) f.add_term({e.first, e.second}, c);
  return f;
}

DependenceOracle<QuotientElem> quotient_dependence_oracle(long max_degree) {
  const auto fallback = linear_dependence_oracle<QuotientElem>(max_degree);
  return [fallback](const std::vector<QuotientElem>& z, const RingPtr& formal) -> OracleAnswer {
    if (z.size() != 2) return fallback(z, formal);
    const auto w = find_dependence(z[0], z[1]);
    return {witness_polynomial(w, formal), 0};
  };
}

QuotientWitness quotient_witness(const RingPtr& ring, long k1, long k2, const DElem& c) {
  if (ring->n() != 2) fail(ErrorCode::RingMismatch, "the quotient ring has exactly two variables");
  if (k1 < 1 || k2 < 1) fail(ErrorCode::WitnessHypothesisFails, "k1 and k2 must be positive");
  if (c.is_zero()) fail(ErrorCode::WitnessHypothesisFails, "c must be nonzero");
  const AutoDesc& s1 = ring->auto_at(0);
  const AutoDesc& s2 = ring->auto_at(1);
  const AutoDesc composite = compose2(auto_pow(s1, k1), auto_pow(s2, -k2));
  if (!auto_equal(composite, AutoDesc::inner(c)))
    fail(ErrorCode::WitnessHypothesisFails,
         "s1^k1 o s2^-k2 = " + describe(composite) + " differs from " + describe(AutoDesc::inner(c)));
  const AlgebraTag tag = ring->algebra();
  const DElem one = DElem::one(tag);
  const QuotientElem z1 = QuotientElem::z(ring, 1), z2 = QuotientElem::z(ring, 2);
  QuotientElem u = QuotientElem::monomial(ring, 1, k1, one) + QuotientElem::monomial(ring, 2, k2, c);
  QuotientWitness out{u, auto_pow(s1, k1).canonical(), false, false, {}};
  if (!auto_equal(check_automorphic(u), out.twist))
    fail(ErrorCode::InternalCheckFailed, "u does not twist by s1^k1");
  out.z1_integral = QuotientElem::monomial(ring, 1, k1 + 1, one) == u * z1;
  out.z2_integral = QuotientElem::monomial(ring, 2, k2 + 1, one) == constant_like(u, c.inverse()) * u * z2;
  if (!out.z1_integral || !out.z2_integral) fail(ErrorCode::InternalCheckFailed, "integrality relation fails");
  QuotientElem p = constant_like(u, one);
  for (long j = 1; j <= 8; ++j) {
    p = p * u;
    const long top = p.pos1().empty() ? 0 : p.pos1().rbegin()->first;
    if (top != k1 * j) fail(ErrorCode::InternalCheckFailed, "unexpected z1-degree of a power of u");
    out.z1_degrees.push_back(top);
  }
  return out;
}

QuotientDecision decide_quotient_normalizable(const AutoDesc& s1, const AutoDesc& s2, long bound) {
  QuotientDecision out;
  out.bound = bound;
  for (long s = 2; s <= 2 * bound; ++s) {
    for (long k1 = std::min(bound, s - 1); k1 >= 1 && s - k1 <= bound; --k1) {
      const long k2 = s - k1;
      const AutoCanon canon = compose2(auto_pow(s1, k1), auto_pow(s2, -k2)).canon();
      if (canon.kind == AutoCanon::Kind::Mobius) continue;
      out.found = true;
      out.k1 = k1;
      out.k2 = k2;
      if (canon.kind == AutoCanon::Kind::Inner) out.c = DElem(canon.unit);
      else out.c = DElem::one(s1.algebra().value_or(s2.algebra().value_or(AlgebraTag::QX)));
      return out;
    }
  }
  try {
    const Rat a = shift_amount(s1), b = shift_amount(s2);
    // k1 a = k2 b has a positive solution iff both vanish or both are nonzero with one sign
    const bool solvable = (a == 0 && b == 0) || (a != 0 && b != 0 && sgn(a) == sgn(b));
    out.proven_not_normalizable = !solvable;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedAutoShape) throw;
  }
  return out;
}

}  // namespace skewnorm
