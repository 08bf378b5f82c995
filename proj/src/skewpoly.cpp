#include "skewnorm/skewpoly.hpp"

#include <numeric>
#include <sstream>

#include "skewnorm/error.hpp"

namespace skewnorm {

long exp_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0L); }

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  const long da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da < db;
  return a < b;
}

RingDesc::RingDesc(AlgebraTag algebra, std::vector<AutoDesc> autos)
    : algebra_(algebra), autos_(std::move(autos)) {
  for (size_t i = 0; i < autos_.size(); ++i) {
    auto alg = autos_[i].algebra();
    if (alg && *alg != algebra_)
      fail(ErrorCode::TagMismatch, "automorphism " + std::to_string(i + 1) + " is not on " + tag_name(algebra_));
    autos_[i] = autos_[i].canonical();
  }
  for (size_t i = 0; i < autos_.size(); ++i)
    for (size_t j = i + 1; j < autos_.size(); ++j)
      if (!auto_commute(autos_[i], autos_[j]))
        fail(ErrorCode::MalformedAutomorphism, "ring automorphisms " + std::to_string(i + 1) + " and " +
                                                   std::to_string(j + 1) + " do not commute");
}

bool RingDesc::is_central() const {
  for (const auto& a : autos_)
    if (!a.is_identity()) return false;
  return true;
}

AutoDesc RingDesc::twist(const ExpVec& e) const {
  std::vector<AutoDesc> parts;
  for (size_t i = 0; i < autos_.size(); ++i)
    if (e[i] != 0 && !autos_[i].is_identity()) parts.push_back(auto_pow(autos_[i], e[i]));
  if (parts.empty()) return AutoDesc::identity();
  if (parts.size() == 1) return parts.front();
  return AutoDesc::compose(std::move(parts));
}

bool operator==(const RingDesc& a, const RingDesc& b) {
  if (a.algebra_ != b.algebra_ || a.n() != b.n()) return false;
  for (size_t i = 0; i < a.n(); ++i)
    if (!auto_equal(a.autos_[i], b.autos_[i])) return false;
  return true;
}

RingPtr make_ring(AlgebraTag algebra, std::vector<AutoDesc> autos) {
  return std::make_shared<const RingDesc>(algebra, std::move(autos));
}

RingPtr make_central_ring(AlgebraTag algebra, size_t n) {
  return make_ring(algebra, std::vector<AutoDesc>(n, AutoDesc::identity()));
}

RingPtr make_constant_ring(AlgebraTag algebra, size_t n, const AutoDesc& sigma) {
  return make_ring(algebra, std::vector<AutoDesc>(n, sigma));
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) fail(ErrorCode::RingMismatch, "operands live in different skew polynomial rings");
}

SkewPoly::SkewPoly(RingPtr ring) : ring_(std::move(ring)) {}

SkewPoly SkewPoly::constant(RingPtr ring, const DElem& c) {
  SkewPoly f(ring);
  f.add_term(ExpVec(f.nvars(), 0), c);
  return f;
}

SkewPoly SkewPoly::variable(RingPtr ring, size_t i) {
  ExpVec e(ring->n(), 0);
  if (i >= e.size()) fail(ErrorCode::SchemaViolation, "variable index out of range");
  e[i] = 1;
  const AlgebraTag tag = ring->algebra();
  return monomial(std::move(ring), std::move(e), DElem::one(tag));
}

SkewPoly SkewPoly::monomial(RingPtr ring, ExpVec e, const DElem& c) {
  SkewPoly f(std::move(ring));
  f.add_term(e, c);
  return f;
}

DElem SkewPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? DElem::zero(algebra()) : it->second;
}

void SkewPoly::add_term(const ExpVec& e, const DElem& c) {
  if (e.size() != nvars()) fail(ErrorCode::SchemaViolation, "exponent vector has the wrong length");
  for (long x : e)
    if (x < 0) fail(ErrorCode::SchemaViolation, "negative exponent in a skew polynomial");
  if (c.tag() != algebra()) fail(ErrorCode::TagMismatch, "coefficient from the wrong algebra");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

SkewPoly SkewPoly::operator-() const {
  SkewPoly out(ring_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f.ring_, g.ring_);
  SkewPoly out = f;
  for (const auto& [e, c] : g.terms_) out.add_term(e, c);
  return out;
}

SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f.ring_, g.ring_);
  SkewPoly out = f;
  for (const auto& [e, c] : g.terms_) out.add_term(e, -c);
  return out;
}

SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
  require_same_ring(f.ring_, g.ring_);
  SkewPoly out(f.ring_);
  if (f.is_zero() || g.is_zero()) return out;
  const size_t n = f.nvars();
  std::vector<DElem> twisted;
  ExpVec sum(n);
  for (const auto& [ef, cf] : f.terms_) {
    const AutoDesc sigma = f.ring_->twist(ef);
    const bool trivial = sigma.is_identity();
    for (const auto& [eg, cg] : g.terms_) {
      for (size_t i = 0; i < n; ++i) sum[i] = ef[i] + eg[i];
      out.add_term(sum, trivial ? cf * cg : cf * auto_apply(sigma, cg));
    }
  }
  return out;
}

bool operator==(const SkewPoly& f, const SkewPoly& g) {
  return same_ring(f.ring_, g.ring_) && f.terms_ == g.terms_;
}

SkewPoly SkewPoly::reinterpret(RingPtr ring) const {
  if (ring->algebra() != algebra() || ring->n() != nvars())
    fail(ErrorCode::RingMismatch, "cannot reinterpret across algebras or variable counts");
  SkewPoly out(std::move(ring));
  out.terms_ = terms_;
  return out;
}

std::string SkewPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << " + ";
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "t" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out << "(" << c.str() << ")";
    else if (c.is_one()) out << mono;
    else out << "(" << c.str() << ")*" << mono;
  }
  return out.str();
}

SkewPoly scale_left(const DElem& c, const SkewPoly& f) {
  SkewPoly out(f.ring());
  for (const auto& [e, a] : f.terms()) out.add_term(e, c * a);
  return out;
}

SkewPoly pow(const SkewPoly& f, unsigned k) {
  SkewPoly result = SkewPoly::constant(f.ring(), DElem::one(f.algebra()));
  for (unsigned i = 0; i < k; ++i) result = result * f;
  return result;
}

long total_degree(const SkewPoly& f) {
  if (f.is_zero()) return -1;
  return exp_degree(f.terms().rbegin()->first);
}

long degree_in(const SkewPoly& f, size_t i) {
  if (i >= f.nvars()) fail(ErrorCode::SchemaViolation, "variable index out of range");
  long best = -1;
  for (const auto& [e, c] : f.terms()) best = std::max(best, e[i]);
  return best;
}

bool is_homogeneous(const SkewPoly& f) {
  if (f.is_zero()) return true;
  const long d = total_degree(f);
  for (const auto& [e, c] : f.terms())
    if (exp_degree(e) != d) return false;
  return true;
}

SkewPoly leading_form(const SkewPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "leading form of the zero polynomial");
  const long m = total_degree(f);
  SkewPoly out(make_central_ring(f.algebra(), f.nvars()));
  for (const auto& [e, c] : f.terms())
    if (exp_degree(e) == m) out.add_term(e, c);
  return out;
}

bool is_monic_in_last(const SkewPoly& f) {
  if (f.is_zero()) return false;
  const size_t n = f.nvars();
  if (n == 0) return f.coeff({}).is_one();
  const long m = degree_in(f, n - 1);
  ExpVec top(n, 0);
  top[n - 1] = m;
  for (const auto& [e, c] : f.terms()) {
    if (e[n - 1] != m) continue;
    if (e != top || !c.is_one()) return false;
  }
  return true;
}

RingPtr drop_last(const RingPtr& ring) {
  if (ring->n() == 0) fail(ErrorCode::SchemaViolation, "ring has no variables to drop");
  std::vector<AutoDesc> autos(ring->autos().begin(), ring->autos().end() - 1);
  return make_ring(ring->algebra(), std::move(autos));
}

std::map<long, SkewPoly> coefficients_in_last(const SkewPoly& f) {
  const RingPtr sub = drop_last(f.ring());
  std::map<long, SkewPoly> out;
  for (const auto& [e, c] : f.terms()) {
    ExpVec head(e.begin(), e.end() - 1);
    out.try_emplace(e.back(), sub).first->second.add_term(head, c);
  }
  return out;
}

SkewPoly join_last(const RingPtr& ring, const std::map<long, SkewPoly>& parts) {
  SkewPoly out(ring);
  for (const auto& [k, r] : parts) {
    if (r.nvars() + 1 != ring->n()) fail(ErrorCode::RingMismatch, "coefficient ring has the wrong size");
    for (const auto& [e, c] : r.terms()) {
      ExpVec full = e;
      full.push_back(k);
      out.add_term(full, c);
    }
  }
  return out;
}

std::pair<SkewPoly, SkewPoly> divmod_monic_last(const SkewPoly& p, const SkewPoly& g) {
  require_same_ring(p.ring(), g.ring());
  if (!is_monic_in_last(g)) fail(ErrorCode::InternalCheckFailed, "divisor is not monic in the last variable");
  const size_t n = p.nvars();
  SkewPoly quo(p.ring()), rem = p;
  if (n == 0) {
    // g = 1
    return {p, SkewPoly(p.ring())};
  }
  const long m = degree_in(g, n - 1);
  while (true) {
    // Largest term of rem whose t_n exponent reaches m.
    const ExpVec* pick = nullptr;
    for (auto it = rem.terms().rbegin(); it != rem.terms().rend(); ++it)
      if (it->first[n - 1] >= m) { pick = &it->first; break; }
    if (!pick) break;
    ExpVec shift = *pick;
    shift[n - 1] -= m;
    SkewPoly q = SkewPoly::monomial(p.ring(), shift, rem.coeff(*pick));
    rem = rem - q * g;
    quo = quo + q;
  }
  return {quo, rem};
}

SkewPoly dehomogenize_last(const SkewPoly& f) {
  if (f.nvars() == 0) fail(ErrorCode::SchemaViolation, "nothing to dehomogenize");
  SkewPoly out(make_central_ring(f.algebra(), f.nvars() - 1));
  for (const auto& [e, c] : f.terms()) out.add_term(ExpVec(e.begin(), e.end() - 1), c);
  return out;
}

SkewPoly constant_like(const SkewPoly& exemplar, const DElem& c) {
  return SkewPoly::constant(exemplar.ring(), c);
}

std::vector<AutoDesc> term_twists(const SkewPoly& f) {
  std::vector<AutoDesc> out;
  for (const auto& [e, c] : f.terms()) out.push_back(compose2(inner_twist(c), f.ring()->twist(e)));
  return out;
}

std::vector<std::pair<BasisKey, DElem>> coordinates(const SkewPoly& f) {
  std::vector<std::pair<BasisKey, DElem>> out;
  for (const auto& [e, c] : f.terms()) out.emplace_back(e, c);
  return out;
}

}  // namespace skewnorm
