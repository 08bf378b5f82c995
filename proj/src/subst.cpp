#include "skewnorm/subst.hpp"

namespace skewnorm {

DElem evaluate_central(const SkewPoly& f, const std::vector<DElem>& point) {
  if (point.size() != f.nvars()) fail(ErrorCode::SchemaViolation, "point has the wrong number of coordinates");
  for (const auto& p : point)
    if (!is_central(p)) fail(ErrorCode::NotInF, "evaluation point is not central: " + p.str());
  DElem acc = DElem::zero(f.algebra());
  for (const auto& [e, c] : f.terms()) {
    DElem term = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (long k = 0; k < e[i]; ++k) term = term * point[i];
    acc = acc + term;
  }
  return acc;
}

bool in_fixed_center(const RingDesc& ring, const DElem& a) {
  if (a.tag() != ring.algebra() || !is_central(a)) return false;
  for (const auto& s : ring.autos())
    if (!is_fixed(s, a)) return false;
  return true;
}

SkewPoly linear_shift(const SkewPoly& f, const std::vector<DElem>& a) {
  const RingPtr& ring = f.ring();
  const size_t n = ring->n();
  if (n == 0) {
    if (!a.empty()) fail(ErrorCode::SchemaViolation, "no variables to shift");
    return f;
  }
  if (a.size() + 1 != n) fail(ErrorCode::SchemaViolation, "linear shift needs n-1 parameters");
  for (size_t i = 0; i < a.size(); ++i)
    if (!in_fixed_center(*ring, a[i]))
      fail(ErrorCode::NotInF, "shift parameter " + std::to_string(i + 1) + " = " + a[i].str() +
                                  " is not central and fixed");
  const SkewPoly last = SkewPoly::variable(ring, n - 1);
  std::vector<AutomorphicWitness<SkewPoly>> point;
  for (size_t i = 0; i < n; ++i) {
    SkewPoly v = SkewPoly::variable(ring, i);
    if (i + 1 < n) v = v + scale_left(a[i], last);
    point.push_back({v, ring->auto_at(i)});
  }
  return substitute<SkewPoly>(f, point, f);
}

std::vector<long> dadic_exponents(size_t n, long d) {
  std::vector<long> p(n == 0 ? 0 : n - 1);
  long acc = 1;
  for (size_t i = p.size(); i-- > 0;) {
    acc *= d;
    p[i] = acc;
  }
  return p;
}

SkewPoly power_shift_exponents(const SkewPoly& f, const std::vector<long>& p) {
  const RingPtr& ring = f.ring();
  if (!ring->is_central()) fail(ErrorCode::NonCentralRing, "power shift needs identity automorphisms");
  const size_t n = ring->n();
  if (n == 0) return f;
  if (p.size() + 1 != n) fail(ErrorCode::SchemaViolation, "power shift needs n-1 exponents");
  const SkewPoly last = SkewPoly::variable(ring, n - 1);
  std::vector<SkewPoly> point;
  for (size_t i = 0; i < n; ++i) {
    SkewPoly v = SkewPoly::variable(ring, i);
    if (i + 1 < n) v = v + pow(last, static_cast<unsigned>(p[i]));
    point.push_back(v);
  }
  return evaluate_unchecked<SkewPoly>(f, std::span<const SkewPoly>(point), f);
}

SkewPoly power_shift(const SkewPoly& f, long d) {
  if (!f.ring()->is_central()) fail(ErrorCode::NonCentralRing, "power shift needs identity automorphisms");
  if (d < 2) fail(ErrorCode::DegreeBoundViolated, "power shift needs d >= 2");
  if (d < 1 + total_degree(f))
    fail(ErrorCode::DegreeBoundViolated, "d = " + std::to_string(d) + " is below 1 + deg f = " +
                                             std::to_string(1 + total_degree(f)));
  return power_shift_exponents(f, dadic_exponents(f.nvars(), d));
}

}  // namespace skewnorm
