#include "skewnorm/quatcentral.hpp"

#include <algorithm>

#include "skewnorm/dmatrix.hpp"
#include "skewnorm/error.hpp"

namespace skewnorm {

namespace {

Quat basis(int s) { return s == 0 ? Quat(1, 0, 0, 0) : Quat::unit(s); }

ExtractionConstants solve_constants() {
  // Row (s, t) holds the coordinates of v_s v_r v_t for r = 0..3.
  std::vector<std::vector<DElem>> rows;
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      std::vector<DElem> row;
      for (int r = 0; r < 4; ++r) {
        const Quat img = basis(s) * basis(r) * basis(t);
        for (int c = 0; c < 4; ++c) row.push_back(DElem::rational(AlgebraTag::HQ, img.component(c)));
      }
      rows.push_back(std::move(row));
    }
  }
  const DMatrix m(AlgebraTag::HQ, 16, rows);
  ExtractionConstants ec;
  for (int i = 0; i < 4; ++i) {
    std::vector<DElem> rhs(16, DElem::zero(AlgebraTag::HQ));
    rhs[size_t(4 * i)] = DElem::one(AlgebraTag::HQ);
    const auto x = left_solve(m, rhs);
    if (!x) fail(ErrorCode::InternalCheckFailed, "extraction system has no solution");
    for (int s = 0; s < 4; ++s) {
      for (int t = 0; t < 4; ++t) {
        const auto r = (*x)[size_t(4 * s + t)].as_rational();
        if (!r) fail(ErrorCode::InternalCheckFailed, "extraction constant is not rational");
        ec.b[size_t(i)][size_t(s)][size_t(t)] = *r;
      }
    }
  }
  return ec;
}

void require_central(const RingPtr& ring) {
  if (ring->algebra() != AlgebraTag::HQ) fail(ErrorCode::TagMismatch, "quaternion decomposition needs HQ");
  if (!ring->is_central()) fail(ErrorCode::NonCentralRing, "decomposition needs identity automorphisms");
}

SkewPoly extract_poly(const SkewPoly& p, int i) {
  const auto& ec = extraction_constants();
  SkewPoly acc(p.ring());
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) {
      const Rat& c = ec.b[size_t(i)][size_t(s)][size_t(t)];
      if (c == 0) continue;
      acc = acc + SkewPoly::constant(p.ring(), DElem(basis(s).scaled(c))) * p *
                      SkewPoly::constant(p.ring(), DElem(basis(t)));
    }
  return acc;
}

}  // namespace

const ExtractionConstants& extraction_constants() {
  static const ExtractionConstants ec = solve_constants();
  return ec;
}

Quat extract_component(const ExtractionConstants& ec, int i, const Quat& q) {
  Quat acc;
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) {
      const Rat& c = ec.b[size_t(i)][size_t(s)][size_t(t)];
      if (c != 0) acc = acc + (basis(s) * q * basis(t)).scaled(c);
    }
  return acc;
}

std::array<SkewPoly, 4> central_components(const SkewPoly& p) {
  require_central(p.ring());
  std::array<SkewPoly, 4> out{SkewPoly(p.ring()), SkewPoly(p.ring()), SkewPoly(p.ring()), SkewPoly(p.ring())};
  for (const auto& [e, c] : p.terms())
    for (int r = 0; r < 4; ++r)
      out[size_t(r)].add_term(e, DElem::rational(AlgebraTag::HQ, c.quat().component(r)));
  SkewPoly rebuilt(p.ring());
  for (int r = 0; r < 4; ++r) {
    rebuilt = rebuilt + out[size_t(r)] * SkewPoly::constant(p.ring(), DElem(basis(r)));
    if (!(extract_poly(p, r) == out[size_t(r)]))
      fail(ErrorCode::InternalCheckFailed, "extraction identity fails for component " + std::to_string(r));
  }
  if (!(rebuilt == p)) fail(ErrorCode::InternalCheckFailed, "components do not rebuild the polynomial");
  return out;
}

CentralizeResult centralize_generators(const std::vector<SkewPoly>& a) {
  CentralizeResult out;
  for (size_t k = 0; k < a.size(); ++k) {
    if (k > 0) require_same_ring(a[0].ring(), a[k].ring());
    const auto comps = central_components(a[k]);
    std::vector<std::pair<int, size_t>> rebuild;
    for (int r = 0; r < 4; ++r) {
      const SkewPoly& pr = comps[size_t(r)];
      if (pr.is_zero()) continue;
      auto it = std::find(out.central.begin(), out.central.end(), pr);
      size_t idx = size_t(it - out.central.begin());
      if (it == out.central.end()) {
        out.central.push_back(pr);
        out.source.emplace_back(k, r);
      }
      rebuild.emplace_back(r, idx);
    }
    out.rebuild.push_back(std::move(rebuild));
  }
  // a_k = sum b_idx v_r
  for (size_t k = 0; k < a.size(); ++k) {
    SkewPoly acc(a[k].ring());
    for (const auto& [r, idx] : out.rebuild[k])
      acc = acc + out.central[idx] * SkewPoly::constant(a[k].ring(), DElem(basis(r)));
    if (!(acc == a[k])) fail(ErrorCode::InternalCheckFailed, "generator not rebuilt from central components");
  }
  // b = sum beta_st v_s a_k v_t
  for (size_t m = 0; m < out.central.size(); ++m) {
    const auto& [k, r] = out.source[m];
    if (!(extract_poly(a[k], r) == out.central[m]))
      fail(ErrorCode::InternalCheckFailed, "central generator not rebuilt from the originals");
  }
  return out;
}

std::string kind_name(PointIdealResult::Kind kind) {
  switch (kind) {
    case PointIdealResult::Kind::TwoSidedReal: return "TwoSidedReal";
    case PointIdealResult::Kind::CommutingNonReal: return "CommutingNonReal";
    case PointIdealResult::Kind::NonCommuting: return "NonCommuting";
  }
  return "?";
}

PointIdealResult point_ideal_two_sided(const std::vector<Quat>& a) {
  PointIdealResult out;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * a[j] == a[j] * a[i])) {
        out.kind = PointIdealResult::Kind::NonCommuting;
        out.pair = std::make_pair(i, j);
        out.chain.push_back("a" + std::to_string(i + 1) + " a" + std::to_string(j + 1) + " = " +
                            (a[i] * a[j]).str() + " but a" + std::to_string(j + 1) + " a" + std::to_string(i + 1) +
                            " = " + (a[j] * a[i]).str());
        return out;
      }
  size_t i = 0;
  while (i < a.size() && a[i].is_real()) ++i;
  if (i == a.size()) return out;

  out.kind = PointIdealResult::Kind::CommutingNonReal;
  out.index = i;
  for (int u = 1; u <= 3; ++u) {
    if (a[i] * Quat::unit(u) == Quat::unit(u) * a[i]) continue;
    out.witness = Quat::unit(u);
    break;
  }
  const Quat& b = *out.witness;
  out.conjugate = b.inverse() * a[i] * b;
  out.constant_in_ideal = a[i] - *out.conjugate;

  // (t_i - a_i) b = b (t_i - b^{-1} a_i b), checked in the polynomial ring
  const RingPtr ring = make_central_ring(AlgebraTag::HQ, a.size());
  const SkewPoly ti = SkewPoly::variable(ring, i);
  const SkewPoly bb = SkewPoly::constant(ring, DElem(b));
  const SkewPoly fa = ti - SkewPoly::constant(ring, DElem(a[i]));
  const SkewPoly fc = ti - SkewPoly::constant(ring, DElem(*out.conjugate));
  if (!(fa * bb == bb * fc)) fail(ErrorCode::InternalCheckFailed, "conjugation chain fails");
  out.chain.push_back("(" + fa.str() + ")*" + b.str() + " = " + b.str() + "*(" + fc.str() + ")");
  out.chain.push_back("two-sided M contains " + fc.str() + " and " + fa.str());
  out.chain.push_back("so M contains the unit " + out.constant_in_ideal->str() + " and is not proper");
  return out;
}

}  // namespace skewnorm
