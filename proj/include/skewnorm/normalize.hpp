#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewnorm/dmatrix.hpp"
#include "skewnorm/subst.hpp"

namespace skewnorm {

/// Finite grids A_1 x ... x A_d of rationals, or unbounded search over Q when
/// `grids` is empty.
struct PointSearchSpec {
  std::vector<std::vector<Rat>> grids;
  bool incremental() const { return grids.empty(); }
};

/// 0, 1, -1, 2, -2, ...
Rat spiral(size_t index);

/// Graded-lex greatest exponent among the terms of maximal total degree.
ExpVec nullstellensatz_target(const SkewPoly& f);

/// A point of Q^n where f (read with central variables) does not vanish.
std::vector<Rat> find_nonvanishing(const SkewPoly& f, const PointSearchSpec& spec);

/// (a_1, ..., a_{n-1}, 1) with f nonzero there; f homogeneous. Grids, when
/// given, cover the first n-1 coordinates.
std::vector<Rat> find_projective_point(const SkewPoly& f, const PointSearchSpec& spec);

enum class MonicMethod { Linear, DAdic };

struct MonicizationResult {
  MonicMethod method;
  DElem scale;
  std::vector<Rat> shift;    // linear: a_1..a_{n-1}
  std::vector<long> powers;  // d-adic: d^{n-1}, ..., d
  long d = 0;
  SkewPoly g;
  long m = 0;
};

MonicizationResult monicize_linear(const SkewPoly& f, const PointSearchSpec& search = {});
MonicizationResult monicize_dadic(const SkewPoly& f);

/// The variable change of a monicization applied to p, without the scale.
SkewPoly apply_transform(const MonicizationResult& mr, const SkewPoly& p);

enum class NormalizeMode { ConstantTuple, Central };

std::string mode_name(NormalizeMode mode);
NormalizeMode parse_mode(const std::string& name);

/// A nonzero relation f with f(elements) = 0, or a bound up to which none exists.
struct OracleAnswer {
  std::optional<SkewPoly> relation;
  long independent_up_to = 0;
};

/// Receives commuting elements and the formal ring whose variables stand for
/// them.
template <class S>
using DependenceOracle = std::function<OracleAnswer(const std::vector<S>&, const RingPtr&)>;

template <class S>
struct NormalizationStep {
  std::vector<S> generators;  // before the transform
  SkewPoly relation;
  MonicizationResult transform;
  S integral;  // the last transformed generator
};

template <class S>
struct ModuleGen {
  std::vector<long> exponents;  // one per step
  S element;
};

template <class S>
struct NormalizationCert {
  NormalizeMode mode;
  AutoDesc twist;
  std::vector<NormalizationStep<S>> steps;  // outermost first
  std::vector<AutomorphicWitness<S>> independent_gens;
  long independent_up_to = 0;
  std::vector<ModuleGen<S>> module_gens;
};

namespace detail {

inline RingPtr formal_ring(NormalizeMode mode, AlgebraTag alg, size_t k, const AutoDesc& twist) {
  if (mode == NormalizeMode::Central) return make_central_ring(alg, k);
  return make_constant_ring(alg, k, twist);
}

/// All exponent vectors of length n and total degree <= bound, graded-lex.
std::vector<ExpVec> exponents_up_to(size_t n, long bound);

/// Values z^E for each E in `exps`; reuses z^{E - e_j} when it came earlier.
template <RingElement S>
std::vector<S> monomial_values(const std::vector<S>& z, const std::vector<ExpVec>& exps, const S& one) {
  std::map<ExpVec, S> cache;
  std::vector<S> out;
  for (const auto& e : exps) {
    size_t j = e.size();
    for (size_t i = e.size(); i-- > 0;)
      if (e[i] > 0) { j = i; break; }
    S val = one;
    if (j < e.size()) {
      ExpVec prev = e;
      --prev[j];
      if (auto it = cache.find(prev); it != cache.end()) {
        val = it->second * z[j];
      } else {
        for (size_t i = 0; i < e.size(); ++i) val = val * power_of<S>(z[i], e[i], one);
      }
    }
    cache.emplace(e, val);
    out.push_back(val);
  }
  return out;
}

/// Coordinate matrix of the elements against the union of their supports.
template <RingElement S>
DMatrix coordinate_matrix(const std::vector<S>& elems, AlgebraTag tag, std::map<BasisKey, size_t>& columns) {
  std::vector<std::vector<std::pair<BasisKey, DElem>>> coords;
  for (const auto& e : elems) {
    coords.push_back(coordinates(e));
    for (const auto& kv : coords.back()) columns.try_emplace(kv.first, 0);
  }
  size_t idx = 0;
  for (auto& kv : columns) kv.second = idx++;
  DMatrix m(tag, elems.size(), columns.size());
  for (size_t r = 0; r < coords.size(); ++r)
    for (const auto& [k, c] : coords[r]) m.at(r, columns.at(k)) = c;
  return m;
}

}  // namespace detail

/// Searches monomials of total degree <= N for N = 1..max_degree and returns
/// the first left linear relation found.
template <RingElement S>
DependenceOracle<S> linear_dependence_oracle(long max_degree) {
  return [max_degree](const std::vector<S>& z, const RingPtr& formal) -> OracleAnswer {
    if (z.empty()) return {std::nullopt, max_degree};
    const AlgebraTag tag = formal->algebra();
    const S one = constant_like(z.front(), DElem::one(tag));
    for (long N = 1; N <= max_degree; ++N) {
      const auto exps = detail::exponents_up_to(z.size(), N);
      const auto vals = detail::monomial_values<S>(z, exps, one);
      std::map<BasisKey, size_t> cols;
      DMatrix m = detail::coordinate_matrix<S>(vals, tag, cols);
      auto ns = left_nullspace(m);
      if (ns.empty()) continue;
      SkewPoly f(formal);
      for (size_t r = 0; r < exps.size(); ++r) f.add_term(exps[r], ns.front()[r]);
      return {f, N - 1};
    }
    return {std::nullopt, max_degree};
  };
}

template <RingElement S>
std::vector<AutomorphicWitness<S>> as_witnesses(const std::vector<S>& elems, const AutoDesc& twist) {
  std::vector<AutomorphicWitness<S>> out;
  for (const auto& e : elems) out.push_back({e, twist});
  return out;
}

/// The recursion of the normalization theorems: find a relation, monicize it,
/// replace z_i by z_i - b_i z_k (constant tuple) or z_i - z_k^{d^{k-i}}
/// (central), record z_k as integral over the rest, and continue.
template <RingElement S>
NormalizationCert<S> normalize(const std::vector<AutomorphicWitness<S>>& gens, const DependenceOracle<S>& oracle,
                               NormalizeMode mode, const S& one) {
  const AlgebraTag tag = algebra_of(one);
  NormalizationCert<S> cert{mode, AutoDesc::identity(), {}, {}, 0, {}};
  if (!gens.empty()) cert.twist = gens.front().twist.canonical();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (algebra_of(gens[i].element) != tag) fail(ErrorCode::TagMismatch, "generator over another algebra");
    if (mode == NormalizeMode::Central && !gens[i].twist.is_identity())
      fail(ErrorCode::ModeMismatch, "central mode needs identity twists; generator " + std::to_string(i + 1) +
                                        " carries " + describe(gens[i].twist));
    if (mode == NormalizeMode::ConstantTuple && !auto_equal(gens[i].twist, cert.twist))
      fail(ErrorCode::ModeMismatch, "constant-tuple mode needs equal twists; generator " + std::to_string(i + 1) +
                                        " carries " + describe(gens[i].twist));
    if (!satisfies_twist(gens[i].element, gens[i].twist))
      fail(ErrorCode::AutomorphismMismatch, "generator " + std::to_string(i + 1) + " is not automorphic for " +
                                                describe(gens[i].twist));
    for (size_t j = 0; j < i; ++j)
      if (!(gens[i].element * gens[j].element == gens[j].element * gens[i].element))
        fail(ErrorCode::NonCommutingPoint, "generators " + std::to_string(j + 1) + " and " +
                                               std::to_string(i + 1) + " do not commute");
  }

  std::vector<S> z;
  for (const auto& g : gens) z.push_back(g.element);
  while (!z.empty()) {
    const size_t k = z.size();
    const RingPtr formal = detail::formal_ring(mode, tag, k, cert.twist);
    OracleAnswer ans = oracle(z, formal);
    if (!ans.relation) {
      cert.independent_up_to = ans.independent_up_to;
      break;
    }
    const SkewPoly& f = *ans.relation;
    if (f.is_zero() || !same_ring(f.ring(), formal))
      fail(ErrorCode::OracleInconsistent, "oracle returned a zero relation or one over the wrong ring");
    if (!evaluate_unchecked<S>(f, std::span<const S>(z), one).is_zero())
      fail(ErrorCode::OracleInconsistent, "oracle relation does not vanish: " + f.str());
    MonicizationResult mr = mode == NormalizeMode::Central ? monicize_dadic(f) : monicize_linear(f);
    std::vector<S> next;
    for (size_t i = 0; i + 1 < k; ++i) {
      if (mr.method == MonicMethod::Linear)
        next.push_back(z[i] - constant_like(one, DElem::rational(tag, mr.shift[i])) * z[k - 1]);
      else
        next.push_back(z[i] - power_of<S>(z[k - 1], mr.powers[i], one));
    }
    next.push_back(z[k - 1]);
    if (!evaluate_unchecked<S>(mr.g, std::span<const S>(next), one).is_zero())
      fail(ErrorCode::InternalCheckFailed, "monic relation does not vanish at the transformed generators");
    S integral = next.back();
    next.pop_back();
    cert.steps.push_back({z, f, mr, integral});
    z = std::move(next);
  }
  cert.independent_gens = as_witnesses<S>(z, cert.twist);

  // Products of powers of the integral elements below their degrees.
  std::vector<std::pair<std::vector<long>, S>> gens_acc = {{{}, one}};
  for (const auto& step : cert.steps) {
    std::vector<std::pair<std::vector<long>, S>> grown;
    for (const auto& [exps, elem] : gens_acc) {
      S cur = elem;
      for (long e = 0; e < step.transform.m; ++e) {
        auto ex = exps;
        ex.push_back(e);
        grown.emplace_back(ex, cur);
        cur = cur * step.integral;
      }
    }
    gens_acc = std::move(grown);
  }
  for (auto& [exps, elem] : gens_acc) cert.module_gens.push_back({exps, elem});
  return cert;
}

struct CertificateReport {
  bool ok = true;
  long max_slice = 0;
  size_t monomials_checked = 0;
  size_t linear_systems = 0;
  std::string failure;
};

/// Reduces a polynomial in the generators of step s to left combinations of
/// module generators with coefficients in the independent subring.
template <RingElement S>
std::map<std::vector<long>, SkewPoly> reduce_through_steps(const NormalizationCert<S>& cert, const SkewPoly& p,
                                                           size_t s) {
  const size_t steps = cert.steps.size();
  if (s == steps) return {{std::vector<long>(steps, 0), p}};
  const auto& step = cert.steps[s];
  const SkewPoly shifted = apply_transform(step.transform, p);
  const SkewPoly rem = divmod_monic_last(shifted, step.transform.g).second;
  const RingPtr lower = detail::formal_ring(cert.mode, p.algebra(), p.nvars() - 1, cert.twist);
  std::map<std::vector<long>, SkewPoly> out;
  for (const auto& [e, r] : coefficients_in_last(rem)) {
    for (auto& [exps, q] : reduce_through_steps(cert, r.reinterpret(lower), s + 1)) {
      auto key = exps;
      key[s] = e;
      auto it = out.find(key);
      if (it == out.end()) out.emplace(key, q);
      else it->second = it->second + q;
    }
  }
  return out;
}

/// Checks that every monomial of degree <= max_slice in the original
/// generators is a left combination of module generators over the
/// independent subring, first constructively and then by an exact left solve
/// per degree slice.
template <RingElement S>
CertificateReport verify_certificate(const NormalizationCert<S>& cert, const std::vector<S>& original, const S& one,
                                     long max_slice = 6) {
  CertificateReport rep;
  rep.max_slice = max_slice;
  const AlgebraTag tag = algebra_of(one);
  const size_t n = original.size();
  const size_t kb = cert.independent_gens.size();
  std::vector<S> y;
  for (const auto& w : cert.independent_gens) y.push_back(w.element);
  for (size_t i = 0; i < kb; ++i) {
    AutoDesc tw;
    try {
      tw = check_automorphic(y[i]);
    } catch (const Error& e) {
      rep.ok = false;
      rep.failure = "independent generator " + std::to_string(i + 1) + ": " + e.what();
      return rep;
    }
    if (!auto_equal(tw, cert.independent_gens[i].twist)) {
      rep.ok = false;
      rep.failure = "independent generator " + std::to_string(i + 1) + " twists by " + describe(tw);
      return rep;
    }
    for (size_t j = 0; j < i; ++j)
      if (!(y[i] * y[j] == y[j] * y[i])) {
        rep.ok = false;
        rep.failure = "independent generators do not commute";
        return rep;
      }
  }
  const RingPtr top = detail::formal_ring(cert.mode, tag, n, cert.twist);
  const RingPtr base = detail::formal_ring(cert.mode, tag, kb, cert.twist);
  std::map<std::vector<long>, const S*> mgen;
  for (const auto& g : cert.module_gens) mgen.emplace(g.exponents, &g.element);

  const auto all = detail::exponents_up_to(n, max_slice);
  const auto targets = detail::monomial_values<S>(original, all, one);
  std::map<long, std::vector<size_t>> slices;
  for (size_t i = 0; i < all.size(); ++i) slices[exp_degree(all[i])].push_back(i);

  for (const auto& [deg, idxs] : slices) {
    std::map<std::pair<ExpVec, std::vector<long>>, size_t> used;  // (y-exponent, module gen)
    for (size_t i : idxs) {
      const SkewPoly mono = SkewPoly::monomial(top, all[i], DElem::one(tag));
      const auto parts = reduce_through_steps(cert, mono, 0);
      S rebuilt = constant_like(one, DElem::zero(tag));
      for (const auto& [exps, q] : parts) {
        auto it = mgen.find(exps);
        if (it == mgen.end()) {
          rep.ok = false;
          rep.failure = "reduction produced an unknown module generator";
          return rep;
        }
        rebuilt = rebuilt + evaluate_unchecked<S>(q.reinterpret(base), std::span<const S>(y), one) * *it->second;
        for (const auto& [e, c] : q.terms()) used.try_emplace({e, exps}, 0);
      }
      ++rep.monomials_checked;
      if (!(rebuilt == targets[i])) {
        rep.ok = false;
        rep.failure = "constructive reduction fails for a monomial of degree " + std::to_string(deg);
        return rep;
      }
    }
    // Exact left solve over the span of the basis products used in this slice.
    std::vector<S> rows;
    for (auto& [key, idx] : used) {
      idx = rows.size();
      const SkewPoly ymono = SkewPoly::monomial(base, key.first, DElem::one(tag));
      rows.push_back(evaluate_unchecked<S>(ymono, std::span<const S>(y), one) * *mgen.at(key.second));
    }
    std::vector<S> block = rows;
    for (size_t i : idxs) block.push_back(targets[i]);
    std::map<BasisKey, size_t> cols;
    DMatrix full = detail::coordinate_matrix<S>(block, tag, cols);
    std::vector<std::vector<DElem>> row_data;
    for (size_t r = 0; r < rows.size(); ++r) row_data.push_back(full.row(r));
    DMatrix a(tag, cols.size(), row_data);
    for (size_t t = 0; t < idxs.size(); ++t) {
      ++rep.linear_systems;
      if (rows.empty() ? !targets[idxs[t]].is_zero() : !left_solve(a, full.row(rows.size() + t))) {
        rep.ok = false;
        rep.failure = "left solve finds no combination in slice " + std::to_string(deg);
        return rep;
      }
    }
  }
  return rep;
}

template <class S>
struct PowerReduction {
  AutoDesc twist;
  std::vector<AutomorphicWitness<S>> w;
  std::vector<ModuleGen<S>> basis;
};

/// w_i = z_i^{d_i} with the common twist sigma_i^{d_i}; basis of monomials
/// with e_i < d_i.
template <RingElement S>
PowerReduction<S> power_reduce(const std::vector<AutomorphicWitness<S>>& gens, const std::vector<long>& d,
                               const S& one) {
  if (gens.size() != d.size()) fail(ErrorCode::SchemaViolation, "one exponent per generator required");
  PowerReduction<S> out;
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 1) fail(ErrorCode::ExponentEqualityFails, "exponents must be positive");
    const AutoDesc p = auto_pow(gens[i].twist, d[i]).canonical();
    if (i == 0) out.twist = p;
    else if (!auto_equal(p, out.twist))
      fail(ErrorCode::ExponentEqualityFails, "sigma_1^d_1 = " + describe(out.twist) + " but sigma_" +
                                                 std::to_string(i + 1) + "^d_" + std::to_string(i + 1) + " = " +
                                                 describe(p));
  }
  for (size_t i = 0; i < d.size(); ++i) {
    S w = power_of<S>(gens[i].element, d[i], one);
    if (!w.is_zero() && !auto_equal(check_automorphic(w), out.twist))
      fail(ErrorCode::InternalCheckFailed, "power does not twist by the common automorphism");
    out.w.push_back({w, out.twist});
  }
  std::vector<std::pair<std::vector<long>, S>> acc = {{{}, one}};
  for (size_t i = 0; i < d.size(); ++i) {
    std::vector<std::pair<std::vector<long>, S>> grown;
    for (const auto& [exps, elem] : acc) {
      S cur = elem;
      for (long e = 0; e < d[i]; ++e) {
        auto ex = exps;
        ex.push_back(e);
        grown.emplace_back(ex, cur);
        cur = cur * gens[i].element;
      }
    }
    acc = std::move(grown);
  }
  for (auto& [exps, elem] : acc) out.basis.push_back({exps, elem});
  return out;
}

struct ShiftTupleDecision {
  bool normalizable = false;
  std::vector<BigInt> exponents;  // witness d_i when normalizable
  std::vector<Rat> shifts;
};

/// For shifts x -> x + c_i: normalizable iff all c_i vanish or all share a
/// sign, with the least witness d_i = L / |c_i|.
ShiftTupleDecision decide_tuple_normalizable_field_shifts(const std::vector<AutoDesc>& autos);

/// The shift amount of x -> x + c, or UnsupportedAutoShape.
Rat shift_amount(const AutoDesc& sigma);

}  // namespace skewnorm
