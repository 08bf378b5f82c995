#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewnorm/error.hpp"
#include "skewnorm/skewpoly.hpp"

namespace skewnorm {

/// An element type with exact normal forms over D, usable as a substitution
/// target. SkewPoly, LaurentPoly and QuotientElem all qualify.
template <class S>
concept RingElement = requires(const S& a, const S& b, const DElem& c) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { constant_like(a, c) } -> std::convertible_to<S>;
  { term_twists(a) } -> std::convertible_to<std::vector<AutoDesc>>;
  { coordinates(a) } -> std::convertible_to<std::vector<std::pair<BasisKey, DElem>>>;
  { algebra_of(a) } -> std::convertible_to<AlgebraTag>;
};

/// element * b = twist(b) * element for every b in D.
template <class S>
struct AutomorphicWitness {
  S element;
  AutoDesc twist;
};

/// Checks element * g = twist(g) * element on the generating set of D.
template <RingElement S>
bool satisfies_twist(const S& a, const AutoDesc& twist) {
  for (const auto& g : generating_set(algebra_of(a))) {
    const S lhs = a * constant_like(a, g);
    const S rhs = constant_like(a, auto_apply(twist, g)) * a;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

/// The unique sigma with a * b = sigma(b) * a, decided term by term: every
/// term must twist by the same automorphism.
template <RingElement S>
AutoDesc check_automorphic(const S& a) {
  if (a.is_zero()) fail(ErrorCode::ZeroElement, "the zero element is automorphic for every automorphism");
  const std::vector<AutoDesc> twists = term_twists(a);
  for (size_t i = 1; i < twists.size(); ++i) {
    if (!auto_equal(twists[0], twists[i]))
      fail(ErrorCode::NotAutomorphic, "terms twist by " + describe(twists[0]) + " and " + describe(twists[i]));
  }
  const AutoDesc sigma = twists.front().canonical();
  if (!satisfies_twist(a, sigma))
    fail(ErrorCode::InternalCheckFailed, "common term twist fails the generator check");
  return sigma;
}

template <RingElement S>
S power_of(const S& base, long k, const S& one) {
  S acc = one;
  for (long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

/// Evaluates sum c_I t^I at a point given by powers tables; no checks.
template <RingElement S>
S evaluate_unchecked(const SkewPoly& f, std::span<const S> point, const S& exemplar) {
  const size_t n = f.nvars();
  if (point.size() != n) fail(ErrorCode::SchemaViolation, "point has the wrong number of coordinates");
  const S one = constant_like(exemplar, DElem::one(f.algebra()));
  std::vector<std::vector<S>> powers(n, std::vector<S>{one});
  auto power = [&](size_t i, long k) -> const S& {
    auto& tab = powers[i];
    while (static_cast<long>(tab.size()) <= k) tab.push_back(tab.back() * point[i]);
    return tab[static_cast<size_t>(k)];
  };
  S acc = constant_like(exemplar, DElem::zero(f.algebra()));
  for (const auto& [e, c] : f.terms()) {
    S term = constant_like(exemplar, c);
    for (size_t i = 0; i < n; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    acc = acc + term;
  }
  return acc;
}

/// Image of f under the homomorphism fixing D and sending t_i to the i-th
/// witness element. Checks twists, witness validity and commutation.
template <RingElement S>
S substitute(const SkewPoly& f, std::span<const AutomorphicWitness<S>> point, const S& exemplar) {
  const RingDesc& ring = *f.ring();
  if (point.size() != ring.n()) fail(ErrorCode::SchemaViolation, "point has the wrong number of coordinates");
  std::vector<S> elems;
  for (size_t i = 0; i < point.size(); ++i) {
    if (algebra_of(point[i].element) != ring.algebra())
      fail(ErrorCode::TagMismatch, "point coordinate lives over another algebra");
    if (!auto_equal(point[i].twist, ring.auto_at(i)))
      fail(ErrorCode::AutomorphismMismatch, "coordinate " + std::to_string(i + 1) + " carries " +
                                                describe(point[i].twist) + " but the ring has " +
                                                describe(ring.auto_at(i)));
    if (!satisfies_twist(point[i].element, point[i].twist))
      fail(ErrorCode::AutomorphismMismatch, "coordinate " + std::to_string(i + 1) + " is not automorphic for " +
                                                describe(point[i].twist));
    elems.push_back(point[i].element);
  }
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!(elems[i] * elems[j] == elems[j] * elems[i]))
        fail(ErrorCode::NonCommutingPoint, "coordinates " + std::to_string(i + 1) + " and " +
                                               std::to_string(j + 1) + " do not commute");
  return evaluate_unchecked<S>(f, std::span<const S>(elems), exemplar);
}

template <RingElement S>
S substitute(const SkewPoly& f, const std::vector<AutomorphicWitness<S>>& point, const S& exemplar) {
  return substitute<S>(f, std::span<const AutomorphicWitness<S>>(point), exemplar);
}

/// f with central coordinates plugged in (all point entries central).
DElem evaluate_central(const SkewPoly& f, const std::vector<DElem>& point);

/// a lies in F = Z(D) intersected with the fixed fields of the ring's autos.
bool in_fixed_center(const RingDesc& ring, const DElem& a);

/// f(t_1 + a_1 t_n, ..., t_{n-1} + a_{n-1} t_n, t_n).
SkewPoly linear_shift(const SkewPoly& f, const std::vector<DElem>& a);

/// f(t_1 + t_n^{d^{n-1}}, ..., t_{n-1} + t_n^d, t_n) on a central ring, d >= 1 + deg f.
SkewPoly power_shift(const SkewPoly& f, long d);
/// Same substitution for arbitrary exponents p_i >= 0; only centrality is checked.
SkewPoly power_shift_exponents(const SkewPoly& f, const std::vector<long>& p);
std::vector<long> dadic_exponents(size_t n, long d);

}  // namespace skewnorm
