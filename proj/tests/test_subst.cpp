#include <doctest.h>

#include "skewnorm/subst.hpp"
#include "support/generators.hpp"

using namespace skewnorm;
using testsupport::Gen;

namespace {

DElem H(Rat a, Rat b = 0, Rat c = 0, Rat d = 0) { return DElem(Quat(a, b, c, d)); }
DElem Q(long v) { return DElem(RatFun(Rat(v))); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalCheckFailed;
}

std::vector<AutomorphicWitness<SkewPoly>> identity_point(const RingPtr& ring) {
  std::vector<AutomorphicWitness<SkewPoly>> pt;
  for (size_t i = 0; i < ring->n(); ++i) pt.push_back({SkewPoly::variable(ring, i), ring->auto_at(i)});
  return pt;
}

}  // namespace

TEST_CASE("check_automorphic examples") {
  auto ring = make_ring(AlgebraTag::QX, {AutoDesc::shift(1), AutoDesc::shift(2)});
  CHECK(auto_equal(check_automorphic(SkewPoly::variable(ring, 0)), AutoDesc::shift(1)));
  auto r1 = make_ring(AlgebraTag::QX, {AutoDesc::shift(1)});
  CHECK(auto_equal(check_automorphic(SkewPoly::monomial(r1, {3}, Q(5))), AutoDesc::shift(3)));
  CHECK(code_of([&] { check_automorphic(SkewPoly::variable(r1, 0) + SkewPoly::constant(r1, Q(1))); }) ==
        ErrorCode::NotAutomorphic);
  CHECK(code_of([&] { check_automorphic(SkewPoly(r1)); }) == ErrorCode::ZeroElement);
  auto h = make_ring(AlgebraTag::HQ, {AutoDesc::inner(H(0, 1))});
  // j t twists by in_j o in_i = in_k
  CHECK(auto_equal(check_automorphic(SkewPoly::monomial(h, {1}, H(0, 0, 1))), AutoDesc::inner(H(0, 0, 0, 1))));
}

TEST_CASE("check_automorphic agrees with random probes") {
  Gen g(41);
  for (AlgebraTag tag : {AlgebraTag::HQ, AlgebraTag::QX}) {
    for (int t = 0; t < 60; ++t) {
      auto ring = make_ring(tag, g.commuting_autos(tag, 2));
      SkewPoly a = g.nonzero_skewpoly(ring, 3, 2);
      try {
        AutoDesc s = check_automorphic(a);
        for (int k = 0; k < 100; ++k) {
          DElem b = g.delem(tag);
          REQUIRE((a * SkewPoly::constant(ring, b) - SkewPoly::constant(ring, auto_apply(s, b)) * a).is_zero());
        }
      } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::NotAutomorphic);
        // Every single-term twist is violated by some generator.
        for (const auto& cand : term_twists(a)) CHECK_FALSE(satisfies_twist(a, cand));
      }
    }
  }
}

TEST_CASE("substitute examples") {
  auto ring = make_central_ring(AlgebraTag::QX, 2);
  SkewPoly f = SkewPoly::monomial(ring, {1, 1}, Q(1));
  auto r0 = make_central_ring(AlgebraTag::QX, 0);
  SkewPoly c2 = SkewPoly::constant(r0, Q(2)), c3 = SkewPoly::constant(r0, Q(3));
  std::vector<AutomorphicWitness<SkewPoly>> pt = {{c2, AutoDesc::identity()}, {c3, AutoDesc::identity()}};
  CHECK(substitute<SkewPoly>(f, pt, c2) == SkewPoly::constant(r0, Q(6)));

  Gen g(42);
  auto rr = make_ring(AlgebraTag::HQ, g.commuting_autos(AlgebraTag::HQ, 3));
  SkewPoly h = g.skewpoly(rr, 5, 3);
  CHECK(substitute<SkewPoly>(h, identity_point(rr), h) == h);

  auto hi = make_ring(AlgebraTag::HQ, {AutoDesc::inner(H(0, 1))});
  auto h0 = make_central_ring(AlgebraTag::HQ, 0);
  SkewPoly tsq = SkewPoly::monomial(hi, {2}, H(1));
  SkewPoly i0 = SkewPoly::constant(h0, H(0, 1));
  std::vector<AutomorphicWitness<SkewPoly>> ipt = {{i0, AutoDesc::inner(H(0, 1))}};
  CHECK(substitute<SkewPoly>(tsq, ipt, i0) == SkewPoly::constant(h0, H(-1)));
}

TEST_CASE("substitute rejects bad points") {
  auto ring = make_ring(AlgebraTag::HQ, {AutoDesc::identity(), AutoDesc::identity()});
  auto h0 = make_central_ring(AlgebraTag::HQ, 0);
  SkewPoly f = SkewPoly::variable(ring, 0);
  SkewPoly i0 = SkewPoly::constant(h0, H(0, 1)), j0 = SkewPoly::constant(h0, H(0, 0, 1));
  // i and j are not central, so they fail the identity twist
  std::vector<AutomorphicWitness<SkewPoly>> bad = {{i0, AutoDesc::identity()}, {j0, AutoDesc::identity()}};
  CHECK(code_of([&] { substitute<SkewPoly>(f, bad, i0); }) == ErrorCode::AutomorphismMismatch);
  std::vector<AutomorphicWitness<SkewPoly>> wrong = {{i0, AutoDesc::inner(H(0, 1))}, {j0, AutoDesc::identity()}};
  CHECK(code_of([&] { substitute<SkewPoly>(f, wrong, i0); }) == ErrorCode::AutomorphismMismatch);

  // Commuting check: t1 and t1 + t2 in a ring where t1, t2 commute but the
  // coordinates i*t and j*t of H[t] do not.
  auto hr = make_ring(AlgebraTag::HQ, {AutoDesc::inner(H(0, 1)), AutoDesc::inner(H(0, 0, 1))});
  auto ht = make_central_ring(AlgebraTag::HQ, 1);
  SkewPoly it = SkewPoly::monomial(ht, {1}, H(0, 1)), jt = SkewPoly::monomial(ht, {1}, H(0, 0, 1));
  std::vector<AutomorphicWitness<SkewPoly>> nc = {{it, AutoDesc::inner(H(0, 1))}, {jt, AutoDesc::inner(H(0, 0, 1))}};
  CHECK(code_of([&] { substitute<SkewPoly>(SkewPoly::variable(hr, 0), nc, it); }) == ErrorCode::NonCommutingPoint);
}

TEST_CASE("substitution is a homomorphism") {
  Gen g(43);
  for (AlgebraTag tag : {AlgebraTag::HQ, AlgebraTag::QX}) {
    for (int t = 0; t < 60; ++t) {
      const AutoDesc s = g.automorphism(tag);
      auto src = make_constant_ring(tag, 2, s);
      auto dst = make_constant_ring(tag, 3, s);
      // Point: commuting automorphic elements (q1 t1 + q2 t2, t3) with rational q.
      SkewPoly p1 = scale_left(DElem::rational(tag, g.rat()), SkewPoly::variable(dst, 0)) +
                    scale_left(DElem::rational(tag, g.rat()), SkewPoly::variable(dst, 1));
      SkewPoly p2 = SkewPoly::variable(dst, 2);
      std::vector<AutomorphicWitness<SkewPoly>> pt = {{p1, s}, {p2, s}};
      SkewPoly f = g.skewpoly(src, 3, 2), h = g.skewpoly(src, 3, 2);
      CHECK(substitute<SkewPoly>(f * h, pt, p1) == substitute<SkewPoly>(f, pt, p1) * substitute<SkewPoly>(h, pt, p1));
      CHECK(substitute<SkewPoly>(f + h, pt, p1) == substitute<SkewPoly>(f, pt, p1) + substitute<SkewPoly>(h, pt, p1));
    }
  }
}

TEST_CASE("linear_shift examples and inverse") {
  auto ring = make_central_ring(AlgebraTag::QX, 2);
  SkewPoly t1 = SkewPoly::variable(ring, 0), t2 = SkewPoly::variable(ring, 1);
  CHECK(linear_shift(t1 * t2, {Q(1)}) == t1 * t2 + t2 * t2);
  CHECK(linear_shift(t1 * t2, {Q(0)}) == t1 * t2);
  CHECK(linear_shift(t1 * t1, {Q(1)}) == t1 * t1 + scale_left(Q(2), t1 * t2) + t2 * t2);
  // With identity automorphisms F is all of Q(x).
  CHECK(linear_shift(t1, {DElem(RatFun::x())}) == t1 + scale_left(DElem(RatFun::x()), t2));
}

TEST_CASE("linear_shift rejects parameters outside F") {
  auto ring = make_constant_ring(AlgebraTag::QX, 2, AutoDesc::shift(1));
  SkewPoly t1 = SkewPoly::variable(ring, 0);
  CHECK(code_of([&] { linear_shift(t1, {DElem(RatFun::x())}); }) == ErrorCode::NotInF);
  auto h = make_central_ring(AlgebraTag::HQ, 2);
  CHECK(code_of([&] { linear_shift(SkewPoly::variable(h, 0), {H(0, 1)}); }) == ErrorCode::NotInF);
}

TEST_CASE("shifts are invertible") {
  Gen g(44);
  for (AlgebraTag tag : {AlgebraTag::HQ, AlgebraTag::QX}) {
    for (int t = 0; t < 60; ++t) {
      auto ring = make_constant_ring(tag, 3, g.automorphism(tag));
      SkewPoly f = g.skewpoly(ring, 4, 3);
      std::vector<DElem> a = {DElem::rational(tag, g.rat()), DElem::rational(tag, g.rat())};
      std::vector<DElem> na = {-a[0], -a[1]};
      CHECK(linear_shift(linear_shift(f, a), na) == f);
      auto central = make_central_ring(tag, 3);
      SkewPoly c = g.skewpoly(central, 4, 3);
      const long d = std::max(2L, 1 + total_degree(c));
      SkewPoly shifted = power_shift(c, d);
      auto p = dadic_exponents(3, d);
      // Undo by substituting t_i - t_n^{p_i}.
      SkewPoly last = SkewPoly::variable(central, 2);
      std::vector<SkewPoly> back;
      for (size_t i = 0; i < 3; ++i) {
        SkewPoly v = SkewPoly::variable(central, i);
        if (i < 2) v = v - pow(last, static_cast<unsigned>(p[i]));
        back.push_back(v);
      }
      CHECK(evaluate_unchecked<SkewPoly>(shifted, std::span<const SkewPoly>(back), c) == c);
    }
  }
}

TEST_CASE("power_shift examples") {
  auto ring = make_central_ring(AlgebraTag::QX, 2);
  SkewPoly t1 = SkewPoly::variable(ring, 0), t2 = SkewPoly::variable(ring, 1);
  CHECK(power_shift(t1 * t2, 3) == pow(t2, 4) + t1 * t2);
  CHECK(power_shift(SkewPoly::constant(ring, Q(4)), 2) == SkewPoly::constant(ring, Q(4)));
  CHECK(power_shift(t1, 2) == t1 + t2 * t2);
  CHECK(code_of([&] { power_shift(t1 * t2, 2); }) == ErrorCode::DegreeBoundViolated);
  auto skew = make_ring(AlgebraTag::QX, {AutoDesc::shift(1), AutoDesc::shift(1)});
  CHECK(code_of([&] { power_shift(SkewPoly::variable(skew, 0), 3); }) == ErrorCode::NonCentralRing);
}

TEST_CASE("substitution commutes with linear_shift at central points") {
  Gen g(45);
  for (AlgebraTag tag : {AlgebraTag::HQ, AlgebraTag::QX}) {
    auto ring = make_central_ring(tag, 3);
    for (int t = 0; t < 60; ++t) {
      SkewPoly f = g.skewpoly(ring, 4, 3);
      std::vector<DElem> a = {DElem::rational(tag, g.rat()), DElem::rational(tag, g.rat())};
      std::vector<DElem> p = {DElem::rational(tag, g.rat()), DElem::rational(tag, g.rat()),
                              DElem::rational(tag, g.rat())};
      std::vector<DElem> shifted_point = {p[0] + a[0] * p[2], p[1] + a[1] * p[2], p[2]};
      CHECK(evaluate_central(f, shifted_point) == evaluate_central(linear_shift(f, a), p));
    }
  }
}
