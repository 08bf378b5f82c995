#include <doctest.h>

#include "skewnorm/error.hpp"
#include "skewnorm/skewpoly.hpp"
#include "support/generators.hpp"

using namespace skewnorm;
using testsupport::Gen;

namespace {

DElem H(Rat a, Rat b = 0, Rat c = 0, Rat d = 0) { return DElem(Quat(a, b, c, d)); }
DElem Q(long v) { return DElem(RatFun(Rat(v))); }

SkewPoly poly(const RingPtr& ring, std::vector<std::pair<ExpVec, DElem>> terms) {
  SkewPoly f(ring);
  for (auto& [e, c] : terms) f.add_term(e, c);
  return f;
}

// Rational value of a central rational-coefficient polynomial at a point.
Rat eval_rational(const SkewPoly& f, const std::vector<Rat>& pt) {
  Rat acc = 0;
  for (const auto& [e, c] : f.terms()) {
    Rat term = *c.as_rational();
    for (size_t i = 0; i < e.size(); ++i)
      for (long k = 0; k < e[i]; ++k) term *= pt[i];
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("sp_mul examples") {
  auto ring = make_ring(AlgebraTag::QX, {AutoDesc::shift(1)});
  SkewPoly t = SkewPoly::variable(ring, 0);
  SkewPoly x = SkewPoly::constant(ring, DElem(RatFun::x()));
  CHECK(t * x == SkewPoly::monomial(ring, {1}, DElem(RatFun::x() + RatFun(Rat(1)))));
  CHECK(t * SkewPoly::constant(ring, Q(1)) == t);

  auto hring = make_ring(AlgebraTag::HQ, {AutoDesc::inner(H(0, 1))});
  SkewPoly ht = SkewPoly::variable(hring, 0);
  CHECK(ht * SkewPoly::constant(hring, H(0, 0, 1)) == SkewPoly::monomial(hring, {1}, H(0, 0, -1)));
}

TEST_CASE("sp_add, sp_sub, scale_left") {
  auto ring = make_central_ring(AlgebraTag::HQ, 2);
  SkewPoly t1 = SkewPoly::variable(ring, 0), t2 = SkewPoly::variable(ring, 1);
  CHECK((t1 + t2 - (t1 + t2)).is_zero());
  CHECK(scale_left(H(2), t1 + t2) == poly(ring, {{{1, 0}, H(2)}, {{0, 1}, H(2)}}));
  auto r1 = make_central_ring(AlgebraTag::HQ, 1);
  CHECK(scale_left(H(0, 1), SkewPoly::monomial(r1, {1}, H(0, 0, 1))) == SkewPoly::monomial(r1, {1}, H(0, 0, 0, 1)));
  auto other = make_central_ring(AlgebraTag::HQ, 3);
  CHECK_THROWS_AS(t1 + SkewPoly::variable(other, 0), Error);
}

TEST_CASE("degrees") {
  auto ring = make_central_ring(AlgebraTag::QX, 2);
  SkewPoly f = poly(ring, {{{1, 1}, Q(1)}, {{1, 0}, Q(1)}});
  CHECK(total_degree(f) == 2);
  CHECK(degree_in(poly(ring, {{{1, 2}, Q(1)}}), 1) == 2);
  CHECK(total_degree(SkewPoly(ring)) == -1);
  CHECK(degree_in(SkewPoly(ring), 0) == -1);
}

TEST_CASE("leading_form examples") {
  auto ring = make_ring(AlgebraTag::QX, {AutoDesc::shift(1), AutoDesc::shift(1)});
  SkewPoly f = poly(ring, {{{1, 1}, Q(1)}, {{1, 0}, Q(1)}});
  SkewPoly lf = leading_form(f);
  CHECK(lf.ring()->is_central());
  CHECK(lf.terms().size() == 1);
  CHECK(lf.coeff({1, 1}) == Q(1));
  SkewPoly g = poly(ring, {{{2, 0}, Q(1)}, {{1, 1}, Q(2)}, {{0, 1}, Q(1)}});
  SkewPoly lg = leading_form(g);
  CHECK(lg.terms().size() == 2);
  CHECK(lg.coeff({1, 1}) == Q(2));
  SkewPoly c = SkewPoly::constant(ring, Q(7));
  CHECK(leading_form(c).coeff({0, 0}) == Q(7));
  CHECK_THROWS_AS(leading_form(SkewPoly(ring)), Error);
}

TEST_CASE("is_monic_in_last") {
  auto ring = make_central_ring(AlgebraTag::QX, 2);
  CHECK(is_monic_in_last(poly(ring, {{{0, 2}, Q(1)}, {{1, 1}, Q(1)}})));
  CHECK_FALSE(is_monic_in_last(poly(ring, {{{0, 2}, Q(2)}})));
  CHECK_FALSE(is_monic_in_last(poly(ring, {{{1, 0}, Q(1)}})));
  CHECK(is_monic_in_last(SkewPoly::constant(ring, Q(1))));
  CHECK_FALSE(is_monic_in_last(SkewPoly(ring)));
  CHECK_FALSE(is_monic_in_last(poly(ring, {{{0, 2}, Q(1)}, {{1, 2}, Q(1)}})));
}

TEST_CASE("multiplication is associative and distributive") {
  Gen g(31);
  for (AlgebraTag tag : {AlgebraTag::HQ, AlgebraTag::QX}) {
    for (int t = 0; t < 500; ++t) {
      const size_t n = static_cast<size_t>(g.integer(1, 3));
      auto ring = make_ring(tag, g.commuting_autos(tag, n));
      SkewPoly a = g.skewpoly(ring, 3, 2), b = g.skewpoly(ring, 3, 2), c = g.skewpoly(ring, 3, 2);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a + b) * c == a * c + b * c);
    }
  }
}

TEST_CASE("central rational polynomials multiply like commutative ones") {
  Gen g(32);
  for (AlgebraTag tag : {AlgebraTag::HQ, AlgebraTag::QX}) {
    auto ring = make_central_ring(tag, 3);
    for (int t = 0; t < 150; ++t) {
      SkewPoly a(ring), b(ring);
      for (int k = 0; k < 4; ++k) {
        a.add_term({g.integer(0, 2), g.integer(0, 2), g.integer(0, 2)}, DElem::rational(tag, g.rat()));
        b.add_term({g.integer(0, 2), g.integer(0, 2), g.integer(0, 2)}, DElem::rational(tag, g.rat()));
      }
      SkewPoly p = a * b;
      CHECK(p == b * a);
      for (int s = 0; s < 3; ++s) {
        std::vector<Rat> pt = {g.rat(), g.rat(), g.rat()};
        CHECK(eval_rational(p, pt) == eval_rational(a, pt) * eval_rational(b, pt));
      }
    }
  }
}

TEST_CASE("commutation rule t_i a = sigma_i(a) t_i") {
  Gen g(33);
  for (AlgebraTag tag : {AlgebraTag::HQ, AlgebraTag::QX}) {
    for (int t = 0; t < 100; ++t) {
      auto ring = make_ring(tag, g.commuting_autos(tag, 3));
      DElem a = g.delem(tag);
      for (size_t i = 0; i < 3; ++i) {
        SkewPoly ti = SkewPoly::variable(ring, i);
        CHECK(ti * SkewPoly::constant(ring, a) == SkewPoly::constant(ring, auto_apply(ring->auto_at(i), a)) * ti);
      }
    }
  }
}

TEST_CASE("degree is additive") {
  Gen g(34);
  for (AlgebraTag tag : {AlgebraTag::HQ, AlgebraTag::QX}) {
    for (int t = 0; t < 200; ++t) {
      auto ring = make_ring(tag, g.commuting_autos(tag, 2));
      SkewPoly a = g.skewpoly(ring, 3, 3), b = g.skewpoly(ring, 3, 3);
      if (a.is_zero() || b.is_zero()) {
        CHECK((a * b).is_zero());
        continue;
      }
      CHECK(total_degree(a * b) == total_degree(a) + total_degree(b));
      CHECK(degree_in(a * b, 1) == degree_in(a, 1) + degree_in(b, 1));
    }
  }
}

TEST_CASE("coefficients in the last variable round-trip") {
  Gen g(35);
  for (int t = 0; t < 100; ++t) {
    AlgebraTag tag = t % 2 ? AlgebraTag::HQ : AlgebraTag::QX;
    auto ring = make_ring(tag, g.commuting_autos(tag, 3));
    SkewPoly f = g.skewpoly(ring, 5, 4);
    auto parts = coefficients_in_last(f);
    CHECK(join_last(ring, parts) == f);
    // Each part times t_n^e rebuilds its slice.
    SkewPoly acc(ring);
    for (const auto& [e, r] : parts) {
      ExpVec tn(3, 0);
      tn[2] = e;
      SkewPoly lifted = join_last(ring, {{0, r}});
      acc = acc + lifted * SkewPoly::monomial(ring, tn, DElem::one(tag));
    }
    CHECK(acc == f);
  }
}

TEST_CASE("division by a monic polynomial in the last variable") {
  Gen g(36);
  for (int t = 0; t < 100; ++t) {
    AlgebraTag tag = t % 2 ? AlgebraTag::HQ : AlgebraTag::QX;
    const AutoDesc s = g.automorphism(tag);
    auto ring = make_constant_ring(tag, 2, s);
    SkewPoly lower = g.skewpoly(ring, 3, 2);
    SkewPoly mon = SkewPoly::monomial(ring, {0, 3}, DElem::one(tag));
    SkewPoly gpoly = mon;
    for (const auto& [e, c] : lower.terms())
      if (e[1] < 3) gpoly.add_term(e, c);
    REQUIRE(is_monic_in_last(gpoly));
    SkewPoly p = g.skewpoly(ring, 5, 6);
    auto [q, r] = divmod_monic_last(p, gpoly);
    CHECK(q * gpoly + r == p);
    CHECK(degree_in(r, 1) < 3);
  }
}
