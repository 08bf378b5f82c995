#include <doctest.h>

#include "skewnorm/error.hpp"
#include "skewnorm/quatcentral.hpp"
#include "support/generators.hpp"

using namespace skewnorm;
using testsupport::Gen;

namespace {

DElem H(Rat a, Rat b = 0, Rat c = 0, Rat d = 0) { return DElem(Quat(a, b, c, d)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalCheckFailed;
}

// Closed forms from conjugation sums, built from the product table only.
Quat closed_form_component(int idx, const Quat& q) {
  using testsupport::table_product;
  const Quat i(0, 1), j(0, 0, 1), k(0, 0, 0, 1);
  const Quat qi = table_product(table_product(i, q), i), qj = table_product(table_product(j, q), j),
             qk = table_product(table_product(k, q), k);
  const int signs[4][3] = {{-1, -1, -1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
  Quat s = q;
  s = s + qi.scaled(signs[idx][0]) + qj.scaled(signs[idx][1]) + qk.scaled(signs[idx][2]);
  // s = 4 * component * v_idx; strip the unit
  const Quat v = idx == 0 ? Quat(1) : Quat::unit(idx);
  return table_product(s, v.conj()).scaled(Rat(1, 4));
}

}  // namespace

TEST_CASE("extraction constants examples") {
  const auto& ec = extraction_constants();
  CHECK(extract_component(ec, 0, Quat(3, 2)) == Quat(3));
  CHECK(extract_component(ec, 1, Quat(0, 1)) == Quat(1));
  for (int i = 0; i < 4; ++i) CHECK(extract_component(ec, i, Quat()).is_zero());
  CHECK(&extraction_constants() == &ec);
}

TEST_CASE("extraction constants on random quaternions") {
  Gen g(61);
  const auto& ec = extraction_constants();
  for (int t = 0; t < 1000; ++t) {
    const Quat q = g.quat(9);
    for (int i = 0; i < 4; ++i) {
      CHECK(extract_component(ec, i, q) == Quat(q.component(i)));
      CHECK(closed_form_component(i, q) == Quat(q.component(i)));
    }
  }
}

TEST_CASE("central_components examples") {
  const auto ring = make_central_ring(AlgebraTag::HQ, 2);
  const auto t1 = SkewPoly::variable(ring, 0), t2 = SkewPoly::variable(ring, 1);
  auto c = central_components(scale_left(H(0, 1), t1) + scale_left(H(0, 0, 1), t2));
  CHECK(c[0].is_zero());
  CHECK(c[1] == t1);
  CHECK(c[2] == t2);
  CHECK(c[3].is_zero());

  const auto p = scale_left(H(2), t1 * t2) + t2;
  c = central_components(p);
  CHECK(c[0] == p);
  for (int r = 1; r < 4; ++r) CHECK(c[size_t(r)].is_zero());

  c = central_components(scale_left(H(1, 1), t1 * t1));
  CHECK(c[0] == t1 * t1);
  CHECK(c[1] == t1 * t1);

  const auto skew = make_ring(AlgebraTag::HQ, {AutoDesc::inner(H(0, 1))});
  CHECK(code_of([&] { central_components(SkewPoly::variable(skew, 0)); }) == ErrorCode::NonCentralRing);
}

TEST_CASE("central_components round trip on random polynomials") {
  Gen g(62);
  const auto ring = make_central_ring(AlgebraTag::HQ, 3);
  for (int t = 0; t < 60; ++t) {
    const SkewPoly p = g.skewpoly(ring, 5, 4);
    const auto c = central_components(p);
    SkewPoly acc(ring);
    for (int r = 0; r < 4; ++r) {
      for (const auto& [e, coef] : c[size_t(r)].terms()) CHECK(coef.as_rational().has_value());
      acc = acc + scale_left(H(r == 0, r == 1, r == 2, r == 3), c[size_t(r)]);
    }
    CHECK(acc == p);
  }
}

TEST_CASE("centralize_generators examples") {
  const auto ring = make_central_ring(AlgebraTag::HQ, 2);
  const auto t1 = SkewPoly::variable(ring, 0), t2 = SkewPoly::variable(ring, 1);
  auto r1 = centralize_generators({scale_left(H(0, 1), t1)});
  REQUIRE(r1.central.size() == 1);
  CHECK(r1.central[0] == t1);

  auto r2 = centralize_generators({t1 + t2});
  REQUIRE(r2.central.size() == 1);
  CHECK(r2.central[0] == t1 + t2);

  auto r3 = centralize_generators({scale_left(H(0, 1), t1) + scale_left(H(0, 0, 1), t2), scale_left(H(0, 0, 0, 1), t1)});
  REQUIRE(r3.central.size() == 2);
  CHECK(r3.central[0] == t1);
  CHECK(r3.central[1] == t2);
  REQUIRE(r3.rebuild.size() == 2);
  CHECK(r3.rebuild[1] == std::vector<std::pair<int, size_t>>{{3, 0}});

  CHECK(centralize_generators({}).central.empty());
}

TEST_CASE("centralize_generators on random sets") {
  Gen g(63);
  for (int t = 0; t < 50; ++t) {
    const auto ring = make_central_ring(AlgebraTag::HQ, size_t(g.integer(1, 3)));
    std::vector<SkewPoly> a;
    const long n = g.integer(1, 3);
    for (long k = 0; k < n; ++k) a.push_back(g.skewpoly(ring, 4, 3));
    const auto res = centralize_generators(a);
    // every central generator has rational coefficients and is distinct
    for (size_t m = 0; m < res.central.size(); ++m) {
      for (const auto& [e, c] : res.central[m].terms()) CHECK(c.as_rational().has_value());
      for (size_t q = 0; q < m; ++q) CHECK_FALSE(res.central[m] == res.central[q]);
    }
    // independent recount of the basis components
    size_t nonzero = 0;
    for (const auto& p : a)
      for (int r = 0; r < 4; ++r) {
        bool any = false;
        for (const auto& [e, c] : p.terms()) any = any || c.quat().component(r) != 0;
        nonzero += any;
      }
    CHECK(res.central.size() <= nonzero);
  }
}

TEST_CASE("point_ideal_two_sided examples") {
  const auto r1 = point_ideal_two_sided({Quat(0, 1)});
  CHECK(r1.kind == PointIdealResult::Kind::CommutingNonReal);
  REQUIRE(r1.witness);
  CHECK(*r1.witness == Quat(0, 0, 1));
  CHECK(*r1.conjugate == Quat(0, -1));
  CHECK(*r1.constant_in_ideal == Quat(0, 2));

  CHECK(point_ideal_two_sided({Quat(Rat(1, 2)), Quat(3)}).kind == PointIdealResult::Kind::TwoSidedReal);

  const auto r3 = point_ideal_two_sided({Quat(0, 1), Quat(0, 0, 1)});
  CHECK(r3.kind == PointIdealResult::Kind::NonCommuting);
  CHECK(*r3.pair == std::make_pair(size_t(0), size_t(1)));

  CHECK(point_ideal_two_sided({}).kind == PointIdealResult::Kind::TwoSidedReal);
}

TEST_CASE("point_ideal_two_sided over a fixed set of 50 points") {
  Gen g(64);
  for (int t = 0; t < 50; ++t) {
    const size_t n = size_t(g.integer(1, 3));
    std::vector<Quat> a;
    const int mode = t % 3;
    const Quat axis = g.nonzero_quat(2);
    for (size_t i = 0; i < n; ++i) {
      if (mode == 0) a.push_back(Quat(g.rat()));
      else if (mode == 1) a.push_back(Quat(g.rat()) + axis.scaled(g.rat()));  // commuting family
      else a.push_back(g.quat(2));
    }
    bool all_real = true, commute = true;
    for (size_t i = 0; i < n; ++i) {
      all_real = all_real && a[i].component(1) == 0 && a[i].component(2) == 0 && a[i].component(3) == 0;
      for (size_t j = 0; j < n; ++j)
        commute = commute && testsupport::table_product(a[i], a[j]) == testsupport::table_product(a[j], a[i]);
    }
    const auto r = point_ideal_two_sided(a);
    CHECK((r.kind == PointIdealResult::Kind::TwoSidedReal) == all_real);
    CHECK((r.kind == PointIdealResult::Kind::NonCommuting) == !commute);
    if (r.kind == PointIdealResult::Kind::CommutingNonReal) {
      CHECK_FALSE(r.constant_in_ideal->is_zero());
      const Quat& b = *r.witness;
      CHECK_FALSE(testsupport::table_product(a[*r.index], b) == testsupport::table_product(b, a[*r.index]));
    }
  }
}
