#include "skewnorm/cli.hpp"

#include <functional>
#include <random>

#include "skewnorm/error.hpp"
#include "skewnorm/laurent.hpp"
#include "skewnorm/normalize.hpp"
#include "skewnorm/quatcentral.hpp"
#include "skewnorm/quotient.hpp"
#include "skewnorm/subst.hpp"

namespace skewnorm {

Json Response::to_json() const { return {{"ok", ok}, {"result", result}, {"diagnostics", diagnostics}}; }

namespace {

struct Context {
  std::uint64_t seed = 0;
};

using Handler = std::function<Json(const Json&, const Context&)>;

struct Verb {
  VerbInfo info;
  Handler run;
};

std::string str_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_string()) fail(ErrorCode::SchemaViolation, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string str_field(const Json& obj, const char* key, const std::string& fallback) {
  return obj.contains(key) ? str_field(obj, key) : fallback;
}

const Json& array_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_array()) fail(ErrorCode::SchemaViolation, std::string("field '") + key + "' must be an array");
  return v;
}

AlgebraTag tag_field(const Json& args) {
  const std::string name = str_field(args, "algebra");
  if (name != "HQ" && name != "QX") fail(ErrorCode::SchemaViolation, "algebra must be \"HQ\" or \"QX\"");
  return parse_tag(name);
}

RingPtr optional_ring(const Json& args) { return args.contains("ring") ? ring_from_json(args["ring"]) : nullptr; }

SkewPoly poly_arg(const Json& args, const char* key) { return skewpoly_from_json(field(args, key), optional_ring(args)); }

std::vector<Rat> rats_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::SchemaViolation, "expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& v : j) out.push_back(rat_from_json(v));
  return out;
}

Json rats_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(to_json(r));
  return out;
}

PointSearchSpec search_spec(const Json& args) {
  PointSearchSpec spec;
  if (!args.contains("grids")) return spec;
  const Json& grids = args["grids"];
  if (!grids.is_array()) fail(ErrorCode::SchemaViolation, "grids must be an array of arrays");
  for (const auto& g : grids) spec.grids.push_back(rats_from_json(g));
  return spec;
}

// Backends for the element-generic verbs.

enum class Backend { SkewPoly, Laurent, Quotient };

Backend backend_field(const Json& args) {
  const std::string b = str_field(args, "backend", "skewpoly");
  if (b == "skewpoly") return Backend::SkewPoly;
  if (b == "laurent") return Backend::Laurent;
  if (b == "quotient") return Backend::Quotient;
  fail(ErrorCode::SchemaViolation, "unknown backend '" + b + "'");
}

template <class S>
S element_from(const Json& j, const RingPtr& ring);

template <>
SkewPoly element_from<SkewPoly>(const Json& j, const RingPtr& ring) { return skewpoly_from_json(j, ring); }
template <>
LaurentPoly element_from<LaurentPoly>(const Json& j, const RingPtr&) { return laurent_from_json(j); }
template <>
QuotientElem element_from<QuotientElem>(const Json& j, const RingPtr& ring) { return quotient_from_json(j, ring); }

template <class S>
std::vector<S> elements_from(const Json& arr, const RingPtr& ring) {
  if (!arr.is_array()) fail(ErrorCode::SchemaViolation, "expected an array of elements");
  std::vector<S> out;
  for (const auto& e : arr) out.push_back(element_from<S>(e, ring));
  return out;
}

template <class F>
Json with_backend(const Json& args, F&& body) {
  switch (backend_field(args)) {
    case Backend::SkewPoly: return body(SkewPoly(make_central_ring(AlgebraTag::QX, 0)));
    case Backend::Laurent: return body(LaurentPoly(AlgebraTag::QX, AutoDesc::identity()));
    case Backend::Quotient: break;
  }
  return body(QuotientElem(make_central_ring(AlgebraTag::QX, 2)));
}

/// Twists from an optional "twists" array, otherwise from check_automorphic.
template <class S>
std::vector<AutomorphicWitness<S>> witnesses_from(const Json& args, const std::vector<S>& elems) {
  std::vector<AutomorphicWitness<S>> out;
  const bool given = args.contains("twists");
  if (given && (!args["twists"].is_array() || args["twists"].size() != elems.size()))
    fail(ErrorCode::SchemaViolation, "twists must list one automorphism per element");
  for (size_t i = 0; i < elems.size(); ++i) {
    AutoDesc tw = given ? auto_from_json(args["twists"][i], algebra_of(elems[i])) : check_automorphic(elems[i]);
    out.push_back({elems[i], tw});
  }
  return out;
}

template <class S>
S one_like(const std::vector<S>& elems) {
  if (elems.empty()) fail(ErrorCode::SchemaViolation, "at least one element is required");
  return constant_like(elems.front(), DElem::one(algebra_of(elems.front())));
}

// Base algebra and linear algebra.

Json verb_arith(const Json& a, const Context&) {
  const AlgebraTag tag = tag_field(a);
  const ArithOp op = parse_arith_op(str_field(a, "op"));
  std::optional<DElem> y;
  if (a.contains("y")) y = delem_from_json(a["y"], tag);
  return to_json(delem_arith(op, delem_from_json(field(a, "x"), tag), y));
}

Json verb_auto_apply(const Json& a, const Context&) {
  const AlgebraTag tag = tag_field(a);
  return to_json(auto_apply(auto_from_json(field(a, "auto"), tag), delem_from_json(field(a, "r"), tag)));
}

Json verb_auto_equal(const Json& a, const Context&) {
  const AlgebraTag tag = tag_field(a);
  return auto_equal(auto_from_json(field(a, "sigma"), tag), auto_from_json(field(a, "tau"), tag));
}

Json verb_auto_commute(const Json& a, const Context&) {
  const AlgebraTag tag = tag_field(a);
  return auto_commute(auto_from_json(field(a, "sigma"), tag), auto_from_json(field(a, "tau"), tag));
}

Json verb_element_central(const Json& a, const Context&) {
  const AlgebraTag tag = tag_field(a);
  const DElem r = delem_from_json(field(a, "r"), tag);
  Json out = {{"central", is_central(r)}};
  if (a.contains("auto")) out["fixed"] = is_fixed(auto_from_json(a["auto"], tag), r);
  return out;
}

Json verb_inner_order(const Json& a, const Context&) {
  const AlgebraTag tag = tag_field(a);
  const long bound = int_field(a, "bound");
  const auto k = inner_order(auto_from_json(field(a, "auto"), tag), bound);
  if (k) return {{"found", true}, {"order", *k}};
  return {{"found", false}, {"bound", bound}};
}

Json verb_solve(const Json& a, const Context&) {
  const AlgebraTag tag = tag_field(a);
  const DMatrix m = matrix_from_json(field(a, "A"), tag);
  const auto b = delems_from_json(field(a, "b"), tag);
  if (b.size() != m.cols()) fail(ErrorCode::SchemaViolation, "b needs one entry per column of A");
  const auto x = left_solve(m, b);
  if (!x) return {{"solvable", false}};
  return {{"solvable", true}, {"x", to_json(*x)}};
}

Json verb_nullspace(const Json& a, const Context&) {
  const AlgebraTag tag = tag_field(a);
  Json basis = Json::array();
  for (const auto& v : left_nullspace(matrix_from_json(field(a, "A"), tag))) basis.push_back(to_json(v));
  return {{"basis", basis}};
}

// Skew polynomials.

Json verb_mul(const Json& a, const Context&) { return to_json(poly_arg(a, "f") * poly_arg(a, "g")); }
Json verb_add(const Json& a, const Context&) {
  const SkewPoly f = poly_arg(a, "f"), g = poly_arg(a, "g");
  require_same_ring(f.ring(), g.ring());
  return to_json(f + g);
}
Json verb_sub(const Json& a, const Context&) {
  const SkewPoly f = poly_arg(a, "f"), g = poly_arg(a, "g");
  require_same_ring(f.ring(), g.ring());
  return to_json(f - g);
}

Json verb_scale(const Json& a, const Context&) {
  const SkewPoly f = poly_arg(a, "f");
  return to_json(scale_left(delem_from_json(field(a, "c"), f.algebra()), f));
}

Json verb_degree(const Json& a, const Context&) {
  const SkewPoly f = poly_arg(a, "f");
  Json per = Json::array();
  for (size_t i = 0; i < f.nvars(); ++i) per.push_back(degree_in(f, i));
  return {{"total", total_degree(f)}, {"per_variable", per}, {"homogeneous", is_homogeneous(f)}};
}

Json verb_leading_form(const Json& a, const Context&) { return to_json(leading_form(poly_arg(a, "f"))); }

Json verb_monic_last(const Json& a, const Context&) { return {{"monic", is_monic_in_last(poly_arg(a, "f"))}}; }

// Substitution.

Json verb_automorphic(const Json& a, const Context&) {
  return with_backend(a, [&](auto tag) -> Json {
    using S = decltype(tag);
    const S e = element_from<S>(field(a, "element"), optional_ring(a));
    const AutoDesc tw = check_automorphic(e);
    return {{"twist", to_json(tw)}, {"description", describe(tw)}};
  });
}

Json verb_subst(const Json& a, const Context&) {
  const SkewPoly f = poly_arg(a, "f");
  return with_backend(a, [&](auto tag) -> Json {
    using S = decltype(tag);
    const Json& pts = array_field(a, "point");
    std::vector<S> elems;
    Json twists = Json::array();
    bool given = true;
    for (const auto& p : pts) {
      elems.push_back(element_from<S>(field(p, "element"), optional_ring(a)));
      if (p.contains("twist")) twists.push_back(p["twist"]);
      else given = false;
    }
    Json targs = Json::object();
    if (given && !pts.empty()) targs["twists"] = twists;
    const auto point = witnesses_from<S>(targs, elems);
    return to_json(substitute<S>(f, point, one_like(elems)));
  });
}

Json verb_shift_linear(const Json& a, const Context&) {
  const SkewPoly f = poly_arg(a, "f");
  return to_json(linear_shift(f, delems_from_json(field(a, "a"), f.algebra())));
}

Json verb_shift_power(const Json& a, const Context&) { return to_json(power_shift(poly_arg(a, "f"), int_field(a, "d"))); }

// Point search and normalization.

Json verb_nullsatz_search(const Json& a, const Context&) {
  const SkewPoly f = poly_arg(a, "f");
  const auto pt = find_nonvanishing(f, search_spec(a));
  Json target = Json::array();
  for (long e : nullstellensatz_target(f)) target.push_back(e);
  return {{"point", rats_json(pt)}, {"target", target}};
}

Json verb_nullsatz_projective(const Json& a, const Context&) {
  return {{"point", rats_json(find_projective_point(poly_arg(a, "f"), search_spec(a)))}};
}

Json verb_monicize(const Json& a, const Context&) {
  const SkewPoly f = poly_arg(a, "f");
  const std::string method = str_field(a, "method");
  if (method != "linear" && method != "dadic") fail(ErrorCode::SchemaViolation, "method must be linear or dadic");
  const MonicizationResult mr = method == "linear" ? monicize_linear(f, search_spec(a)) : monicize_dadic(f);
  Json out = to_json(mr);
  out["monic"] = is_monic_in_last(mr.g);
  return out;
}

Json verb_normalize(const Json& a, const Context&) {
  const NormalizeMode mode = parse_mode(str_field(a, "mode"));
  const long max_degree = int_field(a, "max_degree", 8);
  const long slice = int_field(a, "verify_slice", 6);
  const bool quotient = backend_field(a) == Backend::Quotient;
  return with_backend(a, [&](auto tag) -> Json {
    using S = decltype(tag);
    const auto elems = elements_from<S>(field(a, "generators"), optional_ring(a));
    const auto gens = witnesses_from<S>(a, elems);
    const S one = one_like(elems);
    DependenceOracle<S> oracle = linear_dependence_oracle<S>(max_degree);
    if constexpr (std::is_same_v<S, QuotientElem>) {
      if (quotient) oracle = quotient_dependence_oracle(max_degree);
    }
    const auto cert = normalize<S>(gens, oracle, mode, one);
    const auto rep = verify_certificate<S>(cert, elems, one, slice);
    if (!rep.ok) fail(ErrorCode::InternalCheckFailed, "certificate does not verify: " + rep.failure);
    return {{"certificate", to_json(cert)}, {"verification", to_json(rep)}};
  });
}

Json verb_power_reduce(const Json& a, const Context&) {
  return with_backend(a, [&](auto tag) -> Json {
    using S = decltype(tag);
    const auto elems = elements_from<S>(field(a, "generators"), optional_ring(a));
    const auto gens = witnesses_from<S>(a, elems);
    std::vector<long> d;
    for (const auto& v : array_field(a, "d")) {
      if (!v.is_number_integer()) fail(ErrorCode::SchemaViolation, "exponents must be integers");
      d.push_back(v.get<long>());
    }
    const auto pr = power_reduce<S>(gens, d, one_like(elems));
    Json w = Json::array(), basis = Json::array();
    for (const auto& x : pr.w) w.push_back({{"element", to_json(x.element)}, {"twist", to_json(x.twist)}});
    for (const auto& m : pr.basis) basis.push_back({{"exponents", m.exponents}, {"element", to_json(m.element)}});
    return {{"twist", to_json(pr.twist)}, {"w", w}, {"basis", basis}};
  });
}

Json verb_decide_shifts(const Json& a, const Context&) {
  std::vector<AutoDesc> autos;
  for (const auto& s : array_field(a, "autos")) autos.push_back(auto_from_json(s, AlgebraTag::QX));
  const auto dec = decide_tuple_normalizable_field_shifts(autos);
  Json exps = Json::array();
  for (const auto& e : dec.exponents) exps.push_back(e.get_str());
  return {{"normalizable", dec.normalizable}, {"exponents", exps}, {"shifts", rats_json(dec.shifts)}};
}

// Laurent.

Json verb_laurent_arith(const Json& a, const Context&) {
  const std::string op = str_field(a, "op");
  const LaurentPoly f = laurent_from_json(field(a, "f")), g = laurent_from_json(field(a, "g"));
  if (op == "add") return to_json(f + g);
  if (op == "sub") return to_json(f - g);
  if (op == "mul") return to_json(f * g);
  fail(ErrorCode::SchemaViolation, "op must be add, sub or mul");
}

Json verb_laurent_classify(const Json& a, const Context&) {
  const auto cl = classify_automorphic(laurent_from_json(field(a, "f")));
  Json out = {{"kind", kind_name(cl.kind)}};
  if (cl.twist) out["twist"] = to_json(*cl.twist);
  if (cl.coefficient) {
    out["coefficient"] = to_json(*cl.coefficient);
    out["exponent"] = cl.exponent;
  }
  Json tw = Json::array();
  for (const auto& [k, s] : cl.term_twists) tw.push_back({{"exponent", k}, {"twist", describe(s)}});
  out["term_twists"] = tw;
  if (cl.conflict) out["conflict"] = {cl.conflict->first, cl.conflict->second};
  return out;
}

Json verb_laurent_witness(const Json& a, const Context&) {
  const AlgebraTag tag = tag_field(a);
  const AutoDesc sigma = auto_from_json(field(a, "auto"), tag);
  const auto w = finite_inner_order_witness(sigma, int_field(a, "k"), delem_from_json(field(a, "c"), tag));
  const LaurentPoly t = LaurentPoly::monomial(tag, sigma, 1, DElem::one(tag));
  return {{"u", to_json(w.u)},
          {"u_twist", to_json(w.u_twist)},
          {"relation", to_json(w.relation)},
          {"relation_vanishes", evaluate_ut(w.relation, w.u, t).is_zero()},
          {"u_commutes_with_t", w.u_commutes_with_t},
          {"low_degrees", w.low_degrees}};
}

Json verb_laurent_invert(const Json& a, const Context&) {
  std::vector<SkewPoly> coeffs;
  for (const auto& c : array_field(a, "coeffs")) coeffs.push_back(skewpoly_from_json(c, optional_ring(a)));
  const auto chk = invert_via_integral_relation(coeffs);
  return {{"consistent", chk.consistent}, {"candidate", to_json(chk.candidate)}, {"product", to_json(chk.product)}};
}

// Quotient.

Json verb_quotient_arith(const Json& a, const Context&) {
  const std::string op = str_field(a, "op");
  const RingPtr ring = optional_ring(a);
  const QuotientElem f = quotient_from_json(field(a, "f"), ring), g = quotient_from_json(field(a, "g"), ring);
  if (op == "add") return to_json(f + g);
  if (op == "sub") return to_json(f - g);
  if (op == "mul") return to_json(f * g);
  fail(ErrorCode::SchemaViolation, "op must be add, sub or mul");
}

Json verb_quotient_depend(const Json& a, const Context&) {
  const RingPtr ring = optional_ring(a);
  const QuotientElem x1 = quotient_from_json(field(a, "x1"), ring), x2 = quotient_from_json(field(a, "x2"), ring);
  const auto w = find_dependence(x1, x2);
  const RingPtr formal = make_central_ring(x1.algebra(), 2);
  const SkewPoly rel = witness_polynomial(w, formal);
  const std::vector<QuotientElem> pt = {x1, x2};
  const bool vanishes = evaluate_unchecked<QuotientElem>(rel, std::span<const QuotientElem>(pt), x1).is_zero();
  if (!vanishes) fail(ErrorCode::InternalCheckFailed, "dependence witness does not vanish");
  Json combo = Json::array();
  for (const auto& [k, c] : w.combo) combo.push_back({{"k1", k.first}, {"k2", k.second}, {"coef", to_json(c)}});
  return {{"kind", kind_name(w.kind)}, {"N", w.N}, {"d", w.d}, {"combo", combo}, {"vanishes", vanishes}};
}

Json verb_quotient_witness(const Json& a, const Context&) {
  const RingPtr ring = ring_from_json(field(a, "ring"));
  const auto w = quotient_witness(ring, int_field(a, "k1"), int_field(a, "k2"), delem_from_json(field(a, "c"), ring->algebra()));
  return {{"u", to_json(w.u)},
          {"twist", to_json(w.twist)},
          {"z1_integral", w.z1_integral},
          {"z2_integral", w.z2_integral},
          {"z1_degrees", w.z1_degrees}};
}

Json verb_quotient_decide(const Json& a, const Context&) {
  const AlgebraTag tag = a.contains("algebra") ? tag_field(a) : AlgebraTag::QX;
  const auto dec = decide_quotient_normalizable(auto_from_json(field(a, "s1"), tag), auto_from_json(field(a, "s2"), tag),
                                                int_field(a, "bound"));
  Json out = {{"found", dec.found}};
  if (dec.found) {
    out["k1"] = dec.k1;
    out["k2"] = dec.k2;
    out["c"] = to_json(*dec.c);
  } else {
    out["bound"] = dec.bound;
    out["proven_not_normalizable"] = dec.proven_not_normalizable;
  }
  return out;
}

// Quaternions.

Json verb_quat_constants(const Json&, const Context&) {
  const auto& ec = extraction_constants();
  Json out = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json mat = Json::array();
    for (int s = 0; s < 4; ++s) {
      Json row = Json::array();
      for (int t = 0; t < 4; ++t) row.push_back(to_json(ec.b[i][s][t]));
      mat.push_back(row);
    }
    out.push_back(mat);
  }
  return {{"b", out}};
}

Json verb_quat_decompose(const Json& a, const Context&) {
  Json comps = Json::array();
  for (const auto& c : central_components(poly_arg(a, "p"))) comps.push_back(to_json(c));
  return {{"components", comps}};
}

Json verb_quat_centralize(const Json& a, const Context&) {
  std::vector<SkewPoly> polys;
  for (const auto& p : array_field(a, "polys")) polys.push_back(skewpoly_from_json(p, optional_ring(a)));
  const auto res = centralize_generators(polys);
  Json central = Json::array(), rebuild = Json::array(), source = Json::array();
  for (const auto& b : res.central) central.push_back(to_json(b));
  for (const auto& r : res.rebuild) {
    Json parts = Json::array();
    for (const auto& [basis, idx] : r) parts.push_back({{"basis", basis}, {"index", idx}});
    rebuild.push_back(parts);
  }
  for (const auto& [k, r] : res.source) source.push_back({{"generator", k}, {"basis", r}});
  return {{"central", central}, {"rebuild", rebuild}, {"source", source}};
}

Json verb_quat_point_ideal(const Json& a, const Context&) {
  std::vector<Quat> pts;
  for (const auto& q : array_field(a, "points")) pts.push_back(quat_from_json(q));
  const auto res = point_ideal_two_sided(pts);
  Json out = {{"kind", kind_name(res.kind)}};
  if (res.pair) out["pair"] = {res.pair->first, res.pair->second};
  if (res.index) out["index"] = *res.index;
  if (res.witness) out["witness"] = to_json(*res.witness);
  if (res.conjugate) out["conjugate"] = to_json(*res.conjugate);
  if (res.constant_in_ideal) out["constant_in_ideal"] = to_json(*res.constant_in_ideal);
  out["chain"] = res.chain;
  return out;
}

// Seeded property check.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  Rat rat() {
    Rat r(integer(-4, 4), integer(1, 3));
    r.canonicalize();
    return r;
  }
  DElem elem(AlgebraTag tag) {
    if (tag == AlgebraTag::HQ) return DElem(Quat(rat(), rat(), rat(), rat()));
    return DElem(RatFun(QPoly({rat(), rat()}), QPoly({Rat(integer(1, 3)), Rat(1)})));
  }
  SkewPoly poly(const RingPtr& ring) {
    SkewPoly f(ring);
    const long terms = integer(0, 3);
    for (long t = 0; t < terms; ++t) {
      ExpVec e(ring->n());
      for (auto& x : e) x = integer(0, 2);
      f.add_term(e, elem(ring->algebra()));
    }
    return f;
  }

 private:
  std::mt19937_64 eng_;
};

Json verb_prop_homomorphism(const Json& a, const Context& ctx) {
  const AlgebraTag tag = tag_field(a);
  const long trials = int_field(a, "trials", 20);
  if (trials < 0 || trials > 10000) fail(ErrorCode::SchemaViolation, "trials must lie in [0, 10000]");
  Rng rng(ctx.seed);
  const AutoDesc base = tag == AlgebraTag::HQ ? AutoDesc::inner(DElem(Quat(1, 1, 0, 0))) : AutoDesc::shift(Rat(1));
  long failures = 0;
  for (long t = 0; t < trials; ++t) {
    const RingPtr ring = make_ring(tag, {auto_pow(base, rng.integer(0, 1)), auto_pow(base, rng.integer(0, 1))});
    const SkewPoly f = rng.poly(ring), g = rng.poly(ring);
    // t_i -> r_i t_i (+ q_i when t_i is central) stays automorphic and commuting.
    std::vector<AutomorphicWitness<SkewPoly>> pt;
    for (size_t i = 0; i < 2; ++i) {
      SkewPoly x = SkewPoly::monomial(ring, i == 0 ? ExpVec{1, 0} : ExpVec{0, 1}, DElem::rational(tag, rng.rat()));
      if (ring->auto_at(i).is_identity()) x = x + SkewPoly::constant(ring, DElem::rational(tag, rng.rat()));
      pt.push_back({x, ring->auto_at(i)});
    }
    const SkewPoly one = SkewPoly::constant(ring, DElem::one(tag));
    auto sub = [&](const SkewPoly& p) { return substitute<SkewPoly>(p, pt, one); };
    const bool mul_ok = sub(f * g) == sub(f) * sub(g);
    const bool add_ok = sub(f + g) == sub(f) + sub(g);
    if (!mul_ok || !add_ok) ++failures;
  }
  if (failures > 0) fail(ErrorCode::InternalCheckFailed, std::to_string(failures) + " trials broke the homomorphism property");
  return {{"seed", ctx.seed}, {"trials", trials}, {"failures", failures}};
}

Json verb_demo(const Json& a, const Context& ctx);
Json verb_verbs(const Json&, const Context&);

const std::vector<Verb>& registry() {
  static const std::vector<Verb> verbs = {
      {{"arith", "add, sub, mul or inv on elements of HQ or QX"}, verb_arith},
      {{"auto.apply", "apply an automorphism to an element"}, verb_auto_apply},
      {{"auto.equal", "decide equality of two automorphisms"}, verb_auto_equal},
      {{"auto.commute", "decide whether two automorphisms commute"}, verb_auto_commute},
      {{"element.central", "centrality, and fixedness under an optional automorphism"}, verb_element_central},
      {{"auto.inner-order", "least k <= bound with sigma^k inner"}, verb_inner_order},
      {{"linalg.solve", "some x with x A = b"}, verb_solve},
      {{"linalg.nullspace", "basis of left null vectors"}, verb_nullspace},
      {{"mul", "product of skew polynomials"}, verb_mul},
      {{"add", "sum of skew polynomials"}, verb_add},
      {{"sub", "difference of skew polynomials"}, verb_sub},
      {{"scale", "left scalar multiple"}, verb_scale},
      {{"degree", "total degree, degree per variable, homogeneity"}, verb_degree},
      {{"leading-form", "top-degree homogeneous part"}, verb_leading_form},
      {{"monic-last", "whether the polynomial is monic in the last variable"}, verb_monic_last},
      {{"automorphic", "the twist of an automorphic element"}, verb_automorphic},
      {{"subst", "substitute automorphic commuting elements for the variables"}, verb_subst},
      {{"shift-linear", "t_i -> t_i + a_i t_n"}, verb_shift_linear},
      {{"shift-power", "t_i -> t_i + t_n^(d^(n-i))"}, verb_shift_power},
      {{"nullsatz.search", "a point where f does not vanish"}, verb_nullsatz_search},
      {{"nullsatz.projective", "a point (a_1, ..., a_{n-1}, 1) where f does not vanish"}, verb_nullsatz_projective},
      {{"monicize", "make a polynomial monic in the last variable"}, verb_monicize},
      {{"normalize.run", "normalization certificate, verified on degree slices"}, verb_normalize},
      {{"power.reduce", "w_i = z_i^d_i with a common twist and the module basis"}, verb_power_reduce},
      {{"tuple.decide-shifts", "normalizability of a tuple of shifts of Q(x)"}, verb_decide_shifts},
      {{"laurent.arith", "add, sub or mul of Laurent polynomials"}, verb_laurent_arith},
      {{"laurent.classify", "automorphic classification of a Laurent polynomial"}, verb_laurent_classify},
      {{"laurent.witness", "u = t^-k + c^-2 t^k and its integral relation"}, verb_laurent_witness},
      {{"laurent.invert-check", "whether an integral relation for t^-1 is consistent"}, verb_laurent_invert},
      {{"quotient.arith", "add, sub or mul in D[t1,t2]/(t1 t2)"}, verb_quotient_arith},
      {{"quotient.depend", "left dependence among monomials in two commuting elements"}, verb_quotient_depend},
      {{"quotient.witness", "u = z1^k1 + c z2^k2 and its integrality checks"}, verb_quotient_witness},
      {{"quotient.decide", "search for (k1, k2, c) with s1^k1 s2^-k2 inner"}, verb_quotient_decide},
      {{"quat.constants", "extraction constants b[i][s][t]"}, verb_quat_constants},
      {{"quat.decompose", "the four central components of a polynomial over HQ"}, verb_quat_decompose},
      {{"quat.centralize", "central generators of the same subring"}, verb_quat_centralize},
      {{"quat.point-ideal", "whether the ideal of a point can be two-sided"}, verb_quat_point_ideal},
      {{"prop.homomorphism", "seeded random check that substitution is a ring map"}, verb_prop_homomorphism},
      {{"demo", "replay a named worked construction"}, verb_demo},
      {{"verbs", "list the verbs"}, verb_verbs},
  };
  return verbs;
}

Json verb_verbs(const Json&, const Context&) {
  Json out = Json::array();
  for (const auto& v : registry()) out.push_back({{"verb", v.info.name}, {"summary", v.info.summary}});
  return out;
}

// Demos. Each returns a transcript and named checks.

class Transcript {
 public:
  void say(const std::string& line) { lines_.push_back(line); }
  void check(const std::string& name, bool ok) {
    checks_.push_back({{"check", name}, {"ok", ok}});
    if (!ok) failed_.push_back(name);
  }
  Json finish(const std::string& name) const {
    if (!failed_.empty()) fail(ErrorCode::InternalCheckFailed, "demo '" + name + "' failed check '" + failed_.front() + "'");
    return {{"demo", name}, {"transcript", lines_}, {"checks", checks_}};
  }

 private:
  std::vector<std::string> lines_;
  Json checks_ = Json::array();
  std::vector<std::string> failed_;
};

SkewPoly var(const RingPtr& r, size_t i, long k = 1) {
  ExpVec e(r->n(), 0);
  e[i] = k;
  return SkewPoly::monomial(r, e, DElem::one(r->algebra()));
}

Json demo_linear_monicize(Transcript& tr) {
  const RingPtr r = make_central_ring(AlgebraTag::QX, 2);
  const SkewPoly f = var(r, 0) * var(r, 1) + var(r, 0);
  tr.say("f = " + f.str());
  const auto mr = monicize_linear(f);
  tr.say("shift t1 -> t1 + (" + to_string(mr.shift.at(0)) + ") t2, scale " + mr.scale.str());
  tr.say("g = " + mr.g.str());
  tr.check("g monic in t2", is_monic_in_last(mr.g));
  tr.check("g = scale * shifted f", mr.g == scale_left(mr.scale, apply_transform(mr, f)));
  return tr.finish("linear-monicize");
}

Json demo_dadic_monicize(Transcript& tr) {
  const RingPtr r = make_central_ring(AlgebraTag::HQ, 2);
  const SkewPoly f = var(r, 0) * var(r, 1);
  tr.say("f = " + f.str());
  const auto mr = monicize_dadic(f);
  tr.say("d = " + std::to_string(mr.d) + ", t1 -> t1 + t2^" + std::to_string(mr.powers.at(0)));
  tr.say("g = " + mr.g.str());
  tr.check("g = t2^4 + t1 t2", mr.g == var(r, 1, 4) + f);
  tr.check("g monic in t2", is_monic_in_last(mr.g));
  return tr.finish("dadic-monicize");
}

Json demo_laurent_negative(Transcript& tr) {
  const AutoDesc s = AutoDesc::shift(Rat(1));
  const DElem one = DElem::one(AlgebraTag::QX), x = DElem(RatFun::x());
  tr.say("sigma: " + describe(s));
  const LaurentPoly mono = LaurentPoly::monomial(AlgebraTag::QX, s, -2, x);
  const auto cm = classify_automorphic(mono);
  tr.say(mono.str() + " -> " + kind_name(cm.kind) + " twisting by " + describe(*cm.twist));
  tr.check("monomial is automorphic", cm.kind == LaurentClassification::Kind::Monomial);
  long multi = 0, scanned = 0;
  for (long a = -2; a <= 2; ++a)
    for (long b = a + 1; b <= 2; ++b) {
      const LaurentPoly f = LaurentPoly::monomial(AlgebraTag::QX, s, a, one) + LaurentPoly::monomial(AlgebraTag::QX, s, b, x);
      ++scanned;
      if (classify_automorphic(f).kind != LaurentClassification::Kind::NotAutomorphic) ++multi;
    }
  const LaurentPoly u = LaurentPoly::monomial(AlgebraTag::QX, s, -1, one) + LaurentPoly::monomial(AlgebraTag::QX, s, 1, one);
  const auto cu = classify_automorphic(u);
  tr.say(u.str() + " -> " + kind_name(cu.kind) + " (terms " + std::to_string(cu.conflict->first) + " and " +
         std::to_string(cu.conflict->second) + " disagree)");
  tr.say("two-term elements scanned: " + std::to_string(scanned) + ", automorphic: " + std::to_string(multi));
  tr.check("no two-term element is automorphic", multi == 0);
  tr.check("t^-1 + t is not automorphic", cu.kind == LaurentClassification::Kind::NotAutomorphic);
  return tr.finish("laurent-negative");
}

Json demo_laurent_positive(Transcript& tr) {
  const AutoDesc s = AutoDesc::inner(DElem(Quat::i()));
  const DElem c = DElem(Quat(-1));
  const auto w = finite_inner_order_witness(s, 2, c);
  const LaurentPoly t = LaurentPoly::monomial(AlgebraTag::HQ, s, 1, DElem::one(AlgebraTag::HQ));
  tr.say("sigma = " + describe(s) + ", sigma^2 = in(-1)");
  tr.say("u = " + w.u.str());
  tr.say("relation: " + w.relation.str());
  tr.check("relation vanishes at (u, t)", evaluate_ut(w.relation, w.u, t).is_zero());
  tr.check("u commutes with t", w.u_commutes_with_t);
  tr.check("u = t^-2 + t^2", w.u == LaurentPoly::monomial(AlgebraTag::HQ, s, -2, DElem::one(AlgebraTag::HQ)) +
                                       LaurentPoly::monomial(AlgebraTag::HQ, s, 2, DElem::one(AlgebraTag::HQ)));
  return tr.finish("laurent-positive");
}

Json demo_quotient_negative(Transcript& tr) {
  const auto dec = decide_quotient_normalizable(AutoDesc::shift(Rat(1)), AutoDesc::shift(Rat(-1)), 20);
  tr.say("sigma1 = x -> x + 1, sigma2 = x -> x - 1");
  tr.say(dec.found ? "witness found" : "no (k1, k2, c) up to bound " + std::to_string(dec.bound));
  tr.check("no witness", !dec.found);
  tr.check("opposite signs prove non-normalizability", dec.proven_not_normalizable);
  return tr.finish("quotient-negative");
}

Json demo_quotient_positive(Transcript& tr) {
  const AutoDesc s1 = AutoDesc::shift(Rat(1)), s2 = AutoDesc::shift(Rat(2));
  const auto dec = decide_quotient_normalizable(s1, s2, 20);
  tr.say("sigma1 = x -> x + 1, sigma2 = x -> x + 2");
  tr.check("witness found", dec.found);
  if (!dec.found) return tr.finish("quotient-positive");
  tr.say("k1 = " + std::to_string(dec.k1) + ", k2 = " + std::to_string(dec.k2) + ", c = " + dec.c->str());
  const RingPtr ring = make_ring(AlgebraTag::QX, {s1, s2});
  const auto w = quotient_witness(ring, dec.k1, dec.k2, *dec.c);
  tr.say("u = " + w.u.str());
  tr.check("z1 integral over u", w.z1_integral);
  tr.check("z2 integral over u", w.z2_integral);
  return tr.finish("quotient-positive");
}

Json demo_quat_point_ideal(Transcript& tr) {
  const auto nc = point_ideal_two_sided({Quat::i(), Quat::j()});
  const auto cn = point_ideal_two_sided({Quat::i(), Quat(2, 3)});
  const auto re = point_ideal_two_sided({Quat(1), Quat(Rat(-1, 2))});
  for (const auto* r : {&nc, &cn, &re}) {
    tr.say(kind_name(r->kind));
    for (const auto& line : r->chain) tr.say("  " + line);
  }
  tr.check("(i, j) does not commute", nc.kind == PointIdealResult::Kind::NonCommuting);
  tr.check("(i, 2+3i) is not real", cn.kind == PointIdealResult::Kind::CommutingNonReal);
  tr.check("(1, -1/2) is two-sided", re.kind == PointIdealResult::Kind::TwoSidedReal);
  return tr.finish("quat-point-ideal");
}

Json demo_field_shifts(Transcript& tr) {
  const auto yes = decide_tuple_normalizable_field_shifts({AutoDesc::shift(Rat(2)), AutoDesc::shift(Rat(3))});
  const auto no = decide_tuple_normalizable_field_shifts({AutoDesc::shift(Rat(1)), AutoDesc::shift(Rat(-1))});
  tr.say("shifts (2, 3): " + std::string(yes.normalizable ? "normalizable" : "not normalizable"));
  if (yes.normalizable) tr.say("  d = (" + yes.exponents[0].get_str() + ", " + yes.exponents[1].get_str() + ")");
  tr.say("shifts (1, -1): " + std::string(no.normalizable ? "normalizable" : "not normalizable"));
  tr.check("(2, 3) normalizable with d = (3, 2)",
           yes.normalizable && yes.exponents.size() == 2 && yes.exponents[0] == 3 && yes.exponents[1] == 2);
  tr.check("(1, -1) not normalizable", !no.normalizable);
  return tr.finish("field-shifts");
}

Json demo_normalize_quotient(Transcript& tr) {
  const RingPtr ring = make_central_ring(AlgebraTag::QX, 2);
  const std::vector<QuotientElem> z = {QuotientElem::z(ring, 1), QuotientElem::z(ring, 2)};
  const QuotientElem one = QuotientElem::constant(ring, DElem::one(AlgebraTag::QX));
  const auto cert = normalize<QuotientElem>(as_witnesses<QuotientElem>(z, AutoDesc::identity()),
                                            quotient_dependence_oracle(), NormalizeMode::Central, one);
  tr.say("generators z1, z2 in Q(x)[z1, z2]/(z1 z2)");
  for (const auto& st : cert.steps) {
    tr.say("relation " + st.relation.str());
    tr.say("monic form " + st.transform.g.str());
  }
  tr.say("independent generators: " + std::to_string(cert.independent_gens.size()));
  const auto rep = verify_certificate<QuotientElem>(cert, z, one, 6);
  tr.say("verified " + std::to_string(rep.monomials_checked) + " monomials up to degree 6");
  tr.check("one normalization step", cert.steps.size() == 1);
  tr.check("certificate verifies", rep.ok);
  return tr.finish("normalize-quotient");
}

Json demo_power_reduce(Transcript& tr) {
  const AutoDesc si = AutoDesc::inner(DElem(Quat::i())), sj = AutoDesc::inner(DElem(Quat::j()));
  const RingPtr ring = make_ring(AlgebraTag::HQ, {si, sj});
  const SkewPoly one = SkewPoly::constant(ring, DElem::one(AlgebraTag::HQ));
  const auto pr = power_reduce<SkewPoly>({{var(ring, 0), si}, {var(ring, 1), sj}}, {2, 2}, one);
  tr.say("sigma1 = in(i), sigma2 = in(j), both square to the identity");
  for (const auto& w : pr.w) tr.say("w = " + w.element.str());
  tr.say("basis size " + std::to_string(pr.basis.size()));
  bool twists = true;
  for (const auto& w : pr.w) twists = twists && auto_equal(check_automorphic(w.element), pr.twist);
  tr.check("common twist is the identity", pr.twist.is_identity());
  tr.check("w_i automorphic for the common twist", twists);
  tr.check("basis has 4 elements", pr.basis.size() == 4);
  return tr.finish("power-reduce");
}

struct Demo {
  VerbInfo info;
  std::function<Json(Transcript&)> run;
};

const std::vector<Demo>& demos() {
  static const std::vector<Demo> list = {
      {{"linear-monicize", "t1 t2 + t1 made monic by a linear change"}, demo_linear_monicize},
      {{"dadic-monicize", "t1 t2 becomes t2^4 + t1 t2"}, demo_dadic_monicize},
      {{"laurent-negative", "under x -> x + 1 only monomials are automorphic"}, demo_laurent_negative},
      {{"laurent-positive", "u = t^-2 + t^2 for in(i)"}, demo_laurent_positive},
      {{"quotient-negative", "opposite shifts admit no witness"}, demo_quotient_negative},
      {{"quotient-positive", "shifts 1 and 2 admit a witness"}, demo_quotient_positive},
      {{"quat-point-ideal", "the three cases for points of HQ^n"}, demo_quat_point_ideal},
      {{"field-shifts", "tuples of shifts of Q(x)"}, demo_field_shifts},
      {{"normalize-quotient", "central normalization of (z1, z2)"}, demo_normalize_quotient},
      {{"power-reduce", "squares of t1, t2 under in(i), in(j)"}, demo_power_reduce},
  };
  return list;
}

Json verb_demo(const Json& a, const Context&) {
  const std::string name = str_field(a, "name");
  for (const auto& d : demos()) {
    if (d.info.name != name) continue;
    Transcript tr;
    return d.run(tr);
  }
  fail(ErrorCode::UnknownDemo, "no demo named '" + name + "'");
}

bool usage_error(ErrorCode c) {
  return c == ErrorCode::UnknownVerb || c == ErrorCode::SchemaViolation || c == ErrorCode::UnknownDemo;
}

Response error_response(ErrorCode code, const std::string& message) {
  Response r;
  r.ok = false;
  r.result = nullptr;
  r.diagnostics.push_back({{"code", std::string(code_name(code))}, {"message", message}});
  r.exit_code = usage_error(code) ? 2 : 1;
  return r;
}

}  // namespace

const std::vector<VerbInfo>& verb_list() {
  static const std::vector<VerbInfo> list = [] {
    std::vector<VerbInfo> out;
    for (const auto& v : registry()) out.push_back(v.info);
    return out;
  }();
  return list;
}

const std::vector<VerbInfo>& demo_list() {
  static const std::vector<VerbInfo> list = [] {
    std::vector<VerbInfo> out;
    for (const auto& d : demos()) out.push_back(d.info);
    return out;
  }();
  return list;
}

Response dispatch(const Json& request, std::optional<std::uint64_t> seed_override) {
  try {
    if (!request.is_object()) fail(ErrorCode::SchemaViolation, "request must be a JSON object");
    for (const auto& [k, v] : request.items())
      if (k != "verb" && k != "args" && k != "seed") fail(ErrorCode::SchemaViolation, "unknown request field '" + k + "'");
    const Json& verb = field(request, "verb");
    if (!verb.is_string()) fail(ErrorCode::SchemaViolation, "verb must be a string");
    Context ctx;
    if (request.contains("seed")) {
      const Json& s = request["seed"];
      if (!s.is_number_integer() || (!s.is_number_unsigned() && s.get<long long>() < 0))
        fail(ErrorCode::SchemaViolation, "seed must be a non-negative integer");
      ctx.seed = request["seed"].get<std::uint64_t>();
    }
    if (seed_override) ctx.seed = *seed_override;
    const Json args = request.contains("args") ? request["args"] : Json::object();
    if (!args.is_object()) fail(ErrorCode::SchemaViolation, "args must be an object");
    for (const auto& v : registry()) {
      if (v.info.name != verb.get<std::string>()) continue;
      Response r;
      r.result = v.run(args, ctx);
      return r;
    }
    fail(ErrorCode::UnknownVerb, "unknown verb '" + verb.get<std::string>() + "'");
  } catch (const Error& e) {
    return error_response(e.code(), e.what());
  } catch (const Json::exception& e) {
    return error_response(ErrorCode::SchemaViolation, e.what());
  } catch (const std::exception& e) {
    return error_response(ErrorCode::InternalCheckFailed, e.what());
  }
}

Response dispatch_text(const std::string& text, std::optional<std::uint64_t> seed_override) {
  Json req;
  try {
    req = Json::parse(text);
  } catch (const Json::parse_error& e) {
    return error_response(ErrorCode::SchemaViolation, std::string("malformed JSON: ") + e.what());
  }
  return dispatch(req, seed_override);
}

Response run_demo(const std::string& name, std::uint64_t seed) {
  return dispatch(Json{{"verb", "demo"}, {"args", {{"name", name}}}, {"seed", seed}});
}

}  // namespace skewnorm
