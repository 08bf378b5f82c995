#include "skewnorm/json_io.hpp"

#include "skewnorm/error.hpp"

namespace skewnorm {

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) fail(ErrorCode::SchemaViolation, std::string("expected an object with field '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorCode::SchemaViolation, std::string("missing field '") + key + "'");
  return *it;
}

long int_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number_integer()) fail(ErrorCode::SchemaViolation, std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

long int_field(const Json& obj, const char* key, long fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  return int_field(obj, key);
}

Json to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) fail(ErrorCode::SchemaViolation, "rational must be a string \"p/q\"");
  return parse_rat(j.get<std::string>());
}

Json to_json(const Quat& q) {
  return {{"a", to_json(q.a)}, {"b", to_json(q.b)}, {"c", to_json(q.c)}, {"d", to_json(q.d)}};
}

Quat quat_from_json(const Json& j) {
  if (!j.is_object()) return Quat(rat_from_json(j));
  for (const auto& [k, v] : j.items())
    if (k != "a" && k != "b" && k != "c" && k != "d") fail(ErrorCode::SchemaViolation, "unknown quaternion field '" + k + "'");
  auto part = [&](const char* k) { return j.contains(k) ? rat_from_json(j[k]) : Rat(0); };
  return Quat(part("a"), part("b"), part("c"), part("d"));
}

namespace {

Json poly_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

QPoly poly_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::SchemaViolation, "polynomial must be an array of coefficients");
  std::vector<Rat> c;
  for (const auto& v : j) c.push_back(rat_from_json(v));
  return QPoly(std::move(c));
}

}  // namespace

Json to_json(const RatFun& r) { return {{"num", poly_json(r.num())}, {"den", poly_json(r.den())}}; }

RatFun ratfun_from_json(const Json& j) {
  if (!j.is_object()) return RatFun(rat_from_json(j));
  const QPoly num = poly_from_json(field(j, "num"));
  const QPoly den = j.contains("den") ? poly_from_json(j["den"]) : QPoly::constant(1);
  return RatFun(num, den);
}

Json to_json(const DElem& e) { return e.tag() == AlgebraTag::HQ ? to_json(e.quat()) : to_json(e.ratfun()); }

DElem delem_from_json(const Json& j, AlgebraTag tag) {
  return tag == AlgebraTag::HQ ? DElem(quat_from_json(j)) : DElem(ratfun_from_json(j));
}

Json to_json(const AutoDesc& s) {
  switch (s.kind()) {
    case AutoDesc::Kind::Identity: return {{"kind", "identity"}};
    case AutoDesc::Kind::Inner: return {{"kind", "inner"}, {"unit", to_json(s.unit())}};
    case AutoDesc::Kind::GenImage: return {{"kind", "genimage"}, {"image", to_json(s.image())}};
    case AutoDesc::Kind::Power: return {{"kind", "power"}, {"base", to_json(s.base())}, {"exp", s.exponent()}};
    case AutoDesc::Kind::Compose: {
      Json parts = Json::array();
      for (const auto& p : s.parts()) parts.push_back(to_json(p));
      return {{"kind", "compose"}, {"parts", parts}};
    }
  }
  return nullptr;
}

AutoDesc auto_from_json(const Json& j, AlgebraTag tag) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) fail(ErrorCode::SchemaViolation, "automorphism kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "identity") return AutoDesc::identity();
  if (k == "inner") return AutoDesc::inner(delem_from_json(field(j, "unit"), tag));
  if (k == "genimage") {
    if (tag != AlgebraTag::QX) fail(ErrorCode::TagMismatch, "genimage automorphisms live on QX");
    return AutoDesc::gen_image(ratfun_from_json(field(j, "image")));
  }
  if (k == "power") return AutoDesc::power(auto_from_json(field(j, "base"), tag), int_field(j, "exp"));
  if (k == "compose") {
    const Json& parts = field(j, "parts");
    if (!parts.is_array()) fail(ErrorCode::SchemaViolation, "compose parts must be an array");
    std::vector<AutoDesc> ps;
    for (const auto& p : parts) ps.push_back(auto_from_json(p, tag));
    return AutoDesc::compose(std::move(ps));
  }
  fail(ErrorCode::SchemaViolation, "unknown automorphism kind '" + k + "'");
}

Json to_json(const RingDesc& ring) {
  Json autos = Json::array();
  for (const auto& a : ring.autos()) autos.push_back(to_json(a));
  return {{"algebra", tag_name(ring.algebra())}, {"n", ring.n()}, {"autos", autos}};
}

RingPtr ring_from_json(const Json& j) {
  const Json& alg = field(j, "algebra");
  if (!alg.is_string()) fail(ErrorCode::SchemaViolation, "algebra must be \"HQ\" or \"QX\"");
  const AlgebraTag tag = parse_tag(alg.get<std::string>());
  if (!j.contains("autos")) {
    const long n = int_field(j, "n");
    if (n < 0) fail(ErrorCode::SchemaViolation, "n must be non-negative");
    return make_central_ring(tag, size_t(n));
  }
  const Json& autos = j["autos"];
  if (!autos.is_array()) fail(ErrorCode::SchemaViolation, "autos must be an array");
  std::vector<AutoDesc> as;
  for (const auto& a : autos) as.push_back(auto_from_json(a, tag));
  if (j.contains("n") && int_field(j, "n") != long(as.size()))
    fail(ErrorCode::SchemaViolation, "n does not match the number of automorphisms");
  return make_ring(tag, std::move(as));
}

Json to_json(const SkewPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", to_json(c)}});
  return {{"ring", to_json(*f.ring())}, {"terms", terms}};
}

SkewPoly skewpoly_from_json(const Json& j, const RingPtr& ring) {
  RingPtr r = j.is_object() && j.contains("ring") ? ring_from_json(j["ring"]) : ring;
  if (!r) fail(ErrorCode::SchemaViolation, "polynomial needs a ring");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) fail(ErrorCode::SchemaViolation, "terms must be an array");
  SkewPoly f(r);
  for (const auto& t : terms) {
    const Json& e = field(t, "exp");
    if (!e.is_array()) fail(ErrorCode::SchemaViolation, "exp must be an array");
    ExpVec ev;
    for (const auto& x : e) {
      if (!x.is_number_integer()) fail(ErrorCode::SchemaViolation, "exponents must be integers");
      ev.push_back(x.get<long>());
    }
    if (ev.size() != r->n()) fail(ErrorCode::SchemaViolation, "exponent vector length does not match the ring");
    for (long x : ev)
      if (x < 0) fail(ErrorCode::SchemaViolation, "exponents must be non-negative");
    f.add_term(ev, delem_from_json(field(t, "coef"), r->algebra()));
  }
  return f;
}

Json to_json(const LaurentPoly& f) {
  Json terms = Json::object();
  for (const auto& [k, c] : f.terms()) terms[std::to_string(k)] = to_json(c);
  return {{"algebra", tag_name(f.algebra())}, {"auto", to_json(f.sigma())}, {"terms", terms}};
}

namespace {

long parse_key(const std::string& k) {
  try {
    size_t pos = 0;
    const long v = std::stol(k, &pos);
    if (pos == k.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::SchemaViolation, "term key '" + k + "' is not an integer");
}

}  // namespace

LaurentPoly laurent_from_json(const Json& j) {
  const Json& alg = field(j, "algebra");
  if (!alg.is_string()) fail(ErrorCode::SchemaViolation, "algebra must be a string");
  const AlgebraTag tag = parse_tag(alg.get<std::string>());
  LaurentPoly f(tag, j.contains("auto") ? auto_from_json(j["auto"], tag) : AutoDesc::identity());
  const Json& terms = field(j, "terms");
  if (!terms.is_object()) fail(ErrorCode::SchemaViolation, "Laurent terms must be an object keyed by exponents");
  for (const auto& [k, v] : terms.items()) f.add_term(parse_key(k), delem_from_json(v, tag));
  return f;
}

Json to_json(const QuotientElem& f) {
  Json z1 = Json::object(), z2 = Json::object();
  for (const auto& [k, c] : f.pos1()) z1[std::to_string(k)] = to_json(c);
  for (const auto& [k, c] : f.pos2()) z2[std::to_string(k)] = to_json(c);
  return {{"ring", to_json(*f.ring())}, {"c0", to_json(f.c0())}, {"z1", z1}, {"z2", z2}};
}

QuotientElem quotient_from_json(const Json& j, const RingPtr& ring) {
  RingPtr r = j.is_object() && j.contains("ring") ? ring_from_json(j["ring"]) : ring;
  if (!r) fail(ErrorCode::SchemaViolation, "quotient element needs a ring");
  if (!j.is_object()) fail(ErrorCode::SchemaViolation, "quotient element must be an object");
  QuotientElem f(r);
  if (j.contains("c0")) f.add_term(0, 0, delem_from_json(j["c0"], r->algebra()));
  for (int which : {1, 2}) {
    const char* key = which == 1 ? "z1" : "z2";
    if (!j.contains(key)) continue;
    if (!j[key].is_object()) fail(ErrorCode::SchemaViolation, std::string(key) + " must be an object");
    for (const auto& [k, v] : j[key].items()) {
      const long e = parse_key(k);
      if (e < 1) fail(ErrorCode::SchemaViolation, "quotient exponents must be positive");
      f.add_term(which, e, delem_from_json(v, r->algebra()));
    }
  }
  return f;
}

DMatrix matrix_from_json(const Json& rows, AlgebraTag tag) {
  if (!rows.is_array() || rows.empty()) fail(ErrorCode::SchemaViolation, "matrix must be a non-empty array of rows");
  std::vector<std::vector<DElem>> data;
  for (const auto& r : rows) data.push_back(delems_from_json(r, tag));
  const size_t cols = data.front().size();
  for (const auto& r : data)
    if (r.size() != cols) fail(ErrorCode::SchemaViolation, "matrix rows differ in length");
  return DMatrix(tag, cols, std::move(data));
}

Json to_json(const std::vector<DElem>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_json(e));
  return out;
}

std::vector<DElem> delems_from_json(const Json& j, AlgebraTag tag) {
  if (!j.is_array()) fail(ErrorCode::SchemaViolation, "expected an array of elements");
  std::vector<DElem> out;
  for (const auto& e : j) out.push_back(delem_from_json(e, tag));
  return out;
}

Json to_json(const MonicizationResult& mr) {
  Json shift = Json::array();
  for (const auto& s : mr.shift) shift.push_back(to_json(s));
  return {{"method", mr.method == MonicMethod::Linear ? "linear" : "dadic"},
          {"scale", to_json(mr.scale)},
          {"shift", shift},
          {"powers", mr.powers},
          {"d", mr.d},
          {"g", to_json(mr.g)},
          {"m", mr.m}};
}

Json to_json(const CertificateReport& rep) {
  return {{"ok", rep.ok},
          {"max_slice", rep.max_slice},
          {"monomials_checked", rep.monomials_checked},
          {"linear_systems", rep.linear_systems},
          {"failure", rep.failure}};
}

}  // namespace skewnorm
