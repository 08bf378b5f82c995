#pragma once

#include <json.hpp>

#include "skewnorm/dmatrix.hpp"
#include "skewnorm/laurent.hpp"
#include "skewnorm/normalize.hpp"
#include "skewnorm/quotient.hpp"
#include "skewnorm/skewpoly.hpp"

namespace skewnorm {

using Json = nlohmann::ordered_json;

/// Required member of an object, or SchemaViolation.
const Json& field(const Json& obj, const char* key);
long int_field(const Json& obj, const char* key);
long int_field(const Json& obj, const char* key, long fallback);

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const Quat& q);
Quat quat_from_json(const Json& j);
Json to_json(const RatFun& r);
RatFun ratfun_from_json(const Json& j);
Json to_json(const DElem& e);
DElem delem_from_json(const Json& j, AlgebraTag tag);
Json to_json(const AutoDesc& sigma);
AutoDesc auto_from_json(const Json& j, AlgebraTag tag);

Json to_json(const RingDesc& ring);
RingPtr ring_from_json(const Json& j);

Json to_json(const SkewPoly& f);
/// Uses the embedded "ring" when present, else `ring`.
SkewPoly skewpoly_from_json(const Json& j, const RingPtr& ring = nullptr);

Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const QuotientElem& f);
QuotientElem quotient_from_json(const Json& j, const RingPtr& ring = nullptr);

DMatrix matrix_from_json(const Json& rows, AlgebraTag tag);
Json to_json(const std::vector<DElem>& v);
std::vector<DElem> delems_from_json(const Json& j, AlgebraTag tag);

Json to_json(const MonicizationResult& mr);

template <class S>
Json to_json(const NormalizationCert<S>& cert) {
  Json steps = Json::array();
  for (const auto& st : cert.steps) {
    Json gens = Json::array();
    for (const auto& g : st.generators) gens.push_back(to_json(g));
    steps.push_back({{"generators", gens},
                     {"relation", to_json(st.relation)},
                     {"transform", to_json(st.transform)},
                     {"integral", to_json(st.integral)}});
  }
  Json indep = Json::array();
  for (const auto& w : cert.independent_gens) indep.push_back({{"element", to_json(w.element)}, {"twist", to_json(w.twist)}});
  Json mods = Json::array();
  for (const auto& m : cert.module_gens) mods.push_back({{"exponents", m.exponents}, {"element", to_json(m.element)}});
  return {{"mode", mode_name(cert.mode)},
          {"twist", to_json(cert.twist)},
          {"steps", steps},
          {"independent_gens", indep},
          {"independent_up_to", cert.independent_up_to},
          {"module_gens", mods}};
}

Json to_json(const CertificateReport& rep);

}  // namespace skewnorm
