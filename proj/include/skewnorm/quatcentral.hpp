#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewnorm/skewpoly.hpp"

namespace skewnorm {

/// component_i(q) = sum_{s,t} b[i][s][t] v_s q v_t with v = (1, i, j, k).
struct ExtractionConstants {
  std::array<std::array<std::array<Rat, 4>, 4>, 4> b;
};

/// Solved once and shared.
const ExtractionConstants& extraction_constants();

/// Evaluates sum_{s,t} b[i][s][t] v_s q v_t as a quaternion.
Quat extract_component(const ExtractionConstants& ec, int i, const Quat& q);

/// p = sum_r p_r v_r with rational p_r; both identities verified.
std::array<SkewPoly, 4> central_components(const SkewPoly& p);

struct CentralizeResult {
  std::vector<SkewPoly> central;                           // B
  std::vector<std::vector<std::pair<int, size_t>>> rebuild;  // per a: (basis index r, index into B)
  std::vector<std::pair<size_t, int>> source;              // per b: (index into A, basis index r)
};

/// B with D[A] = D[B], B made of central polynomials; certificates checked
/// by exact expansion in both directions.
CentralizeResult centralize_generators(const std::vector<SkewPoly>& a);

struct PointIdealResult {
  enum class Kind { TwoSidedReal, CommutingNonReal, NonCommuting };
  Kind kind = Kind::TwoSidedReal;
  std::optional<std::pair<size_t, size_t>> pair;  // NonCommuting
  std::optional<size_t> index;                    // CommutingNonReal
  std::optional<Quat> witness;                    // b with a b != b a
  std::optional<Quat> conjugate;                  // b^{-1} a b
  std::optional<Quat> constant_in_ideal;          // a - b^{-1} a b
  std::vector<std::string> chain;
};

std::string kind_name(PointIdealResult::Kind kind);

/// Whether the left ideal generated by t_i - a_i can be proper and two-sided.
PointIdealResult point_ideal_two_sided(const std::vector<Quat>& a);

}  // namespace skewnorm
