#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skewnorm/autodesc.hpp"

namespace skewnorm {

using ExpVec = std::vector<long>;

/// Total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

long exp_degree(const ExpVec& e);

/// (D, n, sigma_1..sigma_n) with pairwise commuting sigma_i.
class RingDesc {
 public:
  RingDesc(AlgebraTag algebra, std::vector<AutoDesc> autos);

  AlgebraTag algebra() const { return algebra_; }
  size_t n() const { return autos_.size(); }
  const std::vector<AutoDesc>& autos() const { return autos_; }
  const AutoDesc& auto_at(size_t i) const { return autos_[i]; }
  bool is_central() const;
  /// sigma_1^{e_1} o ... o sigma_n^{e_n}.
  AutoDesc twist(const ExpVec& e) const;

  friend bool operator==(const RingDesc& a, const RingDesc& b);

 private:
  AlgebraTag algebra_;
  std::vector<AutoDesc> autos_;
};

using RingPtr = std::shared_ptr<const RingDesc>;

RingPtr make_ring(AlgebraTag algebra, std::vector<AutoDesc> autos);
RingPtr make_central_ring(AlgebraTag algebra, size_t n);
/// Same algebra, every automorphism replaced by `sigma`.
RingPtr make_constant_ring(AlgebraTag algebra, size_t n, const AutoDesc& sigma);
bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Sum of c_I t^I with coefficients on the left; zero terms are never stored.
class SkewPoly {
 public:
  using Terms = std::map<ExpVec, DElem, GradedLexLess>;

  explicit SkewPoly(RingPtr ring);
  static SkewPoly constant(RingPtr ring, const DElem& c);
  static SkewPoly variable(RingPtr ring, size_t i);
  static SkewPoly monomial(RingPtr ring, ExpVec e, const DElem& c);

  const RingPtr& ring() const { return ring_; }
  AlgebraTag algebra() const { return ring_->algebra(); }
  size_t nvars() const { return ring_->n(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  DElem coeff(const ExpVec& e) const;

  /// Adds c t^e into the sum.
  void add_term(const ExpVec& e, const DElem& c);

  SkewPoly operator-() const;
  friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g);
  friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g);
  friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g);
  friend bool operator==(const SkewPoly& f, const SkewPoly& g);

  /// Same terms read in another ring with the same algebra and n.
  SkewPoly reinterpret(RingPtr ring) const;

  std::string str() const;

 private:
  RingPtr ring_;
  Terms terms_;
};

SkewPoly scale_left(const DElem& c, const SkewPoly& f);
SkewPoly pow(const SkewPoly& f, unsigned k);

long total_degree(const SkewPoly& f);
/// Degree in variable i (0-based); -1 for the zero polynomial.
long degree_in(const SkewPoly& f, size_t i);
bool is_homogeneous(const SkewPoly& f);

/// Top homogeneous part over the central ring in the same number of variables.
SkewPoly leading_form(const SkewPoly& f);

/// Top coefficient in t_n is the constant 1 (the constant 1 itself counts).
bool is_monic_in_last(const SkewPoly& f);

/// Ring on the first n-1 variables.
RingPtr drop_last(const RingPtr& ring);
/// f = sum_e r_e t_n^e with r_e over the first n-1 variables.
std::map<long, SkewPoly> coefficients_in_last(const SkewPoly& f);
SkewPoly join_last(const RingPtr& ring, const std::map<long, SkewPoly>& parts);

/// p = q * g + r with deg_{t_n} r < deg_{t_n} g, for g monic in t_n.
std::pair<SkewPoly, SkewPoly> divmod_monic_last(const SkewPoly& p, const SkewPoly& g);

/// Central polynomial in n variables with u_n set to 1.
SkewPoly dehomogenize_last(const SkewPoly& f);

/// Element-interface hooks used by the generic algorithms.
using BasisKey = std::vector<long>;
SkewPoly constant_like(const SkewPoly& exemplar, const DElem& c);
std::vector<AutoDesc> term_twists(const SkewPoly& f);
std::vector<std::pair<BasisKey, DElem>> coordinates(const SkewPoly& f);
inline AlgebraTag algebra_of(const SkewPoly& f) { return f.algebra(); }

}  // namespace skewnorm
