#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewnorm/normalize.hpp"
#include "skewnorm/skewpoly.hpp"

namespace skewnorm {

/// Element of D[t1, t2; s1, s2] / (t1 t2): c0 + sum a_i z1^i + sum b_j z2^j.
class QuotientElem {
 public:
  explicit QuotientElem(RingPtr ring);
  static QuotientElem constant(RingPtr ring, const DElem& c);
  /// c * z_which^k; which is 1 or 2 (k = 0 gives a constant).
  static QuotientElem monomial(RingPtr ring, int which, long k, const DElem& c);
  static QuotientElem z(RingPtr ring, int which) { return monomial(ring, which, 1, DElem::one(ring->algebra())); }
  /// Image of a skew polynomial under the projection; mixed monomials vanish.
  static QuotientElem project(const SkewPoly& f);

  const RingPtr& ring() const { return ring_; }
  AlgebraTag algebra() const { return ring_->algebra(); }
  const DElem& c0() const { return c0_; }
  const std::map<long, DElem>& pos1() const { return pos1_; }
  const std::map<long, DElem>& pos2() const { return pos2_; }
  bool is_zero() const { return c0_.is_zero() && pos1_.empty() && pos2_.empty(); }
  /// Largest exponent present (0 for constants, -1 for zero).
  long degree() const;

  void add_term(int which, long k, const DElem& c);

  QuotientElem operator-() const;
  friend QuotientElem operator+(const QuotientElem& f, const QuotientElem& g);
  friend QuotientElem operator-(const QuotientElem& f, const QuotientElem& g);
  friend QuotientElem operator*(const QuotientElem& f, const QuotientElem& g);
  friend bool operator==(const QuotientElem& f, const QuotientElem& g);

  std::string str() const;

 private:
  RingPtr ring_;
  DElem c0_;
  std::map<long, DElem> pos1_;
  std::map<long, DElem> pos2_;
};

QuotientElem constant_like(const QuotientElem& exemplar, const DElem& c);
std::vector<AutoDesc> term_twists(const QuotientElem& f);
std::vector<std::pair<BasisKey, DElem>> coordinates(const QuotientElem& f);
inline AlgebraTag algebra_of(const QuotientElem& f) { return f.algebra(); }

struct DependenceWitness {
  enum class Kind { ZeroMonomial, EqualMonomials, Nullspace };
  Kind kind;
  std::map<std::pair<long, long>, DElem> combo;  // (k1, k2) -> coefficient of x1^k1 x2^k2
  long N = 0;
  long d = 0;
};

std::string kind_name(DependenceWitness::Kind kind);

/// Least N with (N+2)(N+1)/2 > 2dN + 1.
long counting_bound(long d);

/// A nonzero left relation among x1^k1 x2^k2 (k1 + k2 <= N) for commuting x1, x2.
DependenceWitness find_dependence(const QuotientElem& x1, const QuotientElem& x2);

/// The relation as a polynomial in a formal ring with two variables.
SkewPoly witness_polynomial(const DependenceWitness& w, const RingPtr& formal);

/// Oracle for normalize: the counting argument for pairs, bounded linear
/// search otherwise.
DependenceOracle<QuotientElem> quotient_dependence_oracle(long max_degree = 8);

struct QuotientWitness {
  QuotientElem u;
  AutoDesc twist;  // s1^k1
  bool z1_integral = false;  // z1^{k1+1} = u z1
  bool z2_integral = false;  // z2^{k2+1} = c^{-1} u z2
  std::vector<long> z1_degrees;  // top z1-exponent of u^j, j = 1..8
};

/// u = z1^k1 + c z2^k2 when s1^k1 o s2^{-k2} = in_c.
QuotientWitness quotient_witness(const RingPtr& ring, long k1, long k2, const DElem& c);

struct QuotientDecision {
  bool found = false;
  long k1 = 0, k2 = 0;
  std::optional<DElem> c;
  long bound = 0;
  bool proven_not_normalizable = false;  // exact for shift pairs over Q(x)
};

QuotientDecision decide_quotient_normalizable(const AutoDesc& s1, const AutoDesc& s2, long bound);

}  // namespace skewnorm
