#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewnorm/skewpoly.hpp"

namespace skewnorm {

/// Element of D[t, t^{-1}; sigma], stored as sum c_k t^k with left
/// coefficients; t^k a = sigma^k(a) t^k for every integer k.
class LaurentPoly {
 public:
  LaurentPoly(AlgebraTag algebra, AutoDesc sigma);
  static LaurentPoly monomial(AlgebraTag algebra, const AutoDesc& sigma, long k, const DElem& c);
  static LaurentPoly from_skewpoly(const SkewPoly& f);

  AlgebraTag algebra() const { return algebra_; }
  const AutoDesc& sigma() const { return sigma_; }
  const std::map<long, DElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_degree() const;
  long max_degree() const;
  DElem coeff(long k) const;

  void add_term(long k, const DElem& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend bool operator==(const LaurentPoly& f, const LaurentPoly& g);

  std::string str() const;

 private:
  AlgebraTag algebra_;
  AutoDesc sigma_;
  std::map<long, DElem> terms_;
};

LaurentPoly constant_like(const LaurentPoly& exemplar, const DElem& c);
std::vector<AutoDesc> term_twists(const LaurentPoly& f);
std::vector<std::pair<BasisKey, DElem>> coordinates(const LaurentPoly& f);
inline AlgebraTag algebra_of(const LaurentPoly& f) { return f.algebra(); }

struct LaurentClassification {
  enum class Kind { Monomial, MultiTerm, NotAutomorphic };
  Kind kind;
  std::optional<AutoDesc> twist;       // Monomial and MultiTerm
  std::optional<DElem> coefficient;    // Monomial
  long exponent = 0;                   // Monomial
  std::vector<std::pair<long, AutoDesc>> term_twists;
  std::optional<std::pair<long, long>> conflict;  // exponents of two disagreeing terms
};

std::string kind_name(LaurentClassification::Kind kind);

/// Term-wise separation: automorphic iff all terms twist alike.
LaurentClassification classify_automorphic(const LaurentPoly& a);

struct LaurentWitness {
  LaurentPoly u;
  AutoDesc u_twist;      // in_{c^{-1}}
  SkewPoly relation;     // over D[s_u, s_t; in_{c^{-1}}, sigma], monomials s_u^f s_t^e
  bool u_commutes_with_t = false;
  std::vector<long> low_degrees;  // lowest exponent of u^j, j = 1..8
};

/// u = t^{-k} + c^{-2} t^k together with c^{-2} t^{2k} - u t^k + 1 = 0, for
/// sigma^k = in_c.
LaurentWitness finite_inner_order_witness(const AutoDesc& sigma, long k, const DElem& c);

/// Evaluates a polynomial in (s_u, s_t) as sum coef * u^f * t^e.
LaurentPoly evaluate_ut(const SkewPoly& rel, const LaurentPoly& u, const LaurentPoly& t);

struct InversionCheck {
  bool consistent = false;
  LaurentPoly candidate;
  LaurentPoly product;  // candidate * t
};

/// From t^{-m} + sum f_i t^{-i} = 0 the only candidate for t^{-1} is
/// -(f_{m-1} + f_{m-2} t + ... + f_0 t^{m-1}); reports whether it inverts t.
InversionCheck invert_via_integral_relation(const std::vector<SkewPoly>& coeffs);

}  // namespace skewnorm
