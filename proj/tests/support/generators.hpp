#pragma once

// Random inputs and independent reference computations shared by the tests.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "skewnorm/delem.hpp"
#include "skewnorm/autodesc.hpp"
#include "skewnorm/skewpoly.hpp"

namespace testsupport {

using namespace skewnorm;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<size_t>(integer(0, static_cast<long>(v.size()) - 1))]; }

  Rat rat(long span = 5, long max_den = 3) {
    Rat r(integer(-span, span), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  Rat nonzero_rat(long span = 5, long max_den = 3) {
    Rat r;
    do r = rat(span, max_den);
    while (r == 0);
    return r;
  }

  Quat quat(long span = 4) { return {rat(span), rat(span), rat(span), rat(span)}; }
  Quat nonzero_quat(long span = 4) {
    Quat q;
    do q = quat(span);
    while (q.is_zero());
    return q;
  }

  QPoly qpoly(long max_deg, long span = 4) {
    std::vector<Rat> c;
    const long deg = integer(0, max_deg);
    for (long k = 0; k <= deg; ++k) c.push_back(rat(span, 2));
    return QPoly(c);
  }

  RatFun ratfun(long max_deg = 2) {
    QPoly den = coin(0.6) ? QPoly::constant(1) : qpoly(1);
    while (den.is_zero()) den = qpoly(1);
    return RatFun(qpoly(max_deg), den);
  }
  RatFun nonzero_ratfun(long max_deg = 2) {
    RatFun r;
    do r = ratfun(max_deg);
    while (r.is_zero());
    return r;
  }

  DElem delem(AlgebraTag tag) { return tag == AlgebraTag::HQ ? DElem(quat()) : DElem(ratfun()); }
  DElem nonzero_delem(AlgebraTag tag) {
    return tag == AlgebraTag::HQ ? DElem(nonzero_quat()) : DElem(nonzero_ratfun());
  }

  Mobius mobius() {
    if (coin(0.5)) return Mobius::shift(nonzero_rat(3, 2));
    while (true) {
      Rat a = rat(3), b = rat(3), c = rat(2), d = rat(3);
      if (a * d - b * c != 0) return Mobius::make(a, b, c, d);
    }
  }

  AutoDesc automorphism(AlgebraTag tag) {
    if (coin(0.2)) return AutoDesc::identity();
    if (tag == AlgebraTag::HQ) return AutoDesc::inner(DElem(nonzero_quat(2)));
    return AutoDesc::gen_image(mobius().image_of_x());
  }

  /// Commuting automorphisms: powers of a single random one, or identities.
  std::vector<AutoDesc> commuting_autos(AlgebraTag tag, size_t n) {
    const AutoDesc base = automorphism(tag);
    std::vector<AutoDesc> out;
    for (size_t i = 0; i < n; ++i) out.push_back(auto_pow(base, integer(-1, 2)));
    return out;
  }

  SkewPoly skewpoly(const RingPtr& ring, long max_terms, long max_deg) {
    SkewPoly f(ring);
    const long count = integer(0, max_terms);
    for (long t = 0; t < count; ++t) {
      ExpVec e(ring->n(), 0);
      long budget = integer(0, max_deg);
      for (size_t i = 0; i < e.size() && budget > 0; ++i) {
        const long take = integer(0, budget);
        e[i] = take;
        budget -= take;
      }
      std::shuffle(e.begin(), e.end(), rng_);
      f.add_term(e, delem(ring->algebra()));
    }
    return f;
  }

  SkewPoly nonzero_skewpoly(const RingPtr& ring, long max_terms, long max_deg) {
    SkewPoly f(ring);
    while (f.is_zero()) f = skewpoly(ring, max_terms, max_deg);
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Quaternion product from the basis multiplication table alone.
inline Quat table_product(const Quat& x, const Quat& y) {
  // basis[r][s] = (sign, index) of e_r * e_s with e = (1, i, j, k)
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  Rat out[4] = {0, 0, 0, 0};
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) out[index[r][s]] += sign[r][s] * x.component(r) * y.component(s);
  return {out[0], out[1], out[2], out[3]};
}

/// Rank over Q of a dense rational matrix by fraction-based elimination.
inline size_t rational_rank(std::vector<std::vector<Rat>> m) {
  size_t rank = 0;
  const size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t c = 0; c < cols && rank < m.size(); ++c) {
    size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rat f = m[r][c] / m[rank][c];
      for (size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Left rank over H of a quaternion matrix through its real representation:
/// row block i, column block j holds the matrix of x -> x * a_ij.
inline size_t quaternion_left_rank(const std::vector<std::vector<Quat>>& a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  std::vector<std::vector<Rat>> big(4 * rows, std::vector<Rat>(4 * cols, Rat(0)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      for (int s = 0; s < 4; ++s) {
        const Quat img = table_product(Quat::unit(s), a[i][j]);
        for (int t = 0; t < 4; ++t) big[4 * i + s][4 * j + t] = img.component(t);
      }
  return rational_rank(big) / 4;
}

/// Determinant over the commutative field Q(x) by cofactor expansion.
inline RatFun ratfun_det(const std::vector<std::vector<RatFun>>& m) {
  const size_t n = m.size();
  if (n == 0) return RatFun(Rat(1));
  if (n == 1) return m[0][0];
  RatFun acc;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<RatFun>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<RatFun> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    RatFun term = m[0][c] * ratfun_det(minor);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Rank over Q(x) as the size of the largest nonvanishing minor.
inline size_t ratfun_minor_rank(const std::vector<std::vector<RatFun>>& a) {
  const size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  for (size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<size_t> rsel(k), csel(k);
    // enumerate k-subsets of rows and columns via bitmasks
    for (unsigned rm = 0; rm < (1u << rows); ++rm) {
      if (static_cast<size_t>(__builtin_popcount(rm)) != k) continue;
      for (unsigned cm = 0; cm < (1u << cols); ++cm) {
        if (static_cast<size_t>(__builtin_popcount(cm)) != k) continue;
        std::vector<std::vector<RatFun>> sub;
        for (size_t r = 0; r < rows; ++r) {
          if (!(rm >> r & 1u)) continue;
          std::vector<RatFun> row;
          for (size_t c = 0; c < cols; ++c)
            if (cm >> c & 1u) row.push_back(a[r][c]);
          sub.push_back(row);
        }
        if (!ratfun_det(sub).is_zero()) return k;
      }
    }
  }
  return 0;
}

/// Value of a rational function at a rational point (den must not vanish).
inline Rat eval_at(const RatFun& r, const Rat& x) { return r.num().eval(x) / r.den().eval(x); }

/// Value of a Mobius map at a rational point.
inline Rat mobius_at(const Mobius& m, const Rat& x) { return (m.a * x + m.b) / (m.c * x + m.d); }

}  // namespace testsupport
