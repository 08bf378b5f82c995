#include "skewnorm/normalize.hpp"

#include <algorithm>
#include <set>

namespace skewnorm {

Rat spiral(size_t index) {
  if (index == 0) return Rat(0);
  const long k = static_cast<long>((index + 1) / 2);
  return Rat(index % 2 == 1 ? k : -k);
}

ExpVec nullstellensatz_target(const SkewPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no target monomial");
  return f.terms().rbegin()->first;
}

namespace {

std::vector<DElem> lift(AlgebraTag tag, const std::vector<Rat>& point) {
  std::vector<DElem> out;
  for (const auto& r : point) out.push_back(DElem::rational(tag, r));
  return out;
}

bool nonzero_at(const SkewPoly& f, const std::vector<Rat>& point) {
  return !evaluate_central(f, lift(f.algebra(), point)).is_zero();
}

// Advances an odometer with the last coordinate fastest; false on wrap-around.
bool advance(std::vector<size_t>& idx, const std::vector<size_t>& sizes) {
  for (size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < sizes[i]) return true;
    idx[i] = 0;
  }
  return false;
}

constexpr size_t kMaxShell = 4096;

}  // namespace

std::vector<Rat> find_nonvanishing(const SkewPoly& f, const PointSearchSpec& spec) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot find a nonvanishing point of zero");
  const size_t n = f.nvars();
  if (n == 0) return {};
  if (!spec.incremental()) {
    if (spec.grids.size() != n)
      fail(ErrorCode::SchemaViolation, "need " + std::to_string(n) + " grids, got " + std::to_string(spec.grids.size()));
    const ExpVec target = nullstellensatz_target(f);
    std::vector<std::vector<Rat>> grids;
    for (size_t i = 0; i < n; ++i) {
      std::vector<Rat> uniq;
      std::set<Rat> seen;
      for (const auto& a : spec.grids[i])
        if (seen.insert(a).second) uniq.push_back(a);
      if (static_cast<long>(uniq.size()) <= target[i])
        fail(ErrorCode::GridTooSmall, "grid " + std::to_string(i + 1) + " has " + std::to_string(uniq.size()) +
                                          " points but the target exponent is " + std::to_string(target[i]));
      grids.push_back(std::move(uniq));
    }
    std::vector<size_t> sizes, idx(n, 0);
    for (const auto& g : grids) sizes.push_back(g.size());
    do {
      std::vector<Rat> pt;
      for (size_t i = 0; i < n; ++i) pt.push_back(grids[i][idx[i]]);
      if (nonzero_at(f, pt)) return pt;
    } while (advance(idx, sizes));
    fail(ErrorCode::InternalCheckFailed, "grid exhausted although it satisfies the size bound");
  }
  for (size_t shell = 0; shell <= kMaxShell; ++shell) {
    std::vector<size_t> sizes(n, shell + 1), idx(n, 0);
    do {
      if (*std::max_element(idx.begin(), idx.end()) != shell) continue;
      std::vector<Rat> pt;
      for (size_t i : idx) pt.push_back(spiral(i));
      if (nonzero_at(f, pt)) return pt;
    } while (advance(idx, sizes));
  }
  fail(ErrorCode::InternalCheckFailed, "incremental search gave up");
}

std::vector<Rat> find_projective_point(const SkewPoly& f, const PointSearchSpec& spec) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot find a nonvanishing point of zero");
  if (!is_homogeneous(f)) fail(ErrorCode::NotHomogeneous, "projective search needs a homogeneous polynomial");
  if (f.nvars() == 0) return {};
  std::vector<Rat> pt = find_nonvanishing(dehomogenize_last(f), spec);
  pt.push_back(Rat(1));
  return pt;
}

namespace {

void check_monic(const MonicizationResult& r) {
  const size_t n = r.g.nvars();
  if (!is_monic_in_last(r.g) || (n > 0 && degree_in(r.g, n - 1) != r.m))
    fail(ErrorCode::InternalCheckFailed, "monicization did not produce a monic polynomial: " + r.g.str());
}

MonicizationResult constant_case(const SkewPoly& f, MonicMethod method) {
  const DElem c = f.coeff(ExpVec(f.nvars(), 0));
  MonicizationResult r{method, c.inverse(), {}, {}, 1, scale_left(c.inverse(), f), 0};
  return r;
}

}  // namespace

MonicizationResult monicize_linear(const SkewPoly& f, const PointSearchSpec& search) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot monicize zero");
  const size_t n = f.nvars();
  if (n == 0) return constant_case(f, MonicMethod::Linear);
  const SkewPoly fm = leading_form(f);
  std::vector<Rat> pt = find_projective_point(fm, search);
  const DElem value = evaluate_central(fm, lift(f.algebra(), pt));
  pt.pop_back();
  MonicizationResult r{MonicMethod::Linear, value.inverse(), pt, {}, 0, SkewPoly(f.ring()), total_degree(f)};
  r.g = scale_left(r.scale, linear_shift(f, lift(f.algebra(), pt)));
  check_monic(r);
  return r;
}

MonicizationResult monicize_dadic(const SkewPoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot monicize zero");
  if (!f.ring()->is_central()) fail(ErrorCode::NonCentralRing, "d-adic monicization needs identity automorphisms");
  const size_t n = f.nvars();
  if (n == 0) return constant_case(f, MonicMethod::DAdic);
  const long d = 1 + total_degree(f);
  const std::vector<long> powers = dadic_exponents(n, d);
  // I0 maximizes the base-d number with digits i_1 .. i_n.
  const ExpVec* best = nullptr;
  long best_val = -1;
  for (const auto& [e, c] : f.terms()) {
    long v = 0;
    for (size_t j = 0; j < n; ++j) v = v * d + e[j];
    if (v > best_val) {
      best_val = v;
      best = &e;
    }
  }
  const DElem scale = f.coeff(*best).inverse();
  MonicizationResult r{MonicMethod::DAdic, scale, {}, powers, d,
                       scale_left(scale, power_shift_exponents(f, powers)), best_val};
  check_monic(r);
  return r;
}

SkewPoly apply_transform(const MonicizationResult& mr, const SkewPoly& p) {
  if (mr.method == MonicMethod::Linear) return linear_shift(p, lift(p.algebra(), mr.shift));
  return power_shift_exponents(p, mr.powers);
}

std::string mode_name(NormalizeMode mode) {
  return mode == NormalizeMode::Central ? "central" : "constant";
}

NormalizeMode parse_mode(const std::string& name) {
  if (name == "central") return NormalizeMode::Central;
  if (name == "constant" || name == "constant-tuple") return NormalizeMode::ConstantTuple;
  fail(ErrorCode::SchemaViolation, "unknown normalization mode '" + name + "'");
}

namespace detail {

std::vector<ExpVec> exponents_up_to(size_t n, long bound) {
  std::vector<ExpVec> out;
  ExpVec cur(n, 0);
  std::function<void(size_t, long)> rec = [&](size_t i, long left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (long k = 0; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
    cur[i] = 0;
  };
  rec(0, bound);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

}  // namespace detail

Rat shift_amount(const AutoDesc& sigma) {
  const AutoCanon& c = sigma.canon();
  if (c.kind == AutoCanon::Kind::Identity) {
    auto alg = sigma.algebra();
    if (alg && *alg == AlgebraTag::HQ) fail(ErrorCode::UnsupportedAutoShape, "HQ automorphisms are not shifts");
    return Rat(0);
  }
  if (c.kind == AutoCanon::Kind::Mobius && c.map.is_shift()) return c.map.b;
  fail(ErrorCode::UnsupportedAutoShape, describe(sigma) + " is not a shift x -> x + c");
}

ShiftTupleDecision decide_tuple_normalizable_field_shifts(const std::vector<AutoDesc>& autos) {
  ShiftTupleDecision out;
  for (const auto& a : autos) out.shifts.push_back(shift_amount(a));
  const bool all_zero = std::all_of(out.shifts.begin(), out.shifts.end(), [](const Rat& c) { return c == 0; });
  if (all_zero) {
    out.normalizable = true;
    out.exponents.assign(autos.size(), BigInt(1));
    return out;
  }
  const bool all_pos = std::all_of(out.shifts.begin(), out.shifts.end(), [](const Rat& c) { return c > 0; });
  const bool all_neg = std::all_of(out.shifts.begin(), out.shifts.end(), [](const Rat& c) { return c < 0; });
  if (!all_pos && !all_neg) return out;
  BigInt lcm_num = 1, gcd_den = 0;
  for (const auto& c : out.shifts) {
    BigInt p = abs(c.get_num());
    mpz_lcm(lcm_num.get_mpz_t(), lcm_num.get_mpz_t(), p.get_mpz_t());
    mpz_gcd(gcd_den.get_mpz_t(), gcd_den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat L(lcm_num, gcd_den);
  L.canonicalize();
  out.normalizable = true;
  for (const auto& c : out.shifts) {
    Rat q = L / abs(c);
    if (q.get_den() != 1) fail(ErrorCode::InternalCheckFailed, "non-integral witness exponent");
    out.exponents.push_back(q.get_num());
  }
  return out;
}

}  // namespace skewnorm
