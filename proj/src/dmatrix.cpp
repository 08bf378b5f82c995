#include "skewnorm/dmatrix.hpp"

#include "skewnorm/error.hpp"

namespace skewnorm {

DMatrix::DMatrix(AlgebraTag tag, size_t rows, size_t cols)
    : tag_(tag), rows_(rows), cols_(cols), data_(rows * cols, DElem::zero(tag)) {}

DMatrix::DMatrix(AlgebraTag tag, size_t cols, std::vector<std::vector<DElem>> rows)
    : tag_(tag), rows_(rows.size()), cols_(cols) {
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    if (r.size() != cols_) fail(ErrorCode::SchemaViolation, "ragged matrix rows");
    for (auto& e : r) {
      if (e.tag() != tag_) fail(ErrorCode::TagMismatch, "matrix entry from the wrong algebra");
      data_.push_back(std::move(e));
    }
  }
}

std::vector<DElem> DMatrix::row(size_t r) const {
  return {data_.begin() + static_cast<long>(r * cols_),
          data_.begin() + static_cast<long>((r + 1) * cols_)};
}

DMatrix DMatrix::identity(AlgebraTag tag, size_t n) {
  DMatrix m(tag, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = DElem::one(tag);
  return m;
}

namespace {

void swap_rows(DMatrix& m, size_t a, size_t b) {
  if (a == b) return;
  for (size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

// row_dst <- row_dst - f * row_src
void eliminate(DMatrix& m, size_t dst, size_t src, const DElem& f) {
  for (size_t c = 0; c < m.cols(); ++c)
    if (!m.at(src, c).is_zero()) m.at(dst, c) = m.at(dst, c) - f * m.at(src, c);
}

void scale_row(DMatrix& m, size_t r, const DElem& f) {
  for (size_t c = 0; c < m.cols(); ++c)
    if (!m.at(r, c).is_zero()) m.at(r, c) = f * m.at(r, c);
}

}  // namespace

LeftEchelon left_echelon(const DMatrix& a) {
  LeftEchelon out{a, DMatrix::identity(a.tag(), a.rows()), {}};
  DMatrix& e = out.echelon;
  DMatrix& t = out.transform;
  size_t row = 0;
  for (size_t col = 0; col < e.cols() && row < e.rows(); ++col) {
    size_t piv = row;
    while (piv < e.rows() && e.at(piv, col).is_zero()) ++piv;
    if (piv == e.rows()) continue;
    swap_rows(e, row, piv);
    swap_rows(t, row, piv);
    const DElem inv = e.at(row, col).inverse();
    scale_row(e, row, inv);
    scale_row(t, row, inv);
    for (size_t r = 0; r < e.rows(); ++r) {
      if (r == row || e.at(r, col).is_zero()) continue;
      const DElem f = e.at(r, col);
      eliminate(e, r, row, f);
      eliminate(t, r, row, f);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

std::vector<std::vector<DElem>> left_nullspace(const DMatrix& a) {
  LeftEchelon le = left_echelon(a);
  std::vector<std::vector<DElem>> basis;
  for (size_t r = le.rank(); r < a.rows(); ++r) basis.push_back(le.transform.row(r));
  return basis;
}

namespace {

// Rough size of an entry, used to prefer small pivots.
size_t entry_weight(const DElem& e) {
  if (e.tag() == AlgebraTag::HQ) {
    size_t w = 0;
    for (int i = 0; i < 4; ++i) {
      const Rat& c = e.quat().component(i);
      if (c != 0) w += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
    }
    return w;
  }
  const RatFun& r = e.ratfun();
  return 1000 * static_cast<size_t>(r.num().degree() + r.den().degree()) + r.num().coeffs().size() + r.den().coeffs().size();
}

}  // namespace

std::optional<std::vector<DElem>> LeftDependenceTracker::add_row(std::vector<DElem> v) {
  if (v.size() != cols_) fail(ErrorCode::SchemaViolation, "row length does not match the tracker");
  const size_t r = added_++;
  std::vector<DElem> combo(added_, DElem::zero(tag_));
  combo[r] = DElem::one(tag_);
  for (const auto& b : basis_) {
    const DElem f = v[b.pivot];
    if (f.is_zero()) continue;
    for (size_t c = 0; c < cols_; ++c)
      if (!b.row[c].is_zero()) v[c] = v[c] - f * b.row[c];
    for (size_t c = 0; c < b.combo.size(); ++c)
      if (!b.combo[c].is_zero()) combo[c] = combo[c] - f * b.combo[c];
  }
  size_t piv = cols_, best = 0;
  for (size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    const size_t w = entry_weight(v[c]);
    if (piv == cols_ || w < best) {
      piv = c;
      best = w;
    }
  }
  if (piv == cols_) return combo;
  const DElem inv = v[piv].inverse();
  for (auto& e : v)
    if (!e.is_zero()) e = inv * e;
  for (auto& e : combo)
    if (!e.is_zero()) e = inv * e;
  basis_.push_back({std::move(v), std::move(combo), piv});
  return std::nullopt;
}

std::optional<std::vector<DElem>> first_left_dependence(const DMatrix& a) {
  LeftDependenceTracker tr(a.tag(), a.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    auto combo = tr.add_row(a.row(r));
    if (!combo) continue;
    combo->resize(a.rows(), DElem::zero(a.tag()));
    return combo;
  }
  return std::nullopt;
}

std::vector<DElem> left_apply(const std::vector<DElem>& v, const DMatrix& a) {
  if (v.size() != a.rows()) fail(ErrorCode::SchemaViolation, "vector length does not match matrix rows");
  std::vector<DElem> out(a.cols(), DElem::zero(a.tag()));
  for (size_t r = 0; r < a.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (size_t c = 0; c < a.cols(); ++c)
      if (!a.at(r, c).is_zero()) out[c] = out[c] + v[r] * a.at(r, c);
  }
  return out;
}

std::optional<std::vector<DElem>> left_solve(const DMatrix& a, const std::vector<DElem>& b) {
  if (b.size() != a.cols()) fail(ErrorCode::SchemaViolation, "right-hand side length does not match matrix columns");
  for (const auto& e : b)
    if (e.tag() != a.tag()) fail(ErrorCode::TagMismatch, "right-hand side from the wrong algebra");
  LeftEchelon le = left_echelon(a);
  // Reduce b against the pivot rows: b = sum_r y_r * E_r + residue.
  std::vector<DElem> residue = b;
  std::vector<DElem> y(le.rank(), DElem::zero(a.tag()));
  for (size_t r = 0; r < le.rank(); ++r) {
    const DElem f = residue[le.pivot_cols[r]];
    if (f.is_zero()) continue;
    y[r] = f;
    for (size_t c = 0; c < a.cols(); ++c)
      if (!le.echelon.at(r, c).is_zero()) residue[c] = residue[c] - f * le.echelon.at(r, c);
  }
  for (const auto& e : residue)
    if (!e.is_zero()) return std::nullopt;
  // E_r = T_r * A, so x = y * T restricted to the first rank rows.
  std::vector<DElem> x(a.rows(), DElem::zero(a.tag()));
  for (size_t r = 0; r < le.rank(); ++r) {
    if (y[r].is_zero()) continue;
    for (size_t c = 0; c < a.rows(); ++c)
      if (!le.transform.at(r, c).is_zero()) x[c] = x[c] + y[r] * le.transform.at(r, c);
  }
  return x;
}

}  // namespace skewnorm
