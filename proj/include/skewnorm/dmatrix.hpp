#pragma once

#include <optional>
#include <vector>

#include "skewnorm/delem.hpp"

namespace skewnorm {

/// Row-major matrix over one division algebra. Vectors act on the left:
/// x * A = sum_i x_i * row_i.
class DMatrix {
 public:
  DMatrix(AlgebraTag tag, size_t rows, size_t cols);
  DMatrix(AlgebraTag tag, size_t cols, std::vector<std::vector<DElem>> rows);

  AlgebraTag tag() const { return tag_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const DElem& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  DElem& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  std::vector<DElem> row(size_t r) const;

  static DMatrix identity(AlgebraTag tag, size_t n);

 private:
  AlgebraTag tag_;
  size_t rows_, cols_;
  std::vector<DElem> data_;
};

/// Row echelon form reached by left row operations, together with the
/// invertible transform T such that T * A = E.
struct LeftEchelon {
  DMatrix echelon;
  DMatrix transform;
  std::vector<size_t> pivot_cols;  // one per nonzero row, rows 0..rank-1
  size_t rank() const { return pivot_cols.size(); }
};

LeftEchelon left_echelon(const DMatrix& a);

/// Basis of { v : v * A = 0 }.
std::vector<std::vector<DElem>> left_nullspace(const DMatrix& a);

/// Row-by-row elimination that reports the first row dependent on the earlier
/// ones, as left coefficients over all rows added so far.
class LeftDependenceTracker {
 public:
  LeftDependenceTracker(AlgebraTag tag, size_t cols) : tag_(tag), cols_(cols) {}
  std::optional<std::vector<DElem>> add_row(std::vector<DElem> row);
  size_t rows() const { return added_; }
  size_t rank() const { return basis_.size(); }

 private:
  struct Reduced {
    std::vector<DElem> row, combo;
    size_t pivot;
  };
  AlgebraTag tag_;
  size_t cols_;
  size_t added_ = 0;
  std::vector<Reduced> basis_;
};

/// The left null vector supported on the shortest prefix of rows that is
/// dependent, with coefficient 1 on the last row of that prefix; nullopt when
/// the rows are independent.
std::optional<std::vector<DElem>> first_left_dependence(const DMatrix& a);

/// Some x with x * A = b (b has A.cols() entries), or nullopt.
std::optional<std::vector<DElem>> left_solve(const DMatrix& a, const std::vector<DElem>& b);

/// v * A computed directly.
std::vector<DElem> left_apply(const std::vector<DElem>& v, const DMatrix& a);

}  // namespace skewnorm
