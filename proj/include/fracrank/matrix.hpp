#pragma once

#include "fracrank/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fracrank {

// Dense exact-rational matrix. Row-major.
class QMat {
 public:
  QMat() = default;
  QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static QMat identity(size_t n);
  static QMat from_rows(const std::vector<QVec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Rat& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  QVec row(size_t r) const;
  QVec col(size_t c) const;

  QMat transpose() const;
  QMat operator*(const QMat& o) const;
  QVec apply(const QVec& v) const;

  QMat submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const;

  size_t rank() const;
  // Reduced row echelon form (in place copy); returns pivot columns.
  std::pair<QMat, std::vector<size_t>> rref() const;
  // Basis of the right nullspace, one column vector per basis element.
  std::vector<QVec> nullspace() const;
  std::optional<QMat> inverse() const;
  // Solve A x = b uniquely; nullopt if no solution or not unique.
  std::optional<QVec> solve(const QVec& b) const;

  bool operator==(const QMat& o) const = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// True iff the row spans of a and b coincide (exact).
bool same_row_span(const QMat& a, const QMat& b);

}  // namespace fracrank
