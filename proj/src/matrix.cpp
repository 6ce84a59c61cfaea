#include "fracrank/matrix.hpp"

#include <stdexcept>

namespace fracrank {

QMat QMat::identity(size_t n) {
  QMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMat(0, 0);
  QMat m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QVec QMat::row(size_t r) const {
  QVec v(cols_);
  for (size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

QVec QMat::col(size_t c) const {
  QVec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in mul");
  QMat m(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) m.at(i, j) += aik * o.at(k, j);
    }
  return m;
}

QVec QMat::apply(const QVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("shape mismatch in apply");
  QVec out(rows_, Rat(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

QMat QMat::submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
  QMat m(rs.size(), cs.size());
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j) m.at(i, j) = at(rs[i], cs[j]);
  return m;
}

std::pair<QMat, std::vector<size_t>> QMat::rref() const {
  QMat m = *this;
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
    size_t p = r;
    while (p < m.rows_ && m.at(p, c) == 0) ++p;
    if (p == m.rows_) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (size_t j = c; j < m.cols_; ++j) m.at(r, j) *= inv;
    for (size_t i = 0; i < m.rows_; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (size_t j = c; j < m.cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {m, pivots};
}

size_t QMat::rank() const { return rref().second.size(); }

std::vector<QVec> QMat::nullspace() const {
  auto [m, pivots] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    QVec v(cols_, Rat(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QMat> QMat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  QMat aug(rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto [m, pivots] = aug.rref();
  if (pivots.size() != rows_) return std::nullopt;
  for (size_t i = 0; i < rows_; ++i)
    if (pivots[i] != i) return std::nullopt;
  QMat inv(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = m.at(i, cols_ + j);
  return inv;
}

std::optional<QVec> QMat::solve(const QVec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("shape mismatch in solve");
  QMat aug(rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto [m, pivots] = aug.rref();
  // Inconsistent if the augmented column is a pivot.
  for (size_t c : pivots)
    if (c == cols_) return std::nullopt;
  if (pivots.size() != cols_) return std::nullopt;  // underdetermined
  QVec x(cols_, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m.at(i, cols_);
  return x;
}

bool same_row_span(const QMat& a, const QMat& b) {
  if (a.cols() != b.cols()) return false;
  size_t ra = a.rank(), rb = b.rank();
  if (ra != rb) return false;
  QMat stacked(a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) stacked.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) stacked.at(a.rows() + i, j) = b.at(i, j);
  return stacked.rank() == ra;
}

}  // namespace fracrank
