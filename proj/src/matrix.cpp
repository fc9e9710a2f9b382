#include "arr4/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace arr4 {

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
  Scalar sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    sum += x[i] * y[i];
  }
  return sum;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::operator*(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix*Vector: dimension mismatch");
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
  return y;
}

Echelon reduced_echelon(const Matrix& input) {
  Matrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead, k));
    }
    Scalar inv = m(lead, c).inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!m(lead, k).is_zero()) m(lead, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      Scalar factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!m(lead, k).is_zero()) m(r, k) -= factor * m(lead, k);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  Matrix reduced(pivots.size(), cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = std::move(m(r, c));
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return reduced_echelon(m).pivot_cols.size(); }

std::size_t rank(std::span<const Vector> rows, std::size_t cols) {
  return rank(Matrix::from_rows(rows, cols));
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Echelon e = reduced_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      if (!e.reduced(r, f).is_zero()) v[e.pivot_cols[r]] = -e.reduced(r, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> kernel_basis(std::span<const Vector> rows, std::size_t cols) {
  return kernel_basis(Matrix::from_rows(rows, cols));
}

std::vector<std::size_t> free_columns(std::span<const Vector> rows, std::size_t cols) {
  Echelon e = reduced_echelon(Matrix::from_rows(rows, cols));
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) out.push_back(c);
  }
  return out;
}

}  // namespace arr4
