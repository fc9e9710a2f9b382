#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arr4/scalar.hpp"

namespace arr4 {

using Vector = std::vector<Scalar>;

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y);

/// Dense row-major matrix over Q(tau). A 0 x c matrix keeps its column count.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// All rows must have `cols` entries.
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }

  Matrix transpose() const;
  Vector operator*(std::span<const Scalar> x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry of
/// each column below the current row, so the result is deterministic.
struct Echelon {
  Matrix reduced;                       // only the nonzero rows are kept
  std::vector<std::size_t> pivot_cols;  // one per kept row, increasing
};

Echelon reduced_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
std::size_t rank(std::span<const Vector> rows, std::size_t cols);

/**
 * Basis of the right kernel {x : M x = 0}, read off the reduced echelon form:
 * one vector per free column f, with x_f = 1, the other free coordinates 0
 * and the pivot coordinates solved for. The basis is therefore canonical for
 * the row space of M, and a kernel vector's coordinates in it are simply its
 * entries at the free columns.
 */
std::vector<Vector> kernel_basis(const Matrix& m);
std::vector<Vector> kernel_basis(std::span<const Vector> rows, std::size_t cols);

/// Free (non-pivot) columns of the echelon form of the given rows.
std::vector<std::size_t> free_columns(std::span<const Vector> rows, std::size_t cols);

}  // namespace arr4
