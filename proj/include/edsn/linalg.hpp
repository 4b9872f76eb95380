#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "edsn/gf.hpp"

namespace edsn {

using Vector = std::vector<Element>;

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Throws Error{DimensionMismatch} on ragged input.
  static Matrix from_rows(Field field, const std::vector<Vector>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Element> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix transpose() const;
  Vector apply(std::span<const Element> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Reduced row echelon form; pivots are the first nonzero entry in each
/// column scanned left to right. pivot_cols receives the pivot columns.
Matrix row_reduce(Matrix m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}: one vector per free column f, with entry 1 at f,
/// zeros at the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Rank of m restricted to span(basis). Throws Error{DimensionMismatch}.
std::size_t restricted_rank(const Matrix& m, std::span<const Vector> basis);

}  // namespace edsn
