#include "edsn/linalg.hpp"

#include <utility>

#include "edsn/error.hpp"

namespace edsn {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Vector Matrix::apply(std::span<const Element> v) const {
  if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "vector length != cols");
  Vector out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    Element acc = field_.zero();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_zero(at(i, j)) || field_.is_zero(v[j])) continue;
      acc = field_.add(acc, field_.mul(at(i, j), v[j]));
    }
    out[i] = std::move(acc);
  }
  return out;
}

Matrix row_reduce(Matrix m, std::vector<std::size_t>* pivot_cols) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && f.is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    }
    const Element scale = f.inv(m.at(lead, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(lead, j) = f.mul(m.at(lead, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || f.is_zero(m.at(i, col))) continue;
      const Element factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (f.is_zero(m.at(lead, j))) continue;
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(lead, j)));
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  if (pivot_cols) *pivot_cols = std::move(pivots);
  return m;
}

std::size_t rank(const Matrix& m) {
  // Eliminate along the shorter side; rank is transpose-invariant.
  std::vector<std::size_t> pivots;
  if (m.rows() > m.cols()) {
    row_reduce(m.transpose(), &pivots);
  } else {
    row_reduce(m, &pivots);
  }
  return pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  const Matrix rref = row_reduce(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rref.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t restricted_rank(const Matrix& m, std::span<const Vector> basis) {
  Matrix images(m.field(), basis.size(), m.rows());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (basis[b].size() != m.cols()) {
      throw Error(Errc::DimensionMismatch, "basis vector length != cols");
    }
    Vector image = m.apply(basis[b]);
    for (std::size_t i = 0; i < m.rows(); ++i) images.at(b, i) = std::move(image[i]);
  }
  return rank(images);
}

}  // namespace edsn
