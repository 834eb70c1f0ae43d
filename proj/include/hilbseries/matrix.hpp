#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbseries/field.hpp"

namespace hilbseries {

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  using Element = typename F::Element;

  explicit Matrix(F field, std::size_t rows = 0, std::size_t cols = 0)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  /// Builds a matrix from integer (or rational) rows, reducing into the field.
  static Matrix from_rows(F field, const std::vector<std::vector<Rational>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.from_rational(rows[r][c]);
    }
    return m;
  }

  const F& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Element> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  void append_row(const std::vector<Element>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

template <ExactField F>
struct RrefResult {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape
/// of the input is preserved.
template <ExactField F>
RrefResult<F> rref(Matrix<F> m) {
  const F& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < m.rows() && k.is_zero(m(r, c))) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, lead_row);
    auto scale = k.inv(m(lead_row, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) = k.mul(m(lead_row, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead_row || k.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = k.sub(m(i, j), k.mul(factor, m(lead_row, j)));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

template <ExactField F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

template <ExactField F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not match");
  const F& k = a.field();
  Matrix<F> out(k, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (k.is_zero(a(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = k.add(out(i, j), k.mul(a(i, l), b(l, j)));
    }
  return out;
}

/// Keeps only the nonzero rows of an echelon matrix.
template <ExactField F>
Matrix<F> nonzero_rows(const RrefResult<F>& r) {
  Matrix<F> out(r.reduced.field(), 0, r.reduced.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.append_row(r.reduced.row(i));
  return out;
}

/// Basis of the right null space {v : m v^T = 0}, returned in RREF.
template <ExactField F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  const F& k = m.field();
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<F> basis(k, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::Element> v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(reduced(i, free));
    basis.append_row(v);
  }
  if (basis.rows() == 0) return basis;
  return nonzero_rows(rref(basis));
}

}  // namespace hilbseries
