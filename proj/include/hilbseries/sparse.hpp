#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "hilbseries/field.hpp"
#include "hilbseries/matrix.hpp"

namespace hilbseries {

/// Sparse vector: (index, value) pairs with strictly increasing indices and
/// no stored zeros.
template <ExactField F>
using SparseVec = std::vector<std::pair<std::uint32_t, typename F::Element>>;

/// y += a * x
template <ExactField F>
void add_scaled(const F& k, SparseVec<F>& y, const typename F::Element& a, const SparseVec<F>& x) {
  if (k.is_zero(a) || x.empty()) return;
  SparseVec<F> out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, k.mul(a, x[j].second));
      ++j;
    } else {
      auto v = k.add(y[i].second, k.mul(a, x[j].second));
      if (!k.is_zero(v)) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

template <ExactField F>
SparseVec<F> unit_vector(const F& k, std::uint32_t index) {
  return {{index, k.one()}};
}

template <ExactField F>
Matrix<F> to_dense(const F& k, const std::vector<SparseVec<F>>& rows, std::size_t cols) {
  Matrix<F> m(k, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m(r, c) = v;
  return m;
}

/// Incrementally built echelon basis of a subspace of k^dim. The pivot of a
/// row is its first nonzero column and is normalized to 1; every inserted
/// row is reduced against all earlier pivots. `rref()` produces the unique
/// reduced row echelon form of the span.
///
/// Holds scratch storage, so a single instance must not be shared between
/// threads.
template <ExactField F>
class Echelon {
 public:
  using Element = typename F::Element;

  Echelon(F field, std::uint32_t dim)
      : field_(std::move(field)), dim_(dim), pivot_row_(dim, -1), scratch_(dim, field_.zero()) {}

  const F& field() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool is_pivot(std::uint32_t column) const { return pivot_row_[column] >= 0; }

  /// Subtracts multiples of the basis rows until no pivot column is left.
  SparseVec<F> reduce(const SparseVec<F>& v) const {
    const F& k = field_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    for (const auto& [i, x] : v) {
      scratch_[i] = x;
      heap.push(i);
    }
    SparseVec<F> result;
    bool first = true;
    std::uint32_t last = 0;
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      heap.pop();
      if (!first && c == last) continue;
      first = false;
      last = c;
      if (k.is_zero(scratch_[c])) continue;
      int r = pivot_row_[c];
      if (r < 0) {
        result.emplace_back(c, scratch_[c]);
        scratch_[c] = k.zero();
        continue;
      }
      Element coef = scratch_[c];
      scratch_[c] = k.zero();
      const auto& row = rows_[static_cast<std::size_t>(r)];
      for (std::size_t t = 1; t < row.size(); ++t) {
        auto j = row[t].first;
        scratch_[j] = k.sub(scratch_[j], k.mul(coef, row[t].second));
        heap.push(j);
      }
    }
    return result;
  }

  bool contains(const SparseVec<F>& v) const { return reduce(v).empty(); }

  /// Returns true when `v` enlarges the span.
  bool insert(const SparseVec<F>& v) {
    auto reduced = reduce(v);
    if (reduced.empty()) return false;
    auto scale = field_.inv(reduced.front().second);
    for (auto& [i, x] : reduced) x = field_.mul(x, scale);
    pivot_row_[reduced.front().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(reduced));
    return true;
  }

  /// Basis rows in insertion order (pivot first, not back-substituted).
  const std::vector<SparseVec<F>>& rows() const noexcept { return rows_; }

  /// Pivot columns in increasing order.
  std::vector<std::uint32_t> pivots() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < dim_; ++c)
      if (pivot_row_[c] >= 0) out.push_back(c);
    return out;
  }

  std::vector<std::uint32_t> non_pivots() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < dim_; ++c)
      if (pivot_row_[c] < 0) out.push_back(c);
    return out;
  }

  /// Rows of the reduced row echelon form, sorted by pivot.
  std::vector<SparseVec<F>> rref() const {
    std::vector<SparseVec<F>> out;
    out.reserve(rows_.size());
    for (std::uint32_t c = 0; c < dim_; ++c) {
      int r = pivot_row_[c];
      if (r < 0) continue;
      const auto& row = rows_[static_cast<std::size_t>(r)];
      SparseVec<F> tail(row.begin() + 1, row.end());
      SparseVec<F> full{{c, field_.one()}};
      auto reduced_tail = reduce(tail);
      full.insert(full.end(), reduced_tail.begin(), reduced_tail.end());
      out.push_back(std::move(full));
    }
    return out;
  }

 private:
  F field_;
  std::uint32_t dim_;
  std::vector<int> pivot_row_;
  std::vector<SparseVec<F>> rows_;
  mutable std::vector<Element> scratch_;
};

/// Coordinates of `v` with respect to RREF rows, read off at the pivot
/// columns. Valid only when `v` lies in their span.
template <ExactField F>
SparseVec<F> rref_coordinates(const SparseVec<F>& v, const std::vector<int>& row_of_pivot) {
  SparseVec<F> out;
  for (const auto& [c, x] : v) {
    int r = row_of_pivot[c];
    if (r >= 0) out.emplace_back(static_cast<std::uint32_t>(r), x);
  }
  return out;
}

/// Kernel of the linear map sending basis vector j of the source to
/// images[j] in k^target_dim. Returns RREF rows in source coordinates.
template <ExactField F>
std::vector<SparseVec<F>> sparse_kernel(const F& k, const std::vector<SparseVec<F>>& images,
                                        std::uint32_t target_dim) {
  auto source_dim = static_cast<std::uint32_t>(images.size());
  Echelon<F> augmented(k, target_dim + source_dim);
  for (std::uint32_t j = 0; j < source_dim; ++j) {
    SparseVec<F> v = images[j];
    v.emplace_back(target_dim + j, k.one());
    augmented.insert(v);
  }
  Echelon<F> kernel(k, source_dim);
  // Rows whose pivot lies in the source block have a vanishing image part.
  for (const auto& row : augmented.rows()) {
    if (row.front().first < target_dim) continue;
    SparseVec<F> shifted;
    shifted.reserve(row.size());
    for (const auto& [c, x] : row) shifted.emplace_back(c - target_dim, x);
    kernel.insert(shifted);
  }
  return kernel.rref();
}

}  // namespace hilbseries
