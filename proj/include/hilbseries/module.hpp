#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hilbseries/algebra.hpp"

namespace hilbseries {

/// Free right module sum_j e_j A with e_j in degree gen_degrees[j]. The
/// basis of F_d lists generator blocks in order, each block being the
/// normal-word basis of A_{d - deg e_j}.
template <ExactField F>
class FreeModule {
 public:
  FreeModule(AlgebraPtr<F> algebra, std::vector<int> gen_degrees, int truncation)
      : algebra_(std::move(algebra)), degrees_(std::move(gen_degrees)), truncation_(truncation) {
    if (truncation_ > algebra_->truncation()) throw TruncationError("free module truncated beyond its algebra");
    offsets_.assign(static_cast<std::size_t>(truncation_) + 1, {});
    for (int d = 0; d <= truncation_; ++d) {
      auto& off = offsets_[static_cast<std::size_t>(d)];
      std::uint32_t total = 0;
      for (int g : degrees_) {
        off.push_back(total);
        total += static_cast<std::uint32_t>(algebra_->dim(d - g));
      }
      off.push_back(total);
    }
  }

  const AlgebraPtr<F>& algebra() const noexcept { return algebra_; }
  const std::vector<int>& gen_degrees() const noexcept { return degrees_; }
  std::size_t rank() const noexcept { return degrees_.size(); }
  int truncation() const noexcept { return truncation_; }

  std::uint32_t dim(int d) const {
    if (d < 0 || d > truncation_) return 0;
    return offsets_[static_cast<std::size_t>(d)].back();
  }
  std::uint32_t offset(int d, std::size_t gen) const { return offsets_[static_cast<std::size_t>(d)][gen]; }

  /// (generator, index of the word in A_{d - deg e_j}) for a column of F_d.
  std::pair<std::size_t, std::uint32_t> locate(int d, std::uint32_t column) const {
    const auto& off = offsets_[static_cast<std::size_t>(d)];
    auto it = std::upper_bound(off.begin(), off.end(), column);
    auto gen = static_cast<std::size_t>(it - off.begin()) - 1;
    return {gen, column - off[gen]};
  }

  ModuleWord module_word(int d, std::uint32_t column) const {
    auto [gen, i] = locate(d, column);
    return {gen, algebra_->basis(d - degrees_[gen])[i]};
  }

  SparseVec<F> multiply(int d, const SparseVec<F>& v, Letter x) const {
    const auto& k = algebra_->field();
    int e = d + algebra_->gens().degree(x);
    SparseVec<F> out;
    for (const auto& [c, coef] : v) {
      auto [gen, i] = locate(d, c);
      auto shift = offset(e, gen);
      SparseVec<F> image;
      for (const auto& [j, a] : algebra_->multiply(d - degrees_[gen], i, x)) image.emplace_back(shift + j, a);
      add_scaled(k, out, coef, image);
    }
    return out;
  }

 private:
  AlgebraPtr<F> algebra_;
  std::vector<int> degrees_;
  int truncation_;
  std::vector<std::vector<std::uint32_t>> offsets_;
};

/// A graded right module known exactly in degrees 0..truncation through
/// the dimensions of its components and the action of each algebra
/// generator on coordinate vectors.
template <ExactField F>
class GradedModule {
 public:
  using Action = std::vector<std::vector<std::vector<SparseVec<F>>>>;

  GradedModule(AlgebraPtr<F> algebra, int truncation, std::vector<std::size_t> dims, Action action)
      : algebra_(std::move(algebra)), truncation_(truncation), dims_(std::move(dims)), action_(std::move(action)) {}

  const AlgebraPtr<F>& algebra() const noexcept { return algebra_; }
  const F& field() const { return algebra_->field(); }
  int truncation() const noexcept { return truncation_; }

  std::size_t dim(int d) const {
    if (d < 0 || d > truncation_) return 0;
    return dims_[static_cast<std::size_t>(d)];
  }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  bool is_zero() const {
    return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
  }

  /// Image of basis vector i of degree d under generator x.
  const SparseVec<F>& act(int d, std::uint32_t i, Letter x) const {
    return action_[static_cast<std::size_t>(d)][x][i];
  }

  SparseVec<F> act(int d, const SparseVec<F>& v, Letter x) const {
    SparseVec<F> out;
    for (const auto& [i, c] : v) add_scaled(field(), out, c, act(d, i, x));
    return out;
  }

  /// The tail M_{>= n} regraded to start in degree 0.
  GradedModule shifted(int n) const {
    int top = truncation_ - n;
    if (top < 0) throw TruncationError("shift beyond the module truncation");
    std::vector<std::size_t> dims(dims_.begin() + n, dims_.end());
    Action action(action_.begin() + n, action_.end());
    const auto& gens = algebra_->gens();
    for (int t = 0; t <= top; ++t)
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (t + gens.degree(g) > top) action[static_cast<std::size_t>(t)][g].clear();
    return GradedModule(algebra_, top, std::move(dims), std::move(action));
  }

  /// The same module known only up to a lower degree.
  GradedModule truncated(int top) const {
    if (top >= truncation_) return *this;
    std::vector<std::size_t> dims(dims_.begin(), dims_.begin() + top + 1);
    Action action(action_.begin(), action_.begin() + top + 1);
    const auto& gens = algebra_->gens();
    for (int t = 0; t <= top; ++t)
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (t + gens.degree(g) > top) action[static_cast<std::size_t>(t)][g].clear();
    return GradedModule(algebra_, top, std::move(dims), std::move(action));
  }

 private:
  AlgebraPtr<F> algebra_;
  int truncation_;
  std::vector<std::size_t> dims_;
  Action action_;
};

/// A submodule of a free module given by RREF bases of its components.
/// Coordinates on the submodule are taken with respect to those rows.
template <ExactField F>
GradedModule<F> submodule_of_free(const FreeModule<F>& free, const std::vector<std::vector<SparseVec<F>>>& rows) {
  const auto& algebra = free.algebra();
  const auto& gens = algebra->gens();
  int top = free.truncation();
  std::vector<std::vector<int>> row_of_pivot(static_cast<std::size_t>(top) + 1);
  std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    auto& rp = row_of_pivot[static_cast<std::size_t>(d)];
    rp.assign(free.dim(d), -1);
    const auto& rd = rows[static_cast<std::size_t>(d)];
    dims[static_cast<std::size_t>(d)] = rd.size();
    for (std::size_t r = 0; r < rd.size(); ++r) rp[rd[r].front().first] = static_cast<int>(r);
  }
  typename GradedModule<F>::Action action(static_cast<std::size_t>(top) + 1,
                                          std::vector<std::vector<SparseVec<F>>>(gens.size()));
  for (int d = 0; d <= top; ++d)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int e = d + gens.degree(g);
      if (e > top) continue;
      auto& table = action[static_cast<std::size_t>(d)][g];
      for (const auto& row : rows[static_cast<std::size_t>(d)])
        table.push_back(rref_coordinates<F>(free.multiply(d, row, static_cast<Letter>(g)),
                                            row_of_pivot[static_cast<std::size_t>(e)]));
    }
  return GradedModule<F>(algebra, top, std::move(dims), std::move(action));
}

/// The quotient F / N of a free module by a submodule given through RREF
/// bases of its components. The basis of (F/N)_d is the set of non-pivot
/// columns of F_d: the normal module words.
template <ExactField F>
struct QuotientModule {
  FreeModule<F> free;
  std::vector<Echelon<F>> relations;                 // N_d
  std::vector<std::vector<std::uint32_t>> normal_columns;
  GradedModule<F> module;

  std::vector<ModuleWord> normal_words(int d) const {
    std::vector<ModuleWord> out;
    for (auto c : normal_columns[static_cast<std::size_t>(d)]) out.push_back(free.module_word(d, c));
    return out;
  }
};

/// Materializes the module presented by `pres` in degrees 0..truncation.
/// N_d is spanned by the relations of degree d and by N_{d - deg x} * x.
template <ExactField F>
QuotientModule<F> quotient_module(AlgebraPtr<F> algebra, const ModulePresentation<F>& pres, int truncation) {
  if (truncation < 0) throw TruncationError("negative truncation");
  FreeModule<F> free(algebra, pres.gen_degrees, truncation);
  const auto& k = algebra->field();
  const auto& gens = algebra->gens();
  const auto top = static_cast<std::size_t>(truncation);
  std::vector<Echelon<F>> rel;
  std::vector<std::vector<SparseVec<F>>> rel_rows(top + 1);
  for (int d = 0; d <= truncation; ++d) {
    Echelon<F> ech(k, free.dim(d));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int prev = d - gens.degree(g);
      if (prev < 0) continue;
      for (const auto& row : rel_rows[static_cast<std::size_t>(prev)])
        ech.insert(free.multiply(prev, row, static_cast<Letter>(g)));
    }
    for (const auto& r : pres.rels) {
      if (r.degree() != d) continue;
      SparseVec<F> v;
      for (const auto& t : r.terms()) {
        auto gen = t.mword.gen;
        auto poly = NcPolynomial<F>::monomial(k, gens, t.mword.word);
        SparseVec<F> image;
        auto shift = free.offset(d, gen);
        for (const auto& [j, a] : algebra->coordinates(poly)) image.emplace_back(shift + j, a);
        add_scaled(k, v, t.coeff, image);
      }
      ech.insert(v);
    }
    rel_rows[static_cast<std::size_t>(d)] = ech.rref();
    rel.push_back(std::move(ech));
  }

  std::vector<std::vector<std::uint32_t>> normal(top + 1);
  std::vector<std::vector<int>> quotient_index(top + 1);
  std::vector<std::size_t> dims(top + 1);
  for (std::size_t d = 0; d <= top; ++d) {
    normal[d] = rel[d].non_pivots();
    quotient_index[d].assign(free.dim(static_cast<int>(d)), -1);
    for (std::size_t i = 0; i < normal[d].size(); ++i) quotient_index[d][normal[d][i]] = static_cast<int>(i);
    dims[d] = normal[d].size();
  }
  typename GradedModule<F>::Action action(top + 1, std::vector<std::vector<SparseVec<F>>>(gens.size()));
  for (int d = 0; d <= truncation; ++d)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int e = d + gens.degree(g);
      if (e > truncation) continue;
      auto& table = action[static_cast<std::size_t>(d)][g];
      for (auto c : normal[static_cast<std::size_t>(d)]) {
        auto image = rel[static_cast<std::size_t>(e)].reduce(free.multiply(d, unit_vector(k, c), static_cast<Letter>(g)));
        SparseVec<F> coords;
        for (const auto& [j, a] : image)
          coords.emplace_back(static_cast<std::uint32_t>(quotient_index[static_cast<std::size_t>(e)][j]), a);
        table.push_back(std::move(coords));
      }
    }
  GradedModule<F> module(algebra, truncation, std::move(dims), std::move(action));
  return {std::move(free), std::move(rel), std::move(normal), std::move(module)};
}

/// dim M_0..M_N together with the canonical bases (normal module words,
/// largest first).
struct ModuleDims {
  std::vector<std::size_t> dims;
  std::vector<std::vector<ModuleWord>> bases;
};

template <ExactField F>
ModuleDims module_dims(const ModulePresentation<F>& pres, int truncation) {
  auto algebra = make_algebra(pres.base, std::max(truncation, pres.base.max_relation_degree()));
  auto q = quotient_module(algebra, pres, truncation);
  ModuleDims out{q.module.dims(), {}};
  for (int d = 0; d <= truncation; ++d) out.bases.push_back(q.normal_words(d));
  return out;
}

/// A free module F mapped onto (part of) a module X by sending generator j
/// to a chosen vector, together with the images of all basis elements of
/// F and the kernel of the map, both degree by degree.
template <ExactField F>
struct Cover {
  FreeModule<F> free;
  std::vector<std::vector<SparseVec<F>>> images;  // in X_d coordinates
  std::vector<std::vector<SparseVec<F>>> kernel;  // RREF rows in F_d coordinates
};

struct GeneratorChoice {
  int degree = 0;
  std::uint32_t column = 0;  // a basis vector of X_degree
};

template <ExactField F>
Cover<F> cover(const GradedModule<F>& x, const std::vector<GeneratorChoice>& generators, int top,
               bool with_kernel = true) {
  const auto& algebra = x.algebra();
  const auto& k = x.field();
  const auto& gens = algebra->gens();
  std::vector<int> degrees;
  for (const auto& g : generators) degrees.push_back(g.degree);
  FreeModule<F> free(algebra, degrees, top);
  std::vector<std::vector<SparseVec<F>>> images(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<SparseVec<F>>> kernel(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    auto& img = images[static_cast<std::size_t>(d)];
    img.resize(free.dim(d));
    for (std::size_t j = 0; j < generators.size(); ++j) {
      int wd = d - degrees[j];
      if (wd < 0) continue;
      auto base = free.offset(d, j);
      for (std::uint32_t i = 0; i < algebra->dim(wd); ++i) {
        if (wd == 0) {
          img[base + i] = unit_vector(k, generators[j].column);
          continue;
        }
        auto p = algebra->parent(wd, i);
        auto letter = algebra->last_letter(wd, i);
        int prev = d - gens.degree(letter);
        img[base + i] = x.act(prev, images[static_cast<std::size_t>(prev)][free.offset(prev, j) + p], letter);
      }
    }
    if (with_kernel)
      kernel[static_cast<std::size_t>(d)] = sparse_kernel(k, img, static_cast<std::uint32_t>(x.dim(d)));
  }
  return {std::move(free), std::move(images), std::move(kernel)};
}

/// Minimal generators of X: in each degree, the basis vectors at the
/// non-pivot columns of the decomposable part sum_x X_{d - deg x} x.
template <ExactField F>
std::vector<GeneratorChoice> minimal_generators(const GradedModule<F>& x, int top) {
  const auto& gens = x.algebra()->gens();
  std::vector<GeneratorChoice> out;
  for (int d = 0; d <= top; ++d) {
    Echelon<F> decomposable(x.field(), static_cast<std::uint32_t>(x.dim(d)));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int prev = d - gens.degree(g);
      if (prev < 0) continue;
      for (std::uint32_t i = 0; i < x.dim(prev); ++i) decomposable.insert(x.act(prev, i, static_cast<Letter>(g)));
    }
    for (auto c : decomposable.non_pivots()) out.push_back({d, c});
  }
  return out;
}

}  // namespace hilbseries
