#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hilbseries/module.hpp"
#include "hilbseries/series.hpp"

namespace hilbseries {

/// How far a reported m_i can be trusted.
enum class MStatus {
  exact,           // proven: no Tor_i above the value
  at_truncation,   // largest degree seen up to N; higher classes are not excluded
  unbounded,       // Tor_i is nonzero in degree N itself
};

struct MValue {
  int value = 0;
  MStatus status = MStatus::exact;

  std::string to_string(int truncation) const {
    switch (status) {
      case MStatus::exact: return std::to_string(value);
      case MStatus::at_truncation: return std::to_string(value) + "?";
      default: return ">=" + std::to_string(truncation);
    }
  }
};

inline std::string to_string(MStatus s) {
  switch (s) {
    case MStatus::exact: return "exact";
    case MStatus::at_truncation: return "at-truncation";
    default: return "unbounded";
  }
}

/// dim Tor_i(M, k)_j for i <= i_max and j <= N, with the numbers m_i.
struct ResolutionProfile {
  int truncation = 0;
  std::vector<std::vector<std::size_t>> tor_dims;
  std::vector<MValue> m;
  bool terminated = false;  // some syzygy module vanished through degree N
  bool consistent = true;   // only meaningful for algebra_homology
  std::string consistency_note;

  std::size_t levels() const { return tor_dims.size(); }
  TruncatedSeries tor_series(std::size_t i) const { return series_of(tor_dims[i]); }
  std::vector<TruncatedSeries> tor_series() const {
    std::vector<TruncatedSeries> out;
    for (std::size_t i = 0; i < tor_dims.size(); ++i) out.push_back(tor_series(i));
    return out;
  }
};

/// The computed resolution. syzygies[0] is M itself; syzygies[i + 1] is
/// the kernel of covers[i].free -> syzygies[i], with coordinates relative to
/// the RREF rows covers[i].kernel.
template <ExactField F>
struct Resolution {
  AlgebraPtr<F> algebra;
  std::vector<GradedModule<F>> syzygies;
  std::vector<std::vector<GeneratorChoice>> generators;
  std::vector<Cover<F>> covers;
  ResolutionProfile profile;

  /// Image of generator g of F_{i+1} in F_i.
  const SparseVec<F>& differential(std::size_t i, std::size_t g) const {
    const auto& choice = generators[i + 1][g];
    return covers[i].kernel[static_cast<std::size_t>(choice.degree)][choice.column];
  }
};

namespace detail {

inline MValue m_value(const std::vector<std::size_t>& dims, int truncation, std::optional<int> known_bound,
                      bool previous_terminated) {
  int top = -1;
  for (int j = 0; j <= truncation; ++j)
    if (dims[static_cast<std::size_t>(j)] != 0) top = j;
  MValue v{std::max(top, 0), MStatus::at_truncation};
  if (top == truncation) v.status = MStatus::unbounded;
  if (top < 0 && previous_terminated) v.status = MStatus::exact;
  if (known_bound && *known_bound <= truncation && top < truncation) v.status = MStatus::exact;
  return v;
}

template <ExactField F>
Resolution<F> resolve(AlgebraPtr<F> algebra, GradedModule<F> module, int i_max, int truncation,
                      const std::vector<std::optional<int>>& known_bounds) {
  Resolution<F> res{algebra, {}, {}, {}, {}};
  res.profile.truncation = truncation;
  res.syzygies.push_back(std::move(module));
  bool previous_zero = false;  // the module at this level vanished through N
  for (int i = 0; i <= i_max; ++i) {
    const auto& x = res.syzygies.back();
    bool zero_here = x.is_zero();
    auto gens = minimal_generators(x, truncation);
    std::vector<std::size_t> dims(static_cast<std::size_t>(truncation) + 1, 0);
    for (const auto& g : gens) ++dims[static_cast<std::size_t>(g.degree)];
    std::optional<int> bound;
    if (static_cast<std::size_t>(i) < known_bounds.size()) bound = known_bounds[static_cast<std::size_t>(i)];
    res.profile.m.push_back(m_value(dims, truncation, bound, zero_here || previous_zero));
    res.profile.tor_dims.push_back(std::move(dims));
    if (zero_here) res.profile.terminated = true;
    previous_zero = previous_zero || zero_here;
    res.generators.push_back(gens);
    if (i == i_max) break;
    auto c = cover(x, gens, truncation);
    auto next = submodule_of_free(c.free, c.kernel);
    res.covers.push_back(std::move(c));
    res.syzygies.push_back(std::move(next));
  }
  return res;
}

}  // namespace detail

/// Minimal graded free resolution of the module presented by `pres`, levels
/// 0..i_max, exact in all degrees <= N.
template <ExactField F>
Resolution<F> minimal_resolution_full(const ModulePresentation<F>& pres, int i_max, int truncation) {
  if (truncation < pres.max_relation_degree() || truncation < pres.max_generator_degree() ||
      truncation < pres.base.max_relation_degree())
    throw TruncationError("truncation " + std::to_string(truncation) + " is below a presentation degree");
  if (i_max < 0) throw InputError("i_max must be nonnegative");
  auto algebra = make_algebra(pres.base, truncation);
  auto q = quotient_module(algebra, pres, truncation);
  std::vector<std::optional<int>> bounds{pres.max_generator_degree(),
                                         pres.rels.empty() ? 0 : pres.max_relation_degree()};
  return detail::resolve(algebra, std::move(q.module), i_max, truncation, bounds);
}

template <ExactField F>
ResolutionProfile minimal_resolution(const ModulePresentation<F>& pres, int i_max, int truncation) {
  return minimal_resolution_full(pres, i_max, truncation).profile;
}

/// Checks that no differential has a unit entry: the image of every
/// generator of F_{i+1} lies in A_+ F_i.
template <ExactField F>
bool is_minimal(const Resolution<F>& res) {
  for (std::size_t i = 0; i + 1 < res.generators.size(); ++i) {
    const auto& free = res.covers[i].free;
    for (std::size_t g = 0; g < res.generators[i + 1].size(); ++g) {
      int d = res.generators[i + 1][g].degree;
      for (const auto& [c, a] : res.differential(i, g)) {
        auto [gen, w] = free.locate(d, c);
        (void)w;
        if (free.gen_degrees()[gen] == d) return false;
      }
    }
  }
  return true;
}

/// Tor_i(k, k) over the algebra, i.e. the homology H_i A, together with the
/// check that H_1 and H_2 count the generators and the minimal relations.
template <ExactField F>
ResolutionProfile algebra_homology(const Presentation<F>& pres, int i_max, int truncation) {
  auto k = trivial_module(pres);
  if (truncation < pres.max_relation_degree() || truncation < pres.gens.max_degree())
    throw TruncationError("truncation " + std::to_string(truncation) + " is below a presentation degree");
  auto algebra = make_algebra(pres, truncation);
  auto q = quotient_module(algebra, k, truncation);
  auto minimal = minimize_relations(pres);
  std::vector<std::optional<int>> bounds{0, pres.gens.max_degree(), minimal.max_relation_degree()};
  auto profile = detail::resolve(algebra, std::move(q.module), i_max, truncation, bounds).profile;

  auto expect = [&](std::size_t i, const std::vector<int>& degrees, const char* what) {
    if (profile.tor_dims.size() <= i) return;
    std::vector<std::size_t> want(static_cast<std::size_t>(truncation) + 1, 0);
    for (int d : degrees)
      if (d <= truncation) ++want[static_cast<std::size_t>(d)];
    if (want != profile.tor_dims[i]) {
      profile.consistent = false;
      profile.consistency_note += std::string(profile.consistency_note.empty() ? "" : "; ") + "H_" +
                                  std::to_string(i) + " does not match the " + what;
    }
  };
  expect(1, pres.gens.degrees(), "generator degrees");
  std::vector<int> rel_degrees;
  for (const auto& r : minimal.rels) rel_degrees.push_back(r.degree());
  expect(2, rel_degrees, "minimal relation degrees");
  return profile;
}

/// A presentation of the first syzygy module Omega = ker(H_0(M) (x) A -> M):
/// minimal generators of Omega and minimal relations among them.
template <ExactField F>
struct SyzygyModule {
  ModulePresentation<F> presentation;
  int exactness_degree = 0;
  std::vector<SparseVec<F>> generator_images;  // in the free cover of M
};

template <ExactField F>
SyzygyModule<F> syzygy_presentation(const ModulePresentation<F>& pres, int truncation) {
  auto res = minimal_resolution_full(pres, 2, truncation);
  ModulePresentation<F> omega{pres.base, "Omega(" + pres.name + ")", {}, {}, {}};
  SyzygyModule<F> out;
  const auto& gens1 = res.generators[1];
  for (std::size_t g = 0; g < gens1.size(); ++g) {
    omega.gen_names.push_back("s" + std::to_string(g + 1));
    omega.gen_degrees.push_back(gens1[g].degree);
    out.generator_images.push_back(res.differential(0, g));
  }
  const auto& free1 = res.covers[1].free;
  for (std::size_t r = 0; r < res.generators[2].size(); ++r) {
    int d = res.generators[2][r].degree;
    std::vector<std::pair<ModuleWord, typename F::Element>> terms;
    for (const auto& [c, a] : res.differential(1, r)) terms.emplace_back(free1.module_word(d, c), a);
    omega.rels.push_back(ModElement<F>::from_terms(pres.base.field, omega.gen_degrees, pres.base.gens, terms));
  }
  out.presentation = std::move(omega);
  out.exactness_degree = truncation;
  return out;
}

/// A(z)^{-1} - sum_i (-1)^i H_i(z): zero when the homology is consistent
/// with the Hilbert series of the algebra through degree N.
template <ExactField F>
TruncatedSeries euler_check(const Presentation<F>& pres, const std::vector<TruncatedSeries>& tor, int truncation) {
  auto a = series_of(algebra_dims(pres, truncation));
  return invert(a) - alternating_sum(tor, truncation);
}

/// M(z) - (sum_i (-1)^i H_i M(z)) A(z).
inline TruncatedSeries module_euler_residual(const TruncatedSeries& module, const TruncatedSeries& algebra,
                                             const std::vector<TruncatedSeries>& tor) {
  int n = std::min(module.truncation(), algebra.truncation());
  return module - alternating_sum(tor, n) * algebra;
}

}  // namespace hilbseries
