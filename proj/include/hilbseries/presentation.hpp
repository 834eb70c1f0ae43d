#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hilbseries/polynomial.hpp"

namespace hilbseries {

/// A connected graded algebra k<gens> / (rels).
template <ExactField F>
struct Presentation {
  F field;
  GeneratorSet gens;
  std::vector<NcPolynomial<F>> rels;

  int max_relation_degree() const {
    int d = 0;
    for (const auto& r : rels) d = std::max(d, r.degree());
    return d;
  }
};

/// A graded right module over `base`, given as a quotient of the free module
/// on `gen_names` by the submodule generated by `rels`.
template <ExactField F>
struct ModulePresentation {
  Presentation<F> base;
  std::string name;
  std::vector<std::string> gen_names;
  std::vector<int> gen_degrees;
  std::vector<ModElement<F>> rels;

  int min_generator_degree() const {
    return gen_degrees.empty() ? 0 : *std::min_element(gen_degrees.begin(), gen_degrees.end());
  }
  int max_generator_degree() const {
    return gen_degrees.empty() ? 0 : *std::max_element(gen_degrees.begin(), gen_degrees.end());
  }
  int max_relation_degree() const {
    int d = 0;
    for (const auto& r : rels) d = std::max(d, r.degree());
    return d;
  }
};

/// The algebra as a free module of rank one over itself.
template <ExactField F>
ModulePresentation<F> regular_module(const Presentation<F>& a) {
  return {a, "A", {"e"}, {0}, {}};
}

/// The trivial module k = A / A_+.
template <ExactField F>
ModulePresentation<F> trivial_module(const Presentation<F>& a) {
  ModulePresentation<F> m{a, "k", {"e"}, {0}, {}};
  for (std::size_t g = 0; g < a.gens.size(); ++g)
    m.rels.push_back(ModElement<F>::from_terms(a.field, m.gen_degrees, a.gens,
                                               {{ModuleWord{0, Word{static_cast<Letter>(g)}}, a.field.one()}}));
  return m;
}

}  // namespace hilbseries
