#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "hilbseries/groebner.hpp"

namespace hilbseries {

/// The quotient algebra A = k<X>/I materialized up to a truncation degree:
/// normal-word bases of A_0..A_N (largest word first) and the right action
/// of every generator as sparse matrices.
template <ExactField F>
class GradedAlgebra {
 public:
  using Element = typename F::Element;

  GradedAlgebra(const Presentation<F>& pres, int truncation)
      : GradedAlgebra(pres, groebner_truncated(pres, std::max(truncation, pres.max_relation_degree())),
                      truncation) {}

  GradedAlgebra(const Presentation<F>& pres, GroebnerResult<F> gb, int truncation)
      : pres_(pres), gb_(std::move(gb)), truncation_(truncation) {
    if (truncation_ > gb_.truncation) throw TruncationError("algebra truncation exceeds Groebner truncation");
    build();
  }

  const F& field() const noexcept { return pres_.field; }
  const GeneratorSet& gens() const noexcept { return pres_.gens; }
  const Presentation<F>& presentation() const noexcept { return pres_; }
  const GroebnerResult<F>& groebner() const noexcept { return gb_; }
  int truncation() const noexcept { return truncation_; }

  std::size_t dim(int d) const {
    if (d < 0 || d > truncation_) return 0;
    return basis_[static_cast<std::size_t>(d)].size();
  }
  const std::vector<Word>& basis(int d) const { return basis_[static_cast<std::size_t>(d)]; }
  std::uint32_t index_of(int d, const Word& w) const { return index_[static_cast<std::size_t>(d)].at(w); }

  /// For a normal word w = w' x of positive degree: the index of w' and x.
  std::uint32_t parent(int d, std::uint32_t i) const { return parent_[static_cast<std::size_t>(d)][i]; }
  Letter last_letter(int d, std::uint32_t i) const { return basis(d)[i].back(); }

  /// Normal form of (basis word i of degree d) * x, in the basis of degree
  /// d + deg x. Requires d + deg x <= truncation.
  const SparseVec<F>& multiply(int d, std::uint32_t i, Letter x) const {
    return mult_[static_cast<std::size_t>(d)][x][i];
  }

  SparseVec<F> multiply(int d, const SparseVec<F>& v, Letter x) const {
    SparseVec<F> out;
    for (const auto& [i, c] : v) add_scaled(field(), out, c, multiply(d, i, x));
    return out;
  }

  /// Coordinates of the normal form of a homogeneous polynomial.
  SparseVec<F> coordinates(const NcPolynomial<F>& p) const {
    if (p.is_zero()) return {};
    int d = p.degree();
    if (d > truncation_) throw TruncationError("polynomial degree exceeds the algebra truncation");
    auto nf = reducer_.reduce(gens(), p);
    SparseVec<F> v;
    for (const auto& t : nf.terms()) v.emplace_back(index_of(d, t.word), t.coeff);
    return v;  // normal-form terms are sorted descending, matching the basis order
  }

  NcPolynomial<F> polynomial(int d, const SparseVec<F>& v) const {
    std::vector<typename NcPolynomial<F>::Term> terms;
    for (const auto& [i, c] : v) terms.push_back({basis(d)[i], c});
    return NcPolynomial<F>::from_sorted(field(), d, std::move(terms));
  }

  std::vector<BigInt> dims() const {
    std::vector<BigInt> out;
    for (int d = 0; d <= truncation_; ++d) out.emplace_back(static_cast<unsigned long>(dim(d)));
    return out;
  }

 private:
  void build() {
    const auto& gens = pres_.gens;
    const std::size_t n = gens.size();
    const auto top = static_cast<std::size_t>(truncation_);
    for (const auto& g : gb_.basis) reducer_.add(g);
    LeadingWordAutomaton automaton(n, gb_.leading_words());

    basis_.assign(top + 1, {});
    index_.assign(top + 1, {});
    parent_.assign(top + 1, {});
    std::vector<std::vector<std::size_t>> state(top + 1);
    basis_[0].push_back({});
    state[0].push_back(0);
    parent_[0].push_back(0);
    index_[0].emplace(Word{}, 0);
    for (std::size_t d = 1; d <= top; ++d) {
      struct Candidate {
        Word word;
        std::uint32_t parent;
        std::size_t state;
      };
      std::vector<Candidate> found;
      for (std::size_t g = 0; g < n; ++g) {
        auto gd = static_cast<std::size_t>(gens.degree(g));
        if (gd > d) continue;
        const auto& prev = basis_[d - gd];
        for (std::uint32_t i = 0; i < prev.size(); ++i) {
          auto t = automaton.next(state[d - gd][i], static_cast<Letter>(g));
          if (automaton.dead(t)) continue;
          Word w = prev[i];
          w.push_back(static_cast<Letter>(g));
          found.push_back({std::move(w), i, t});
        }
      }
      std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) { return a.word > b.word; });
      for (auto& c : found) {
        index_[d].emplace(c.word, static_cast<std::uint32_t>(basis_[d].size()));
        basis_[d].push_back(std::move(c.word));
        parent_[d].push_back(c.parent);
        state[d].push_back(c.state);
      }
    }

    mult_.assign(top + 1, std::vector<std::vector<SparseVec<F>>>(n));
    for (std::size_t d = 0; d <= top; ++d)
      for (std::size_t g = 0; g < n; ++g) {
        auto e = d + static_cast<std::size_t>(gens.degree(g));
        if (e > top) continue;
        auto& table = mult_[d][g];
        table.resize(basis_[d].size());
        for (std::uint32_t i = 0; i < basis_[d].size(); ++i) {
          Word w = basis_[d][i];
          w.push_back(static_cast<Letter>(g));
          auto t = automaton.next(state[d][i], static_cast<Letter>(g));
          if (!automaton.dead(t)) {
            table[i] = unit_vector(field(), index_[e].at(w));
            continue;
          }
          auto nf = reducer_.reduce(gens, NcPolynomial<F>::monomial(field(), gens, w));
          SparseVec<F> v;
          for (const auto& term : nf.terms()) v.emplace_back(index_[e].at(term.word), term.coeff);
          table[i] = std::move(v);
        }
      }
  }

  Presentation<F> pres_;
  GroebnerResult<F> gb_;
  int truncation_;
  Reducer<F> reducer_{pres_.field};
  std::vector<std::vector<Word>> basis_;
  std::vector<std::unordered_map<Word, std::uint32_t, WordHash>> index_;
  std::vector<std::vector<std::uint32_t>> parent_;
  std::vector<std::vector<std::vector<SparseVec<F>>>> mult_;
};

template <ExactField F>
using AlgebraPtr = std::shared_ptr<const GradedAlgebra<F>>;

template <ExactField F>
AlgebraPtr<F> make_algebra(const Presentation<F>& pres, int truncation) {
  return std::make_shared<const GradedAlgebra<F>>(pres, truncation);
}

}  // namespace hilbseries
