#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hilbseries/presentation.hpp"
#include "hilbseries/sparse.hpp"

namespace hilbseries {

/// Degree-truncated two-sided Groebner basis of a homogeneous ideal.
template <ExactField F>
struct GroebnerResult {
  F field;
  GeneratorSet gens;
  /// Monic, tail-reduced, in order of discovery (nondecreasing degree).
  std::vector<NcPolynomial<F>> basis;
  int truncation = 0;
  /// Every overlap of basis elements has degree <= truncation, so by the
  /// diamond lemma the basis is a Groebner basis of the whole ideal.
  bool complete = false;
  /// Smallest degree of an overlap left unprocessed beyond the truncation.
  std::optional<int> first_pending_degree;

  std::vector<Word> leading_words() const {
    std::vector<Word> out;
    out.reserve(basis.size());
    for (const auto& g : basis) out.push_back(g.leading_word());
    return out;
  }

  int max_leading_length() const {
    std::size_t len = 0;
    for (const auto& g : basis) len = std::max(len, g.leading_word().size());
    return static_cast<int>(len);
  }
};

/// Reduces polynomials modulo a set of monic polynomials with distinct,
/// mutually non-dividing leading words.
template <ExactField F>
class Reducer {
 public:
  using Element = typename F::Element;

  explicit Reducer(F field) : field_(std::move(field)) {}

  void add(const NcPolynomial<F>& g) {
    const Word& lead = g.leading_word();
    leads_.emplace(lead, polys_.size());
    polys_.push_back(g);
    max_len_ = std::max(max_len_, lead.size());
    min_len_ = std::min(min_len_, lead.size());
  }

  std::size_t size() const noexcept { return polys_.size(); }

  /// Position and basis index of the leftmost, shortest leading word
  /// occurring in w.
  std::optional<std::pair<std::size_t, std::size_t>> find_divisor(const Word& w) const {
    if (polys_.empty()) return std::nullopt;
    Word probe;
    for (std::size_t start = 0; start < w.size(); ++start)
      for (std::size_t len = min_len_; len <= max_len_ && start + len <= w.size(); ++len) {
        probe.assign(w.begin() + static_cast<std::ptrdiff_t>(start),
                     w.begin() + static_cast<std::ptrdiff_t>(start + len));
        auto it = leads_.find(probe);
        if (it != leads_.end()) return std::make_pair(start, it->second);
      }
    return std::nullopt;
  }

  bool is_normal(const Word& w) const { return !find_divisor(w); }

  NcPolynomial<F> reduce(const GeneratorSet& /*gens*/, const NcPolynomial<F>& f) const {
    if (f.is_zero() || polys_.empty()) return f;
    const F& k = field_;
    std::map<Word, Element, std::greater<>> acc;
    for (const auto& t : f.terms()) acc.emplace(t.word, t.coeff);
    auto it = acc.begin();
    while (it != acc.end()) {
      auto hit = find_divisor(it->first);
      if (!hit) {
        ++it;
        continue;
      }
      const Word w = it->first;
      const Element coef = it->second;
      const auto& g = polys_[hit->second];
      std::size_t lead_len = g.leading_word().size();
      Word left = subword(w, 0, hit->first);
      Word right = subword(w, hit->first + lead_len, w.size() - hit->first - lead_len);
      for (const auto& t : g.terms()) {
        auto c = k.neg(k.mul(coef, t.coeff));
        auto [pos, fresh] = acc.try_emplace(concat(concat(left, t.word), right), c);
        if (!fresh) {
          pos->second = k.add(pos->second, c);
          if (k.is_zero(pos->second)) acc.erase(pos);
        }
      }
      it = acc.upper_bound(w);
    }
    std::vector<typename NcPolynomial<F>::Term> terms;
    terms.reserve(acc.size());
    for (auto& [w, c] : acc) terms.push_back({w, c});
    return NcPolynomial<F>::from_sorted(k, f.degree(), std::move(terms));
  }

 private:
  F field_;
  std::vector<NcPolynomial<F>> polys_;
  std::unordered_map<Word, std::size_t, WordHash> leads_;
  std::size_t max_len_ = 0;
  std::size_t min_len_ = static_cast<std::size_t>(-1);
};

namespace detail {

/// Converts same-degree polynomials to sparse rows over their joint support,
/// columns ordered largest word first.
template <ExactField F>
struct WordColumns {
  std::vector<Word> words;
  std::unordered_map<Word, std::uint32_t, WordHash> index;

  explicit WordColumns(const std::vector<NcPolynomial<F>>& polys) {
    for (const auto& p : polys)
      for (const auto& t : p.terms()) index.emplace(t.word, 0);
    words.reserve(index.size());
    for (const auto& [w, _] : index) words.push_back(w);
    std::sort(words.begin(), words.end(), std::greater<>());
    for (std::uint32_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  }

  SparseVec<F> row(const NcPolynomial<F>& p) const {
    SparseVec<F> v;
    v.reserve(p.terms().size());
    for (const auto& t : p.terms()) v.emplace_back(index.at(t.word), t.coeff);
    return v;  // terms are sorted descending, so indices are increasing
  }

  NcPolynomial<F> poly(const F& k, int degree, const SparseVec<F>& v) const {
    std::vector<typename NcPolynomial<F>::Term> terms;
    terms.reserve(v.size());
    for (const auto& [c, x] : v) terms.push_back({words[c], x});
    return NcPolynomial<F>::from_sorted(k, degree, std::move(terms));
  }
};

/// Obstruction overlaps: a proper suffix of lead(f) equals a proper prefix
/// of lead(g). Calls emit(degree, s_polynomial).
template <ExactField F, class Emit>
void for_each_overlap(const GeneratorSet& gens, const NcPolynomial<F>& f, const NcPolynomial<F>& g,
                      Emit&& emit) {
  const Word& u = f.leading_word();
  const Word& v = g.leading_word();
  std::size_t limit = std::min(u.size(), v.size());
  for (std::size_t k = 1; k < limit; ++k) {
    if (!std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), v.begin())) continue;
    Word right = subword(v, k, v.size() - k);
    Word left = subword(u, 0, u.size() - k);
    int degree = f.degree() + gens.degree(right);
    emit(degree, [&, right = std::move(right), left = std::move(left)] {
      return sandwich(gens, Word{}, f, right) - sandwich(gens, left, g, Word{});
    });
  }
}

}  // namespace detail

/// Homogeneous Buchberger procedure run degree by degree up to `truncation`.
/// When `kept` is given it receives, per input relation, whether the
/// relation is independent of lower-degree relations and of the earlier
/// relations of its own degree.
template <ExactField F>
GroebnerResult<F> groebner_truncated(const Presentation<F>& pres, int truncation,
                                     std::vector<bool>* kept = nullptr) {
  if (truncation < pres.max_relation_degree())
    throw TruncationError("truncation " + std::to_string(truncation) +
                          " is below the maximal relation degree " +
                          std::to_string(pres.max_relation_degree()));
  const F& k = pres.field;
  const GeneratorSet& gens = pres.gens;
  GroebnerResult<F> result{k, gens, {}, truncation, false, std::nullopt};
  Reducer<F> reducer(k);
  if (kept) kept->assign(pres.rels.size(), false);

  std::map<int, std::vector<NcPolynomial<F>>> pending;
  auto schedule = [&](const NcPolynomial<F>& f, const NcPolynomial<F>& g) {
    detail::for_each_overlap(gens, f, g, [&](int degree, auto&& make) {
      if (degree <= truncation) {
        pending[degree].push_back(make());
      } else if (!result.first_pending_degree || degree < *result.first_pending_degree) {
        result.first_pending_degree = degree;
      }
    });
  };

  for (int d = 1; d <= truncation; ++d) {
    std::vector<NcPolynomial<F>> candidates;
    std::vector<int> tags;
    if (auto it = pending.find(d); it != pending.end()) {
      for (const auto& s : it->second) {
        auto r = reducer.reduce(gens, s);
        if (!r.is_zero()) {
          candidates.push_back(std::move(r));
          tags.push_back(-1);
        }
      }
      pending.erase(it);
    }
    for (std::size_t i = 0; i < pres.rels.size(); ++i) {
      if (pres.rels[i].degree() != d) continue;
      auto r = reducer.reduce(gens, pres.rels[i]);
      if (r.is_zero()) continue;
      candidates.push_back(std::move(r));
      tags.push_back(static_cast<int>(i));
    }
    if (candidates.empty()) continue;

    detail::WordColumns<F> columns(candidates);
    Echelon<F> echelon(k, static_cast<std::uint32_t>(columns.words.size()));
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      bool independent = echelon.insert(columns.row(candidates[c]));
      if (kept && tags[c] >= 0) (*kept)[static_cast<std::size_t>(tags[c])] = independent;
    }
    std::size_t first_new = result.basis.size();
    for (const auto& row : echelon.rref()) {
      auto g = columns.poly(k, d, row);
      reducer.add(g);
      result.basis.push_back(std::move(g));
    }
    for (std::size_t i = first_new; i < result.basis.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        schedule(result.basis[i], result.basis[j]);
        if (j != i) schedule(result.basis[j], result.basis[i]);
      }
  }
  result.complete = !result.first_pending_degree;
  return result;
}

template <ExactField F>
Reducer<F> make_reducer(const GroebnerResult<F>& gb) {
  Reducer<F> r(gb.field);
  for (const auto& g : gb.basis) r.add(g);
  return r;
}

template <ExactField F>
NcPolynomial<F> normal_form(const NcPolynomial<F>& f, const GroebnerResult<F>& gb) {
  if (f.degree() > gb.truncation)
    throw TruncationError("degree " + std::to_string(f.degree()) + " exceeds the truncation " +
                          std::to_string(gb.truncation));
  return make_reducer(gb).reduce(gb.gens, f);
}

/// Replaces the relations by a minimal set: relations lying in the ideal
/// generated by lower-degree relations (or dependent on earlier ones of the
/// same degree) are dropped, and each degree is brought to monic RREF.
template <ExactField F>
Presentation<F> minimize_relations(const Presentation<F>& pres) {
  Presentation<F> out{pres.field, pres.gens, {}};
  std::vector<NcPolynomial<F>> nonzero;
  for (const auto& r : pres.rels)
    if (!r.is_zero()) nonzero.push_back(r);
  if (nonzero.empty()) return out;
  Presentation<F> work{pres.field, pres.gens, nonzero};
  std::vector<bool> kept;
  groebner_truncated(work, work.max_relation_degree(), &kept);
  std::map<int, std::vector<NcPolynomial<F>>> by_degree;
  for (std::size_t i = 0; i < nonzero.size(); ++i)
    if (kept[i]) by_degree[nonzero[i].degree()].push_back(nonzero[i]);
  for (auto& [d, rels] : by_degree) {
    detail::WordColumns<F> columns(rels);
    Echelon<F> echelon(pres.field, static_cast<std::uint32_t>(columns.words.size()));
    for (const auto& r : rels) echelon.insert(columns.row(r));
    for (const auto& row : echelon.rref()) out.rels.push_back(columns.poly(pres.field, d, row));
  }
  return out;
}

/// Aho-Corasick automaton over a set of forbidden words. A state is dead
/// once the input read so far contains one of them.
class LeadingWordAutomaton {
 public:
  LeadingWordAutomaton(std::size_t alphabet, const std::vector<Word>& patterns) : alphabet_(alphabet) {
    new_node();
    for (const Word& p : patterns) {
      std::size_t s = 0;
      for (Letter l : p) {
        if (next_[s * alphabet_ + l] < 0) {
          auto fresh = new_node();
          next_[s * alphabet_ + l] = static_cast<int>(fresh);
        }
        s = static_cast<std::size_t>(next_[s * alphabet_ + l]);
      }
      dead_[s] = true;
    }
    std::vector<std::size_t> queue;
    for (std::size_t a = 0; a < alphabet_; ++a) {
      int& t = next_[a];
      if (t < 0) {
        t = 0;
      } else {
        fail_[static_cast<std::size_t>(t)] = 0;
        queue.push_back(static_cast<std::size_t>(t));
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      dead_[u] = dead_[u] || dead_[fail_[u]];
      for (std::size_t a = 0; a < alphabet_; ++a) {
        int& t = next_[u * alphabet_ + a];
        int via_fail = next_[fail_[u] * alphabet_ + a];
        if (t < 0) {
          t = via_fail;
        } else {
          fail_[static_cast<std::size_t>(t)] = static_cast<std::size_t>(via_fail);
          queue.push_back(static_cast<std::size_t>(t));
        }
      }
    }
  }

  std::size_t size() const noexcept { return dead_.size(); }
  std::size_t alphabet() const noexcept { return alphabet_; }
  std::size_t next(std::size_t state, Letter l) const {
    return static_cast<std::size_t>(next_[state * alphabet_ + l]);
  }
  bool dead(std::size_t state) const { return dead_[state]; }

  bool accepts(const Word& w) const {
    std::size_t s = 0;
    for (Letter l : w) {
      s = next(s, l);
      if (dead_[s]) return false;
    }
    return true;
  }

 private:
  std::size_t new_node() {
    next_.resize(next_.size() + alphabet_, -1);
    dead_.push_back(false);
    fail_.push_back(0);
    return dead_.size() - 1;
  }

  std::size_t alphabet_;
  std::vector<int> next_;
  std::vector<bool> dead_;
  std::vector<std::size_t> fail_;
};

/// Number of words of each weighted degree 0..truncation avoiding the
/// patterns, by dynamic programming over automaton states.
inline std::vector<BigInt> count_normal_words(const GeneratorSet& gens,
                                              const LeadingWordAutomaton& automaton, int truncation) {
  std::size_t states = automaton.size();
  std::vector<std::vector<BigInt>> dp(static_cast<std::size_t>(truncation) + 1,
                                      std::vector<BigInt>(states, 0));
  dp[0][0] = 1;
  std::vector<BigInt> dims(static_cast<std::size_t>(truncation) + 1, 0);
  for (int d = 0; d <= truncation; ++d) {
    auto& row = dp[static_cast<std::size_t>(d)];
    for (std::size_t s = 0; s < states; ++s) {
      if (row[s] == 0) continue;
      dims[static_cast<std::size_t>(d)] += row[s];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        int e = d + gens.degree(g);
        if (e > truncation) continue;
        auto t = automaton.next(s, static_cast<Letter>(g));
        if (!automaton.dead(t)) dp[static_cast<std::size_t>(e)][t] += row[s];
      }
    }
  }
  return dims;
}

template <ExactField F>
std::vector<BigInt> algebra_dims(const GroebnerResult<F>& gb, int truncation) {
  if (truncation > gb.truncation)
    throw TruncationError("dimensions requested beyond the Groebner truncation");
  LeadingWordAutomaton automaton(gb.gens.size(), gb.leading_words());
  return count_normal_words(gb.gens, automaton, truncation);
}

/// dim A_0 .. dim A_N.
template <ExactField F>
std::vector<BigInt> algebra_dims(const Presentation<F>& pres, int truncation) {
  auto gb = groebner_truncated(pres, std::max(truncation, pres.max_relation_degree()));
  return algebra_dims(gb, truncation);
}

struct GrowthEstimate {
  enum class Kind { finite_dimensional, linear, polynomial, exponential };
  Kind kind = Kind::finite_dimensional;
  /// Polynomial degree (GK dimension) for linear and polynomial growth.
  int degree = 0;
  bool certified = false;

  std::string to_string() const {
    switch (kind) {
      case Kind::finite_dimensional: return "finite-dimensional";
      case Kind::linear: return "linear";
      case Kind::polynomial: return "polynomial(" + std::to_string(degree) + ")";
      case Kind::exponential: return "exponential";
    }
    return "unknown";
  }
};

/// Growth of the quotient algebra read off the graph of normal words of
/// length L-1 (L the longest leading word, at least 2): edges join u to v
/// when u = a s, v = s b and u b is normal. Finite dimension iff the graph
/// is acyclic; exponential iff some strongly connected component carries
/// two distinct cycles; otherwise polynomial of degree equal to the largest
/// number of cycles met by one path.
template <ExactField F>
GrowthEstimate growth_estimate(const GroebnerResult<F>& gb) {
  const std::size_t n = gb.gens.size();
  GrowthEstimate est;
  est.certified = gb.complete;
  if (n == 0) return est;
  LeadingWordAutomaton automaton(n, gb.leading_words());
  std::size_t len = static_cast<std::size_t>(std::max(2, gb.max_leading_length())) - 1;

  std::vector<Word> vertices{{}};
  std::vector<std::size_t> states{0};
  for (std::size_t l = 0; l < len; ++l) {
    std::vector<Word> next_words;
    std::vector<std::size_t> next_states;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t g = 0; g < n; ++g) {
        auto t = automaton.next(states[i], static_cast<Letter>(g));
        if (automaton.dead(t)) continue;
        Word w = vertices[i];
        w.push_back(static_cast<Letter>(g));
        next_words.push_back(std::move(w));
        next_states.push_back(t);
      }
    vertices = std::move(next_words);
    states = std::move(next_states);
  }
  std::unordered_map<Word, std::size_t, WordHash> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);

  const std::size_t V = vertices.size();
  std::vector<std::vector<std::size_t>> out(V), in(V);
  for (std::size_t i = 0; i < V; ++i)
    for (std::size_t g = 0; g < n; ++g) {
      if (automaton.dead(automaton.next(states[i], static_cast<Letter>(g)))) continue;
      Word target(vertices[i].begin() + 1, vertices[i].end());
      target.push_back(static_cast<Letter>(g));
      auto j = index.at(target);
      out[i].push_back(j);
      in[j].push_back(i);
    }

  // Kosaraju: components come out in topological order of the condensation.
  std::vector<std::size_t> order;
  std::vector<bool> seen(V, false);
  for (std::size_t s = 0; s < V; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos < out[v].size()) {
        auto w = out[v][pos++];
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(V, -1);
  int components = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = components;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : in[v])
        if (comp[w] < 0) {
          comp[w] = components;
          stack.push_back(w);
        }
    }
    ++components;
  }
  std::vector<std::size_t> comp_vertices(static_cast<std::size_t>(components), 0),
      comp_edges(static_cast<std::size_t>(components), 0);
  for (std::size_t v = 0; v < V; ++v) {
    ++comp_vertices[static_cast<std::size_t>(comp[v])];
    for (auto w : out[v])
      if (comp[w] == comp[v]) ++comp_edges[static_cast<std::size_t>(comp[v])];
  }
  std::vector<int> cycles_to(static_cast<std::size_t>(components), 0);
  int best = 0;
  // Components are numbered so that every edge goes from a lower number
  // to an equal or higher one.
  std::vector<std::vector<std::size_t>> comp_members(static_cast<std::size_t>(components));
  for (std::size_t v = 0; v < V; ++v) comp_members[static_cast<std::size_t>(comp[v])].push_back(v);
  for (int c = 0; c < components; ++c) {
    auto cu = static_cast<std::size_t>(c);
    if (comp_edges[cu] > comp_vertices[cu]) {
      est.kind = GrowthEstimate::Kind::exponential;
      est.degree = 0;
      return est;
    }
    int here = cycles_to[cu] + (comp_edges[cu] > 0 ? 1 : 0);
    best = std::max(best, here);
    for (auto v : comp_members[cu])
      for (auto w : out[v]) {
        auto cw = static_cast<std::size_t>(comp[w]);
        if (cw != cu) cycles_to[cw] = std::max(cycles_to[cw], here);
      }
  }
  est.degree = best;
  est.kind = best == 0   ? GrowthEstimate::Kind::finite_dimensional
             : best == 1 ? GrowthEstimate::Kind::linear
                         : GrowthEstimate::Kind::polynomial;
  return est;
}

}  // namespace hilbseries
