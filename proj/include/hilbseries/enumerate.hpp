#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hilbseries/resolution.hpp"

namespace hilbseries {

/// Number of k-dimensional subspaces of F_q^n.
inline BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) return 0;
  BigInt num = 1, den = 1, qq = q;
  for (unsigned i = 0; i < k; ++i) {
    BigInt a, b;
    mpz_pow_ui(a.get_mpz_t(), qq.get_mpz_t(), n - i);
    mpz_pow_ui(b.get_mpz_t(), qq.get_mpz_t(), i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

/// Number of subspaces of F_q^n of any dimension.
inline BigInt subspace_count(unsigned n, unsigned q) {
  BigInt total = 0;
  for (unsigned k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
  return total;
}

using Subspace = std::vector<SparseVec<PrimeField>>;  // RREF rows

/// All subspaces of F_p^n as RREF row lists: by dimension, then by pivot
/// set (lexicographic), then by the free entries counted in base p.
inline std::vector<Subspace> all_subspaces(unsigned n, const PrimeField& k) {
  const unsigned p = k.characteristic();
  std::vector<Subspace> out;
  for (unsigned dim = 0; dim <= n; ++dim) {
    std::vector<unsigned> pivots(dim);
    for (unsigned i = 0; i < dim; ++i) pivots[i] = i;
    while (true) {
      std::vector<bool> is_pivot(n, false);
      for (auto c : pivots) is_pivot[c] = true;
      std::vector<std::pair<unsigned, unsigned>> free;  // (row, column)
      for (unsigned r = 0; r < dim; ++r)
        for (unsigned c = pivots[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free.emplace_back(r, c);
      std::vector<unsigned> digits(free.size(), 0);
      while (true) {
        Subspace s(dim);
        for (unsigned r = 0; r < dim; ++r) s[r].emplace_back(pivots[r], 1);
        for (std::size_t f = 0; f < free.size(); ++f)
          if (digits[f]) s[free[f].first].emplace_back(free[f].second, digits[f]);
        for (auto& row : s) std::sort(row.begin(), row.end());
        out.push_back(std::move(s));
        std::size_t f = 0;
        while (f < digits.size() && ++digits[f] == p) digits[f++] = 0;
        if (f == digits.size()) break;
      }
      // next pivot combination
      int i = static_cast<int>(dim) - 1;
      while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - dim + static_cast<unsigned>(i)) --i;
      if (i < 0) break;
      ++pivots[static_cast<std::size_t>(i)];
      for (auto j = static_cast<std::size_t>(i) + 1; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
  return out;
}

/// Homogeneous subspaces of a graded space with the given component
/// dimensions: one RREF subspace per component. Products are indexed in
/// mixed radix with the first component varying fastest.
class SubspaceStream {
 public:
  SubspaceStream(const std::vector<std::size_t>& ambient_dims, const FieldSpec& field, const BigInt& budget)
      : field_(checked_prime(field)) {
    total_ = 1;
    for (auto d : ambient_dims) total_ *= subspace_count(static_cast<unsigned>(d), field_.characteristic());
    if (total_ > budget)
      throw BudgetError("enumeration of " + total_.get_str() + " subspaces exceeds the budget " + budget.get_str());
    for (auto d : ambient_dims) lists_.push_back(all_subspaces(static_cast<unsigned>(d), field_));
  }

  const PrimeField& field() const noexcept { return field_; }
  const BigInt& size() const noexcept { return total_; }
  std::size_t count() const { return total_.get_ui(); }

  /// The subspace with the given index, one entry per component.
  std::vector<const Subspace*> at(std::size_t index) const {
    std::vector<const Subspace*> out;
    for (const auto& list : lists_) {
      out.push_back(&list[index % list.size()]);
      index /= list.size();
    }
    return out;
  }

  void for_each(const std::function<void(std::size_t, const std::vector<const Subspace*>&)>& fn) const {
    for (std::size_t i = 0; i < count(); ++i) fn(i, at(i));
  }

 private:
  static PrimeField checked_prime(const FieldSpec& f) {
    if (f.kind != FieldSpec::Kind::prime) throw InputError("enumeration needs a finite field");
    return PrimeField(f.characteristic);
  }

  PrimeField field_;
  BigInt total_;
  std::vector<std::vector<Subspace>> lists_;
};

inline std::vector<std::vector<Subspace>> enumerate_subspaces(const std::vector<std::size_t>& ambient_dims,
                                                              const FieldSpec& field,
                                                              const BigInt& budget = BigInt(10000000)) {
  SubspaceStream stream(ambient_dims, field, budget);
  std::vector<std::vector<Subspace>> out;
  stream.for_each([&](std::size_t, const std::vector<const Subspace*>& parts) {
    std::vector<Subspace> s;
    for (const auto* p : parts) s.push_back(*p);
    out.push_back(std::move(s));
  });
  return out;
}

struct ModuleBounds {
  std::vector<int> gen_degrees{0};  // module generators
  int q = 1;                        // relations in degrees 1..q
  std::optional<int> r;             // filter m_2(M) <= r
};

struct EnumerationConfig {
  FieldSpec field = FieldSpec::prime(2);
  std::vector<int> gen_degrees{1};  // algebra generators; n = size
  int b = 2;                        // relations in degrees 2..b
  std::optional<int> c;             // filter m_3(A) <= c
  int truncation = 8;
  BigInt budget = 10000000;
  unsigned threads = 1;
  std::optional<ModuleBounds> module;

  std::size_t n() const { return gen_degrees.size(); }
};

struct CensusEntry {
  TruncatedSeries series;
  BigInt count = 0;
  std::size_t sample = 0;  // smallest enumeration index realizing the series
  std::vector<std::string> sample_relations;
};

/// Distinct truncated series with multiplicities, sorted lex-descending.
struct SeriesCensus {
  int truncation = 0;
  BigInt enumerated = 0;
  BigInt filtered_out = 0;
  std::vector<CensusEntry> entries;

  BigInt total() const {
    BigInt t = 0;
    for (const auto& e : entries) t += e.count;
    return t;
  }
};

namespace detail {

inline GeneratorSet make_generators(const std::vector<int>& degrees) {
  GeneratorSet gens;
  const std::string letters = "xyzwuvst";
  for (std::size_t i = 0; i < degrees.size(); ++i)
    gens.add(i < letters.size() ? std::string(1, letters[i]) : "x" + std::to_string(i + 1), degrees[i]);
  return gens;
}

/// Work item -> (series, sample relations) or nothing when filtered.
using CensusJob = std::function<std::optional<std::pair<TruncatedSeries, std::vector<std::string>>>(std::size_t)>;

inline SeriesCensus run_census(std::size_t count, unsigned threads, int truncation, const CensusJob& job) {
  struct Local {
    std::map<std::vector<BigInt>, CensusEntry> entries;
    std::size_t filtered = 0;
  };
  threads = std::max(1u, threads);
  std::vector<Local> locals(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < count; i += threads) {
        auto r = job(i);
        if (!r) {
          ++locals[w].filtered;
          continue;
        }
        auto [it, fresh] = locals[w].entries.try_emplace(r->first.coeffs());
        auto& e = it->second;
        if (fresh) {
          e.series = r->first;
          e.sample = i;
          e.sample_relations = std::move(r->second);
        }
        e.count += 1;
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::map<std::vector<BigInt>, CensusEntry> merged;
  SeriesCensus census;
  census.truncation = truncation;
  census.enumerated = static_cast<unsigned long>(count);
  for (auto& local : locals) {
    census.filtered_out += static_cast<unsigned long>(local.filtered);
    for (auto& [key, entry] : local.entries) {
      auto [it, fresh] = merged.try_emplace(key, entry);
      if (fresh) continue;
      it->second.count += entry.count;
      if (entry.sample < it->second.sample) {
        it->second.sample = entry.sample;
        it->second.sample_relations = entry.sample_relations;
      }
    }
  }
  for (auto& [key, entry] : merged) census.entries.push_back(std::move(entry));
  std::sort(census.entries.begin(), census.entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
    return lex_compare(a.series, b.series).order == LexOrder::greater;
  });
  return census;
}

}  // namespace detail

/// Enumerates relation spaces R = sum_{d=2..b} R_d with R_d in T(V)_d.
class AlgebraEnumeration {
 public:
  explicit AlgebraEnumeration(const EnumerationConfig& cfg)
      : cfg_(cfg), gens_(detail::make_generators(cfg.gen_degrees)), stream_(ambient(cfg, gens_), cfg.field, cfg.budget) {
    if (cfg.truncation < cfg.b) throw TruncationError("truncation below the relation degree bound");
    for (int d = 2; d <= cfg.b; ++d) words_.push_back(words_of_degree(gens_, d));
  }

  const SubspaceStream& stream() const { return stream_; }
  std::size_t size() const { return stream_.count(); }
  const GeneratorSet& gens() const { return gens_; }

  Presentation<PrimeField> presentation(std::size_t index) const {
    const auto& k = stream_.field();
    Presentation<PrimeField> p{k, gens_, {}};
    auto parts = stream_.at(index);
    for (std::size_t c = 0; c < parts.size(); ++c) {
      int d = static_cast<int>(c) + 2;
      for (const auto& row : *parts[c]) {
        std::vector<NcPolynomial<PrimeField>::Term> terms;
        for (const auto& [col, a] : row) terms.push_back({words_[c][col], a});
        p.rels.push_back(NcPolynomial<PrimeField>::from_sorted(k, d, std::move(terms)));
      }
    }
    return p;
  }

  /// Hilbert series to N, or nothing when the m_3 filter rejects.
  std::optional<TruncatedSeries> evaluate(const Presentation<PrimeField>& p) const {
    if (cfg_.c) {
      auto h = algebra_homology(p, 3, cfg_.truncation);
      const auto& tor3 = h.tor_dims[3];
      for (int j = *cfg_.c + 1; j <= cfg_.truncation; ++j)
        if (tor3[static_cast<std::size_t>(j)] != 0) return std::nullopt;
    }
    return series_of(algebra_dims(p, cfg_.truncation));
  }

 private:
  static std::vector<std::size_t> ambient(const EnumerationConfig& cfg, const GeneratorSet& gens) {
    std::vector<std::size_t> dims;
    for (int d = 2; d <= cfg.b; ++d) {
      auto n = free_component_dim(gens, d);
      if (!n.fits_ulong_p() || n > 64) throw BudgetError("component of degree " + std::to_string(d) + " is too large");
      dims.push_back(n.get_ui());
    }
    return dims;
  }

  EnumerationConfig cfg_;
  GeneratorSet gens_;
  SubspaceStream stream_;
  std::vector<std::vector<Word>> words_;
};

inline std::vector<std::string> format_relations(const Presentation<PrimeField>& p) {
  std::vector<std::string> out;
  for (const auto& r : p.rels) out.push_back(format_polynomial(p.gens, r));
  return out;
}

inline SeriesCensus census_algebras(const EnumerationConfig& cfg) {
  AlgebraEnumeration e(cfg);
  return detail::run_census(e.size(), cfg.threads, cfg.truncation,
                            [&](std::size_t i) -> std::optional<std::pair<TruncatedSeries, std::vector<std::string>>> {
                              auto p = e.presentation(i);
                              auto s = e.evaluate(p);
                              if (!s) return std::nullopt;
                              return std::make_pair(*s, format_relations(p));
                            });
}

/// The presentations kept by the algebra census (after the m_3 filter).
inline std::vector<Presentation<PrimeField>> enumerate_algebras(const EnumerationConfig& cfg) {
  AlgebraEnumeration e(cfg);
  std::vector<Presentation<PrimeField>> out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto p = e.presentation(i);
    if (!cfg.c || e.evaluate(p)) out.push_back(std::move(p));
  }
  return out;
}

/// Census of modules F / W A over each algebra, with F free on the declared
/// module generators and W running over homogeneous subspaces of F_{[1..q]}.
inline SeriesCensus census_modules(const EnumerationConfig& cfg, const std::vector<Presentation<PrimeField>>& algebras) {
  if (!cfg.module) throw InputError("module bounds missing");
  const auto& mb = *cfg.module;
  struct Item {
    AlgebraPtr<PrimeField> algebra;
    std::unique_ptr<SubspaceStream> stream;
  };
  std::vector<Item> items;
  std::vector<std::size_t> offsets{0};
  BigInt total = 0;
  for (const auto& p : algebras) {
    int top = std::max({cfg.truncation, p.max_relation_degree(), mb.q});
    auto a = std::make_shared<const GradedAlgebra<PrimeField>>(
        p, groebner_truncated(p, top), top);
    FreeModule<PrimeField> free(a, mb.gen_degrees, mb.q);
    std::vector<std::size_t> dims;
    for (int d = 1; d <= mb.q; ++d) dims.push_back(free.dim(d));
    BigInt remaining = cfg.budget - total;
    if (remaining < 1) throw BudgetError("module enumeration exceeds the budget " + cfg.budget.get_str());
    auto s = std::make_unique<SubspaceStream>(dims, cfg.field, remaining);
    total += s->size();
    offsets.push_back(offsets.back() + s->count());
    items.push_back({a, std::move(s)});
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < mb.gen_degrees.size(); ++j) names.push_back("e" + std::to_string(j + 1));
  return detail::run_census(
      offsets.back(), cfg.threads, cfg.truncation,
      [&](std::size_t index) -> std::optional<std::pair<TruncatedSeries, std::vector<std::string>>> {
        auto which = static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), index) - offsets.begin()) - 1;
        const auto& item = items[which];
        const auto& a = item.algebra;
        FreeModule<PrimeField> free(a, mb.gen_degrees, mb.q);
        ModulePresentation<PrimeField> m{a->presentation(), "M", names, mb.gen_degrees, {}};
        auto parts = item.stream->at(index - offsets[which]);
        for (std::size_t c = 0; c < parts.size(); ++c) {
          int d = static_cast<int>(c) + 1;
          for (const auto& row : *parts[c]) {
            std::vector<std::pair<ModuleWord, PrimeField::Element>> terms;
            for (const auto& [col, x] : row) terms.emplace_back(free.module_word(d, col), x);
            m.rels.push_back(ModElement<PrimeField>::from_terms(a->field(), m.gen_degrees, a->gens(), terms));
          }
        }
        if (mb.r) {
          auto prof = minimal_resolution(m, 2, cfg.truncation);
          for (int j = *mb.r + 1; j <= cfg.truncation; ++j)
            if (prof.tor_dims[2][static_cast<std::size_t>(j)] != 0) return std::nullopt;
        }
        auto q = quotient_module(a, m, cfg.truncation);
        std::vector<std::string> sample = format_relations(a->presentation());
        for (const auto& r : m.rels) sample.push_back(format_module_element(names, a->gens(), r));
        return std::make_pair(series_of(q.module.dims()), sample);
      });
}

struct ChainReport {
  std::size_t distinct = 0;
  std::size_t lex_descending = 0;  // the census itself is a strict lex chain
  std::size_t lex_ascending = 0;
  std::vector<std::size_t> coefficientwise_chain;  // indices of a longest strict chain, ascending
  std::vector<std::size_t> flagged;                // entries realized by several presentations
};

inline ChainReport chain_analysis(const SeriesCensus& census) {
  ChainReport r;
  const auto& e = census.entries;
  r.distinct = e.size();
  r.lex_descending = r.lex_ascending = e.size();
  // longest strictly increasing chain for the coefficientwise order; a < b
  // coefficientwise implies a <_lex b, so chains run from the back of the list
  std::vector<std::size_t> best(e.size(), 1), prev(e.size(), e.size());
  for (std::size_t i = e.size(); i-- > 0;)
    for (std::size_t j = e.size(); j-- > i + 1;)
      if (coefficientwise_leq(e[j].series, e[i].series) && best[j] + 1 > best[i]) {
        best[i] = best[j] + 1;
        prev[i] = j;
      }
  std::size_t start = e.size();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (start == e.size() || best[i] > best[start]) start = i;
  for (std::size_t i = start; i < e.size(); i = prev[i]) r.coefficientwise_chain.push_back(i);
  std::reverse(r.coefficientwise_chain.begin(), r.coefficientwise_chain.end());
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i].count > 1) r.flagged.push_back(i);
  return r;
}

}  // namespace hilbseries
