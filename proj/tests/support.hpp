#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "hilbseries/hilbseries.hpp"

namespace testing_support {

using namespace hilbseries;

inline std::string corpus(const std::string& name) { return std::string(HILBSERIES_CORPUS_DIR) + "/" + name; }

template <ExactField F>
Document<F> load(const std::string& name, const F& k) {
  return build_document(read_raw_file(corpus(name)), k);
}

inline Document<RationalField> load_q(const std::string& name) { return load(name, RationalField{}); }
inline Document<PrimeField> load_p(const std::string& name, std::uint32_t p = 2) { return load(name, PrimeField(p)); }

template <ExactField F>
Document<F> parse(const std::string& text, const F& k) {
  return build_document(parse_document_text(text), k);
}

// Brute-force oracle: dim A_d = #words of degree d minus the rank of all
// products u*r*v landing in degree d. Shares no code with the Groebner path.
// Extra right generators g add the products g*v, giving dim (A/gA)_d.
template <ExactField F>
class IdealRankOracle {
 public:
  using Element = typename F::Element;

  explicit IdealRankOracle(const Presentation<F>& pres, std::vector<NcPolynomial<F>> right = {})
      : pres_(pres), right_(std::move(right)) {}

  std::vector<Word> words(int d) const {
    std::vector<Word> out;
    if (d == 0) return {Word{}};
    if (d < 0) return out;
    for (std::size_t g = 0; g < pres_.gens.size(); ++g)
      for (auto w : words(d - pres_.gens.degree(g))) {
        w.insert(w.begin(), static_cast<Letter>(g));
        out.push_back(std::move(w));
      }
    return out;
  }

  std::size_t dim(int d) const {
    auto basis = words(d);
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    const F& k = pres_.field;
    // rows keyed by pivot column, each a column -> coefficient map
    std::map<std::size_t, std::map<std::size_t, Element>> pivots;
    auto insert = [&](std::map<std::size_t, Element> row) {
      while (!row.empty()) {
        auto [col, c] = *row.begin();
        auto it = pivots.find(col);
        if (it == pivots.end()) {
          auto inv = k.inv(c);
          for (auto& [cc, v] : row) v = k.mul(v, inv);
          pivots.emplace(col, std::move(row));
          return;
        }
        for (const auto& [cc, v] : it->second) {
          auto& slot = row.try_emplace(cc, k.zero()).first->second;
          slot = k.sub(slot, k.mul(c, v));
          if (k.is_zero(slot)) row.erase(cc);
        }
      }
    };
    auto add_products = [&](const NcPolynomial<F>& r, bool two_sided) {
      int rest = d - r.degree();
      if (rest < 0) return;
      for (int du = 0; du <= (two_sided ? rest : 0); ++du)
        for (const auto& u : words(du))
          for (const auto& v : words(rest - du)) {
            std::map<std::size_t, Element> row;
            for (const auto& t : r.terms()) {
              Word w = u;
              w.insert(w.end(), t.word.begin(), t.word.end());
              w.insert(w.end(), v.begin(), v.end());
              auto& slot = row.try_emplace(index.at(w), k.zero()).first->second;
              slot = k.add(slot, t.coeff);
            }
            std::erase_if(row, [&](const auto& e) { return k.is_zero(e.second); });
            insert(std::move(row));
          }
    };
    for (const auto& r : pres_.rels) add_products(r, true);
    for (const auto& g : right_) add_products(g, false);
    return basis.size() - pivots.size();
  }

 private:
  Presentation<F> pres_;
  std::vector<NcPolynomial<F>> right_;
};

inline TruncatedSeries random_series(std::mt19937_64& rng, int truncation, int lo = -3, int hi = 5) {
  std::uniform_int_distribution<int> coef(lo, hi);
  std::vector<BigInt> c;
  for (int i = 0; i <= truncation; ++i) c.emplace_back(coef(rng));
  return TruncatedSeries(c);
}

}  // namespace testing_support
