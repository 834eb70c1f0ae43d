#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbseries/error.hpp"
#include "hilbseries/field.hpp"

namespace hilbseries {

using Letter = std::uint16_t;
/// A word in the free monoid, as a sequence of generator indices.
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= l + 1u;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (w.size() << 1));
  }
};

inline Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline Word subword(const Word& w, std::size_t pos, std::size_t len) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
              w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

/// Named generators with positive weights, in the order that defines the
/// word order.
class GeneratorSet {
 public:
  GeneratorSet() = default;

  void add(const std::string& name, int degree) {
    if (degree < 1) throw InputError("generator '" + name + "' must have positive degree");
    if (find(name)) throw InputError("duplicate generator '" + name + "'");
    names_.push_back(name);
    degrees_.push_back(degree);
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Letter> find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Letter>(it - names_.begin());
  }

  int degree(const Word& w) const {
    int d = 0;
    for (Letter l : w) d += degrees_[l];
    return d;
  }

  int max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
  }

  /// Removes generator `g`; letters above it shift down by one.
  void erase(Letter g) {
    names_.erase(names_.begin() + g);
    degrees_.erase(degrees_.begin() + g);
  }

  bool operator==(const GeneratorSet&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

/// Degree-lexicographic order: weighted degree first, then letters left to
/// right by generator index.
inline std::strong_ordering compare_words(const GeneratorSet& gens, const Word& a, const Word& b) {
  if (auto c = gens.degree(a) <=> gens.degree(b); c != 0) return c;
  return a <=> b;
}

/// Number of words of weighted degree exactly `d`.
inline BigInt free_component_dim(const GeneratorSet& gens, int d) {
  if (d < 0) return 0;
  std::vector<BigInt> dims(static_cast<std::size_t>(d) + 1, 0);
  dims[0] = 1;
  for (int e = 1; e <= d; ++e)
    for (int g : gens.degrees())
      if (g <= e) dims[static_cast<std::size_t>(e)] += dims[static_cast<std::size_t>(e - g)];
  return dims[static_cast<std::size_t>(d)];
}

/// All words of weighted degree `d`, largest first.
inline std::vector<Word> words_of_degree(const GeneratorSet& gens, int d) {
  std::vector<std::vector<Word>> by_degree(static_cast<std::size_t>(std::max(d, 0)) + 1);
  if (d < 0) return {};
  by_degree[0].push_back({});
  for (int e = 1; e <= d; ++e)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int rest = e - gens.degree(g);
      if (rest < 0) continue;
      for (const Word& w : by_degree[static_cast<std::size_t>(rest)]) {
        Word v = w;
        v.push_back(static_cast<Letter>(g));
        by_degree[static_cast<std::size_t>(e)].push_back(std::move(v));
      }
    }
  auto out = std::move(by_degree[static_cast<std::size_t>(d)]);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Renders a word as `x*y^2*x`; the empty word is `1`.
inline std::string format_word(const GeneratorSet& gens, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += gens.name(w[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace hilbseries
