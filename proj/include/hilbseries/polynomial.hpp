#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbseries/field.hpp"
#include "hilbseries/word.hpp"

namespace hilbseries {

/// Homogeneous element of the free algebra. Terms are kept sorted with the
/// leading (largest) word first. For words of equal weighted degree the
/// deglex order coincides with plain lexicographic comparison of letters.
template <ExactField F>
class NcPolynomial {
 public:
  using Element = typename F::Element;
  struct Term {
    Word word;
    Element coeff;
    bool operator==(const Term&) const = default;
  };

  explicit NcPolynomial(F field) : field_(std::move(field)) {}

  /// Collects like terms and drops zeros; throws InputError when the
  /// surviving words have different degrees.
  static NcPolynomial from_terms(F field, const GeneratorSet& gens,
                                 std::vector<std::pair<Word, Element>> terms) {
    std::map<Word, Element, std::greater<>> acc;
    for (auto& [w, c] : terms) {
      auto [it, fresh] = acc.try_emplace(std::move(w), c);
      if (!fresh) it->second = field.add(it->second, c);
    }
    NcPolynomial p(std::move(field));
    for (auto& [w, c] : acc) {
      if (p.field_.is_zero(c)) continue;
      int d = gens.degree(w);
      if (p.degree_ >= 0 && d != p.degree_) throw InputError("inhomogeneous polynomial");
      p.degree_ = d;
      p.terms_.push_back({w, c});
    }
    // map order is by letters only; with mixed degrees rejected above this is deglex
    return p;
  }

  /// Builds from terms already known to be homogeneous of `degree`, sorted
  /// descending and free of zeros.
  static NcPolynomial from_sorted(F field, int degree, std::vector<Term> terms) {
    NcPolynomial p(std::move(field));
    p.degree_ = terms.empty() ? -1 : degree;
    p.terms_ = std::move(terms);
    return p;
  }

  static NcPolynomial monomial(F field, const GeneratorSet& gens, Word w) {
    auto one = field.one();
    int d = gens.degree(w);
    return from_sorted(field, d, {{std::move(w), one}});
  }

  const F& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Weighted degree; -1 for the zero polynomial.
  int degree() const noexcept { return degree_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Word& leading_word() const { return terms_.front().word; }
  const Element& leading_coeff() const { return terms_.front().coeff; }

  NcPolynomial monic() const {
    if (is_zero()) return *this;
    auto scale = field_.inv(leading_coeff());
    return scaled(scale);
  }

  NcPolynomial scaled(const Element& a) const {
    if (field_.is_zero(a)) return NcPolynomial(field_);
    NcPolynomial out = *this;
    for (auto& t : out.terms_) t.coeff = field_.mul(t.coeff, a);
    return out;
  }

  bool operator==(const NcPolynomial& o) const {
    return field_ == o.field_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  F field_;
  int degree_ = -1;
  std::vector<Term> terms_;
};

template <ExactField F>
NcPolynomial<F> linear_combination(const NcPolynomial<F>& a, const typename F::Element& ca,
                                   const NcPolynomial<F>& b, const typename F::Element& cb) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  const F& k = a.field();
  if (a.is_zero()) return b.scaled(cb);
  if (b.is_zero()) return a.scaled(ca);
  if (a.degree() != b.degree()) throw InputError("sum of polynomials of different degrees");
  std::vector<typename NcPolynomial<F>::Term> out;
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].word > y[j].word)) {
      auto c = k.mul(ca, x[i].coeff);
      if (!k.is_zero(c)) out.push_back({x[i].word, c});
      ++i;
    } else if (i == x.size() || y[j].word > x[i].word) {
      auto c = k.mul(cb, y[j].coeff);
      if (!k.is_zero(c)) out.push_back({y[j].word, c});
      ++j;
    } else {
      auto c = k.add(k.mul(ca, x[i].coeff), k.mul(cb, y[j].coeff));
      if (!k.is_zero(c)) out.push_back({x[i].word, c});
      ++i;
      ++j;
    }
  }
  return NcPolynomial<F>::from_sorted(k, a.degree(), std::move(out));
}

template <ExactField F>
NcPolynomial<F> operator+(const NcPolynomial<F>& a, const NcPolynomial<F>& b) {
  return linear_combination(a, a.field().one(), b, a.field().one());
}

template <ExactField F>
NcPolynomial<F> operator-(const NcPolynomial<F>& a, const NcPolynomial<F>& b) {
  return linear_combination(a, a.field().one(), b, a.field().neg(a.field().one()));
}

/// Product in the free algebra. Degrees add.
template <ExactField F>
NcPolynomial<F> multiply(const NcPolynomial<F>& p, const NcPolynomial<F>& q) {
  if (!(p.field() == q.field())) throw FieldMismatch();
  const F& k = p.field();
  if (p.is_zero() || q.is_zero()) return NcPolynomial<F>(k);
  std::map<Word, typename F::Element, std::greater<>> acc;
  for (const auto& s : p.terms())
    for (const auto& t : q.terms()) {
      auto c = k.mul(s.coeff, t.coeff);
      auto [it, fresh] = acc.try_emplace(concat(s.word, t.word), c);
      if (!fresh) it->second = k.add(it->second, c);
    }
  std::vector<typename NcPolynomial<F>::Term> terms;
  for (auto& [w, c] : acc)
    if (!k.is_zero(c)) terms.push_back({w, c});
  return NcPolynomial<F>::from_sorted(k, p.degree() + q.degree(), std::move(terms));
}

/// u * p * v for words u, v.
template <ExactField F>
NcPolynomial<F> sandwich(const GeneratorSet& gens, const Word& u, const NcPolynomial<F>& p,
                         const Word& v) {
  std::vector<typename NcPolynomial<F>::Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) terms.push_back({concat(concat(u, t.word), v), t.coeff});
  // prefixing and suffixing fixed words preserves the order of equal-degree words
  return NcPolynomial<F>::from_sorted(p.field(), p.degree() + gens.degree(u) + gens.degree(v),
                                      std::move(terms));
}

template <ExactField F>
std::string format_polynomial(const GeneratorSet& gens, const NcPolynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const F& k = p.field();
  for (const auto& t : p.terms()) {
    Rational c = k.to_rational(t.coeff);
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.word.empty()) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += format_word(gens, t.word);
  }
  return out;
}

/// A generator index of a free module together with a word: the basis
/// element e_j * w.
struct ModuleWord {
  std::size_t gen = 0;
  Word word;
  bool operator==(const ModuleWord&) const = default;
};

/// Module order within one degree: earlier generators are larger, then the
/// word order. Returns true when a is strictly larger than b.
inline bool module_word_greater(const ModuleWord& a, const ModuleWord& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.word > b.word;
}

/// Homogeneous element of a free right module sum_j e_j A over the free
/// algebra, terms sorted leading first.
template <ExactField F>
class ModElement {
 public:
  using Element = typename F::Element;
  struct Term {
    ModuleWord mword;
    Element coeff;
    bool operator==(const Term&) const = default;
  };

  explicit ModElement(F field) : field_(std::move(field)) {}

  static ModElement from_terms(F field, const std::vector<int>& gen_degrees, const GeneratorSet& gens,
                               std::vector<std::pair<ModuleWord, Element>> terms) {
    auto greater = [](const ModuleWord& a, const ModuleWord& b) { return module_word_greater(a, b); };
    std::map<ModuleWord, Element, decltype(greater)> acc(greater);
    for (auto& [mw, c] : terms) {
      auto [it, fresh] = acc.try_emplace(std::move(mw), c);
      if (!fresh) it->second = field.add(it->second, c);
    }
    ModElement e(std::move(field));
    for (auto& [mw, c] : acc) {
      if (e.field_.is_zero(c)) continue;
      int d = gen_degrees[mw.gen] + gens.degree(mw.word);
      if (e.degree_ >= 0 && d != e.degree_) throw InputError("inhomogeneous module element");
      e.degree_ = d;
      e.terms_.push_back({mw, c});
    }
    return e;
  }

  const F& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept { return degree_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const ModuleWord& leading() const { return terms_.front().mword; }

  ModElement monic() const {
    if (is_zero()) return *this;
    ModElement out = *this;
    auto scale = field_.inv(terms_.front().coeff);
    for (auto& t : out.terms_) t.coeff = field_.mul(t.coeff, scale);
    return out;
  }

  bool operator==(const ModElement& o) const {
    return field_ == o.field_ && degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  F field_;
  int degree_ = -1;
  std::vector<Term> terms_;
};

template <ExactField F>
std::string format_module_element(const std::vector<std::string>& gen_names, const GeneratorSet& gens,
                                  const ModElement<F>& e) {
  if (e.is_zero()) return "0";
  std::string out;
  const F& k = e.field();
  for (const auto& t : e.terms()) {
    Rational c = k.to_rational(t.coeff);
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (c != 1) out += c.get_str() + "*";
    out += gen_names[t.mword.gen];
    if (!t.mword.word.empty()) out += "*" + format_word(gens, t.mword.word);
  }
  return out;
}

}  // namespace hilbseries
