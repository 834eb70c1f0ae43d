#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hilbseries/families.hpp"

namespace hilbseries {

// ---------------------------------------------------------------------------
// Untyped syntax tree

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct RawFactor {
  std::string name;
  int power = 1;
  SourcePos pos;
};

struct RawTerm {
  Rational coeff = 1;
  std::vector<RawFactor> factors;
  SourcePos pos;
};

struct RawPoly {
  std::vector<RawTerm> terms;
  SourcePos pos;
};

struct RawGenerator {
  std::string name;
  int degree = 0;
  SourcePos pos;
};

struct RawModule {
  std::string name;
  SourcePos pos;
  std::vector<RawGenerator> mgens;
  std::vector<RawPoly> mrels;
};

struct RawIdeal {
  std::string name;
  SourcePos pos;
  std::vector<RawPoly> generators;
};

struct RawWitness {
  std::string ideal, j1, j2;
  int t = 0;
  RawPoly x;
  SourcePos pos;
};

struct RawDocument {
  std::optional<FieldSpec> field;
  std::vector<RawGenerator> gens;
  std::vector<RawPoly> rels;
  std::vector<RawModule> modules;
  std::vector<RawIdeal> ideals;
  std::vector<RawWitness> witnesses;
};

namespace detail {

class LineCursor {
 public:
  LineCursor(const std::string& text, int line) : text_(&text), line_(line) {}
  void rewind(std::size_t offset) { i_ = offset; }

  SourcePos pos() const { return {line_, static_cast<int>(i_) + 1}; }
  void skip_space() {
    while (i_ < text_->size() && std::isspace(static_cast<unsigned char>((*text_)[i_]))) ++i_;
  }
  bool at_end() {
    skip_space();
    return i_ >= text_->size();
  }
  char peek() {
    skip_space();
    return i_ < text_->size() ? (*text_)[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) {
    skip_space();
    throw ParseError(msg, line_, static_cast<int>(i_) + 1);
  }

  bool at_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string identifier() {
    if (!at_identifier()) fail("expected an identifier");
    std::size_t b = i_;
    while (i_ < text_->size() && (std::isalnum(static_cast<unsigned char>((*text_)[i_])) || (*text_)[i_] == '_')) ++i_;
    return text_->substr(b, i_ - b);
  }
  bool at_number() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  BigInt integer() {
    if (!at_number()) fail("expected a number");
    std::size_t b = i_;
    while (i_ < text_->size() && std::isdigit(static_cast<unsigned char>((*text_)[i_]))) ++i_;
    return BigInt(text_->substr(b, i_ - b));
  }
  int small_integer() {
    auto p = pos();
    BigInt v = integer();
    if (!v.fits_sint_p() || v > 100000) throw ParseError("number too large", p.line, p.column);
    return static_cast<int>(v.get_si());
  }
  std::string rest() {
    skip_space();
    return text_->substr(i_);
  }
  std::size_t offset() const { return i_; }

 private:
  const std::string* text_;
  int line_;
  std::size_t i_ = 0;
};

inline RawTerm parse_term(LineCursor& in) {
  RawTerm t;
  t.pos = in.pos();
  bool need_factor = true;
  if (in.at_number()) {
    BigInt num = in.integer();
    BigInt den = 1;
    if (in.accept('/')) {
      auto p = in.pos();
      den = in.integer();
      if (den == 0) throw ParseError("zero denominator", p.line, p.column);
    }
    t.coeff = Rational(num, den);
    t.coeff.canonicalize();
    need_factor = in.accept('*');
  }
  if (!need_factor) return t;
  do {
    RawFactor f;
    f.pos = in.pos();
    f.name = in.identifier();
    if (in.accept('^')) {
      auto p = in.pos();
      f.power = in.small_integer();
      if (f.power < 1) throw ParseError("exponent must be positive", p.line, p.column);
    }
    t.factors.push_back(std::move(f));
  } while (in.accept('*'));
  return t;
}

/// poly := ['+'|'-'] term (('+'|'-') term)*, stopping before ';', ',', ')'.
inline RawPoly parse_poly(LineCursor& in) {
  RawPoly p;
  p.pos = in.pos();
  bool negative = false;
  if (in.accept('-'))
    negative = true;
  else
    in.accept('+');
  while (true) {
    auto t = parse_term(in);
    if (negative) t.coeff = -t.coeff;
    p.terms.push_back(std::move(t));
    if (in.accept('+'))
      negative = false;
    else if (in.accept('-'))
      negative = true;
    else
      break;
  }
  char c = in.peek();
  if (c != '\0' && c != ';' && c != ',' && c != ')') in.fail(std::string("unexpected '") + c + "'");
  return p;
}

inline std::vector<RawPoly> parse_poly_list(LineCursor& in) {
  std::vector<RawPoly> out;
  while (!in.at_end()) {
    if (in.accept(';')) continue;
    out.push_back(parse_poly(in));
    if (!in.at_end()) in.expect(';');
  }
  return out;
}

inline std::vector<RawGenerator> parse_generators(LineCursor& in, bool allow_zero) {
  std::vector<RawGenerator> out;
  while (!in.at_end()) {
    RawGenerator g;
    g.pos = in.pos();
    g.name = in.identifier();
    in.expect(':');
    auto p = in.pos();
    bool negative = in.accept('-');
    g.degree = in.small_integer();
    if (negative) g.degree = -g.degree;
    if (g.degree < (allow_zero ? 0 : 1))
      throw ParseError(allow_zero ? "module generator degree must be nonnegative"
                                  : "generator '" + g.name + "' must have positive degree (degree-0 generator)",
                       p.line, p.column);
    out.push_back(std::move(g));
  }
  if (out.empty()) in.fail("expected at least one generator");
  return out;
}

}  // namespace detail

/// Parses the line-oriented presentation format. Only syntax is checked
/// here; names and degrees are resolved by build_document.
inline RawDocument parse_raw(const std::string& text) {
  RawDocument doc;
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  enum class Block { none, rel, mrel } block = Block::none;
  while (std::getline(lines, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    detail::LineCursor in(line, number);
    if (in.at_end()) continue;
    auto start = in.pos();
    std::string keyword;
    if (in.at_identifier()) {
      auto save = in.offset();
      keyword = in.identifier();
      static const std::set<std::string> keywords{"field", "gen", "rel", "module", "mgen", "mrel", "ideal", "wit"};
      if (!keywords.count(keyword)) {
        in.rewind(save);
        keyword.clear();
      }
    }
    if (keyword.empty()) {
      if (block == Block::rel) {
        for (auto& p : detail::parse_poly_list(in)) doc.rels.push_back(std::move(p));
        continue;
      }
      if (block == Block::mrel) {
        for (auto& p : detail::parse_poly_list(in)) doc.modules.back().mrels.push_back(std::move(p));
        continue;
      }
      throw ParseError("expected a keyword (field, gen, rel, module, mgen, mrel, ideal, wit)", start.line,
                       start.column);
    }
    block = Block::none;
    if (keyword == "field") {
      if (doc.field) throw ParseError("field declared twice", start.line, start.column);
      auto p = in.pos();
      auto name = in.identifier();
      if (name == "Q") {
        doc.field = FieldSpec::rationals();
      } else if (name == "GF") {
        in.expect('(');
        auto vp = in.pos();
        auto ch = in.integer();
        in.expect(')');
        if (!ch.fits_ulong_p() || ch >= PrimeField::kMaxCharacteristic || !is_prime(ch.get_ui()))
          throw ParseError("GF(" + ch.get_str() + "): characteristic must be a prime below 65536", vp.line,
                           vp.column);
        doc.field = FieldSpec::prime(static_cast<std::uint32_t>(ch.get_ui()));
      } else {
        throw ParseError("unknown field '" + name + "' (use Q or GF(p))", p.line, p.column);
      }
      if (!in.at_end()) in.fail("unexpected text after the field");
    } else if (keyword == "gen") {
      for (auto& g : detail::parse_generators(in, false)) doc.gens.push_back(std::move(g));
    } else if (keyword == "rel") {
      for (auto& p : detail::parse_poly_list(in)) doc.rels.push_back(std::move(p));
      block = Block::rel;
    } else if (keyword == "module") {
      RawModule m;
      m.pos = in.pos();
      m.name = in.identifier();
      if (!in.at_end()) in.fail("unexpected text after the module name");
      doc.modules.push_back(std::move(m));
    } else if (keyword == "mgen" || keyword == "mrel") {
      if (doc.modules.empty()) throw ParseError(keyword + " outside a module block", start.line, start.column);
      if (keyword == "mgen") {
        for (auto& g : detail::parse_generators(in, true)) doc.modules.back().mgens.push_back(std::move(g));
      } else {
        for (auto& p : detail::parse_poly_list(in)) doc.modules.back().mrels.push_back(std::move(p));
        block = Block::mrel;
      }
    } else if (keyword == "ideal") {
      RawIdeal ideal;
      ideal.pos = in.pos();
      ideal.name = in.identifier();
      in.expect('=');
      if (in.at_number()) {
        auto p = in.pos();
        if (in.integer() != 0) throw ParseError("expected 0 or a parenthesized generator list", p.line, p.column);
      } else {
        in.expect('(');
        do ideal.generators.push_back(detail::parse_poly(in));
        while (in.accept(','));
        in.expect(')');
      }
      if (!in.at_end()) in.fail("unexpected text after the ideal");
      doc.ideals.push_back(std::move(ideal));
    } else if (keyword == "wit") {
      RawWitness w;
      w.pos = start;
      w.ideal = in.identifier();
      w.j1 = in.identifier();
      w.j2 = in.identifier();
      w.t = in.small_integer();
      w.x = detail::parse_poly(in);
      if (!in.at_end()) in.fail("unexpected text after the witness");
      doc.witnesses.push_back(std::move(w));
    }
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Typed documents

template <ExactField F>
struct Document {
  F field;
  Presentation<F> algebra;             // normalized
  std::vector<std::string> eliminated;  // generators removed by linear relations
  std::vector<ModulePresentation<F>> modules;
  std::vector<std::pair<std::string, std::vector<NcPolynomial<F>>>> ideals;
  std::vector<WitnessTriple<F>> witnesses;

  const ModulePresentation<F>& module(const std::string& name) const {
    for (const auto& m : modules)
      if (m.name == name) return m;
    throw InputError("no module named '" + name + "'");
  }
};

namespace detail {

template <ExactField F>
typename F::Element convert_coefficient(const F& k, const Rational& c, const SourcePos& pos) {
  try {
    return k.from_rational(c);
  } catch (const InputError& e) {
    throw ParseError(e.what(), pos.line, pos.column);
  }
}

template <ExactField F>
std::vector<std::pair<Word, typename F::Element>> convert_terms(const F& k, const GeneratorSet& gens,
                                                                const RawPoly& raw) {
  std::vector<std::pair<Word, typename F::Element>> terms;
  for (const auto& t : raw.terms) {
    Word w;
    for (const auto& f : t.factors) {
      auto letter = gens.find(f.name);
      if (!letter) throw ParseError("unknown generator '" + f.name + "'", f.pos.line, f.pos.column);
      w.insert(w.end(), static_cast<std::size_t>(f.power), *letter);
    }
    terms.emplace_back(std::move(w), convert_coefficient(k, t.coeff, t.pos));
  }
  return terms;
}

template <ExactField F>
NcPolynomial<F> convert_poly(const F& k, const GeneratorSet& gens, const RawPoly& raw) {
  try {
    return NcPolynomial<F>::from_terms(k, gens, convert_terms(k, gens, raw));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(e.what(), raw.pos.line, raw.pos.column);
  }
}

template <ExactField F>
ModElement<F> convert_module_element(const F& k, const GeneratorSet& gens, const std::vector<std::string>& mgens,
                                     const std::vector<int>& mdegrees, const RawPoly& raw) {
  std::vector<std::pair<ModuleWord, typename F::Element>> terms;
  for (const auto& t : raw.terms) {
    if (t.factors.empty())
      throw ParseError("a module relation term must start with a module generator", t.pos.line, t.pos.column);
    const auto& head = t.factors.front();
    auto it = std::find(mgens.begin(), mgens.end(), head.name);
    if (it == mgens.end())
      throw ParseError("unknown module generator '" + head.name + "'", head.pos.line, head.pos.column);
    if (head.power != 1) throw ParseError("module generator raised to a power", head.pos.line, head.pos.column);
    Word w;
    for (std::size_t i = 1; i < t.factors.size(); ++i) {
      const auto& f = t.factors[i];
      auto letter = gens.find(f.name);
      if (!letter) throw ParseError("unknown generator '" + f.name + "'", f.pos.line, f.pos.column);
      w.insert(w.end(), static_cast<std::size_t>(f.power), *letter);
    }
    terms.emplace_back(ModuleWord{static_cast<std::size_t>(it - mgens.begin()), std::move(w)},
                       convert_coefficient(k, t.coeff, t.pos));
  }
  try {
    return ModElement<F>::from_terms(k, mdegrees, gens, terms);
  } catch (const InputError& e) {
    throw ParseError(e.what(), raw.pos.line, raw.pos.column);
  }
}

/// Replaces every occurrence of letter g in p by `value` (a polynomial in
/// the other letters) and renumbers letters above g.
template <ExactField F>
NcPolynomial<F> substitute(const GeneratorSet& new_gens, const NcPolynomial<F>& p, Letter g,
                           const NcPolynomial<F>& value) {
  const F& k = p.field();
  std::vector<std::pair<Word, typename F::Element>> acc;
  for (const auto& t : p.terms()) {
    // expand the word as a product of polynomials in the new generators
    std::vector<std::pair<Word, typename F::Element>> partial{{Word{}, t.coeff}};
    for (auto l : t.word) {
      std::vector<std::pair<Word, typename F::Element>> next;
      for (const auto& [w, c] : partial) {
        if (l == g) {
          for (const auto& vt : value.terms()) next.emplace_back(concat(w, vt.word), k.mul(c, vt.coeff));
        } else {
          Word v = w;
          v.push_back(l > g ? static_cast<Letter>(l - 1) : l);
          next.emplace_back(std::move(v), c);
        }
      }
      partial = std::move(next);
    }
    acc.insert(acc.end(), partial.begin(), partial.end());
  }
  return NcPolynomial<F>::from_terms(k, new_gens, std::move(acc));
}

template <ExactField F>
ModElement<F> substitute(const GeneratorSet& old_gens, const GeneratorSet& new_gens, const std::vector<int>& mdegrees,
                         const ModElement<F>& e, Letter g, const NcPolynomial<F>& value) {
  const F& k = e.field();
  std::vector<std::pair<ModuleWord, typename F::Element>> acc;
  for (const auto& t : e.terms()) {
    auto poly = NcPolynomial<F>::from_sorted(k, old_gens.degree(t.mword.word), {{t.mword.word, t.coeff}});
    auto image = substitute(new_gens, poly, g, value);
    for (const auto& s : image.terms())
      acc.emplace_back(ModuleWord{t.mword.gen, s.word}, s.coeff);
  }
  return ModElement<F>::from_terms(k, mdegrees, new_gens, std::move(acc));
}

/// Monic, linearly independent module relations (RREF per degree).
template <ExactField F>
std::vector<ModElement<F>> normalize_module_relations(const F& k, const std::vector<int>& mdegrees,
                                                      const GeneratorSet& gens, const std::vector<ModElement<F>>& rels) {
  std::map<int, std::vector<const ModElement<F>*>> by_degree;
  for (const auto& r : rels)
    if (!r.is_zero()) by_degree[r.degree()].push_back(&r);
  std::vector<ModElement<F>> out;
  for (const auto& [d, list] : by_degree) {
    std::vector<ModuleWord> words;
    for (const auto* r : list)
      for (const auto& t : r->terms()) words.push_back(t.mword);
    std::sort(words.begin(), words.end(), module_word_greater);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    auto column = [&](const ModuleWord& w) {
      return static_cast<std::uint32_t>(std::lower_bound(words.begin(), words.end(), w, module_word_greater) -
                                        words.begin());
    };
    Echelon<F> e(k, static_cast<std::uint32_t>(words.size()));
    for (const auto* r : list) {
      SparseVec<F> v;
      for (const auto& t : r->terms()) v.emplace_back(column(t.mword), t.coeff);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      e.insert(v);
    }
    for (const auto& row : e.rref()) {
      std::vector<std::pair<ModuleWord, typename F::Element>> terms;
      for (const auto& [c, a] : row) terms.emplace_back(words[c], a);
      out.push_back(ModElement<F>::from_terms(k, mdegrees, gens, std::move(terms)));
    }
  }
  return out;
}

}  // namespace detail

/// Resolves names, converts coefficients into the field and normalizes:
/// relations with a single-letter term eliminate that generator, the
/// remaining relations are minimized, module relations are brought to RREF.
template <ExactField F>
Document<F> build_document(const RawDocument& raw, const F& k) {
  GeneratorSet gens;
  for (const auto& g : raw.gens) {
    try {
      gens.add(g.name, g.degree);
    } catch (const InputError& e) {
      throw ParseError(e.what(), g.pos.line, g.pos.column);
    }
  }
  Document<F> doc{k, {k, gens, {}}, {}, {}, {}, {}};
  std::vector<NcPolynomial<F>> rels;
  for (const auto& r : raw.rels) rels.push_back(detail::convert_poly(k, gens, r));

  struct PendingModule {
    std::string name;
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<ModElement<F>> rels;
  };
  std::vector<PendingModule> modules;
  std::set<std::string> module_names;
  for (const auto& m : raw.modules) {
    if (!module_names.insert(m.name).second)
      throw ParseError("module '" + m.name + "' defined twice", m.pos.line, m.pos.column);
    if (m.mgens.empty()) throw ParseError("module '" + m.name + "' has no mgen line", m.pos.line, m.pos.column);
    PendingModule pm{m.name, {}, {}, {}};
    for (const auto& g : m.mgens) {
      if (gens.find(g.name) || std::find(pm.names.begin(), pm.names.end(), g.name) != pm.names.end())
        throw ParseError("module generator name '" + g.name + "' clashes with another generator", g.pos.line,
                         g.pos.column);
      pm.names.push_back(g.name);
      pm.degrees.push_back(g.degree);
    }
    int min_degree = *std::min_element(pm.degrees.begin(), pm.degrees.end());
    for (const auto& r : m.mrels) {
      auto e = detail::convert_module_element(k, gens, pm.names, pm.degrees, r);
      if (!e.is_zero() && e.degree() < min_degree + 1)
        throw ParseError("module relation of degree " + std::to_string(e.degree()) +
                             " is below the minimal generator degree + 1",
                         r.pos.line, r.pos.column);
      pm.rels.push_back(std::move(e));
    }
    modules.push_back(std::move(pm));
  }
  std::vector<std::pair<std::string, std::vector<NcPolynomial<F>>>> ideals;
  std::set<std::string> ideal_names;
  for (const auto& i : raw.ideals) {
    if (!ideal_names.insert(i.name).second)
      throw ParseError("ideal '" + i.name + "' defined twice", i.pos.line, i.pos.column);
    std::vector<NcPolynomial<F>> g;
    for (const auto& p : i.generators) g.push_back(detail::convert_poly(k, gens, p));
    ideals.emplace_back(i.name, std::move(g));
  }
  std::vector<WitnessTriple<F>> witnesses;
  for (const auto& w : raw.witnesses) {
    for (const auto* n : {&w.ideal, &w.j1, &w.j2})
      if (!ideal_names.count(*n)) throw ParseError("unknown ideal '" + *n + "' in witness", w.pos.line, w.pos.column);
    witnesses.push_back({w.ideal, w.j1, w.j2, w.t, detail::convert_poly(k, gens, w.x)});
  }

  // eliminate generators occurring alone in a relation
  while (true) {
    std::size_t which = rels.size();
    Letter letter = 0;
    for (std::size_t i = 0; i < rels.size() && which == rels.size(); ++i)
      for (const auto& t : rels[i].terms())
        if (t.word.size() == 1 && (which == rels.size() || t.word[0] > letter)) {
          which = i;
          letter = t.word[0];
        }
    if (which == rels.size()) break;
    const auto& r = rels[which];
    typename F::Element c = k.zero();
    std::vector<std::pair<Word, typename F::Element>> rest;
    for (const auto& t : r.terms()) {
      if (t.word.size() == 1 && t.word[0] == letter)
        c = t.coeff;
      else
        rest.emplace_back(t.word, t.coeff);
    }
    auto scale = k.neg(k.inv(c));
    for (auto& [w, a] : rest) a = k.mul(a, scale);
    // the value may still mention `letter` only if it is not a single letter
    auto value_old = NcPolynomial<F>::from_terms(k, gens, rest);
    for (const auto& t : value_old.terms())
      if (std::find(t.word.begin(), t.word.end(), letter) != t.word.end())
        throw InputError("cannot eliminate generator '" + gens.name(letter) + "'");
    GeneratorSet reduced = gens;
    reduced.erase(letter);
    // value expressed over the reduced generator set
    std::vector<std::pair<Word, typename F::Element>> renumbered;
    for (const auto& t : value_old.terms()) {
      Word w;
      for (auto l : t.word) w.push_back(l > letter ? static_cast<Letter>(l - 1) : l);
      renumbered.emplace_back(std::move(w), t.coeff);
    }
    auto value = NcPolynomial<F>::from_terms(k, reduced, std::move(renumbered));
    doc.eliminated.push_back(gens.name(letter));
    std::vector<NcPolynomial<F>> next;
    for (std::size_t i = 0; i < rels.size(); ++i)
      if (i != which) next.push_back(detail::substitute(reduced, rels[i], letter, value));
    rels = std::move(next);
    for (auto& m : modules)
      for (auto& e : m.rels) e = detail::substitute(gens, reduced, m.degrees, e, letter, value);
    for (auto& [name, list] : ideals)
      for (auto& p : list) p = detail::substitute(reduced, p, letter, value);
    for (auto& w : witnesses) w.x = detail::substitute(reduced, w.x, letter, value);
    gens = std::move(reduced);
  }

  doc.algebra = minimize_relations(Presentation<F>{k, gens, rels});
  for (auto& m : modules)
    doc.modules.push_back({doc.algebra, m.name, m.names, m.degrees,
                           detail::normalize_module_relations(k, m.degrees, gens, m.rels)});
  doc.ideals = std::move(ideals);
  doc.witnesses = std::move(witnesses);
  return doc;
}

inline RawDocument read_raw_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto raw = parse_raw(buf.str());
  if (!raw.field) throw ParseError("missing field declaration", 1, 1);
  if (raw.gens.empty()) throw ParseError("missing gen declaration", 1, 1);
  return raw;
}

inline RawDocument parse_document_text(const std::string& text) {
  auto raw = parse_raw(text);
  if (!raw.field) throw ParseError("missing field declaration", 1, 1);
  if (raw.gens.empty()) throw ParseError("missing gen declaration", 1, 1);
  return raw;
}

/// Renders a document in the input format; parsing the output reproduces
/// the same normalized document.
template <ExactField F>
std::string pretty_print(const Document<F>& doc) {
  std::string out = "field " + doc.field.name() + "\n";
  const auto& gens = doc.algebra.gens;
  if (gens.size()) {
    out += "gen";
    for (std::size_t g = 0; g < gens.size(); ++g) out += " " + gens.name(g) + ":" + std::to_string(gens.degree(g));
    out += "\n";
  }
  for (const auto& r : doc.algebra.rels) out += "rel " + format_polynomial(gens, r) + "\n";
  for (const auto& m : doc.modules) {
    out += "module " + m.name + "\nmgen";
    for (std::size_t j = 0; j < m.gen_names.size(); ++j)
      out += " " + m.gen_names[j] + ":" + std::to_string(m.gen_degrees[j]);
    out += "\n";
    for (const auto& r : m.rels) out += "mrel " + format_module_element(m.gen_names, gens, r) + "\n";
  }
  for (const auto& [name, list] : doc.ideals) {
    out += "ideal " + name + " = ";
    if (list.empty()) {
      out += "0\n";
      continue;
    }
    out += "(";
    for (std::size_t i = 0; i < list.size(); ++i) out += (i ? ", " : "") + format_polynomial(gens, list[i]);
    out += ")\n";
  }
  for (const auto& w : doc.witnesses)
    out += "wit " + w.ideal + " " + w.j1 + " " + w.j2 + " " + std::to_string(w.t) + " " +
           format_polynomial(gens, w.x) + "\n";
  return out;
}

}  // namespace hilbseries
