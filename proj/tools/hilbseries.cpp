// Command-line front end: gb, hilb, resolve, period, enum, family, cmp.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hilbseries/hilbseries.hpp"

namespace {

using namespace hilbseries;
using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "hilbseries 1.0.0";
constexpr const char* kSchema = "hilbseries/1";

enum Exit { ok = 0, verification_failed = 1, input_error = 2, limit_reached = 3 };

struct Outcome {
  int code = ok;
  std::string text;
  Json outputs = Json::object();
  std::string field;
  int truncation = -1;
};

struct Common {
  bool json = false;
  std::string out;
  std::string file;
  std::string module;
  int deg = -1;
};

Json integer(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json series_json(const TruncatedSeries& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs()) a.push_back(integer(c));
  return a;
}

Json polynomial_json(const std::vector<BigInt>& p) {
  Json a = Json::array();
  for (const auto& c : p) a.push_back(integer(c));
  return a;
}

Json form_json(const RationalSeriesForm& f) {
  return Json{{"numerator", polynomial_json(f.numerator)},
              {"denominator", polynomial_json(f.denominator)},
              {"text", format_rational(f)}};
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string join(const TruncatedSeries& s) {
  std::string out;
  for (int i = 0; i <= s.truncation(); ++i) out += (i ? " " : "") + s[i].get_str();
  return out;
}

RawDocument load(const std::string& path) { return read_raw_file(path); }

template <ExactField F>
ModulePresentation<F> pick_module(const Document<F>& doc, const std::string& name) {
  if (name.empty()) throw InputError("no module selected");
  return doc.module(name);
}

void require_deg(const Common& c) {
  if (c.deg < 0) throw InputError("--deg is required");
}

// --------------------------------------------------------------------------

Outcome cmd_gb(const Common& c, bool show) {
  require_deg(c);
  auto raw = load(c.file);
  return with_field(*raw.field, [&](auto k) {
    auto doc = build_document(raw, k);
    Outcome o;
    o.field = k.name();
    o.truncation = c.deg;
    const auto& pres = doc.algebra;
    if (c.deg < pres.max_relation_degree())
      throw TruncationError("--deg " + std::to_string(c.deg) + " is below the maximal relation degree " +
                            std::to_string(pres.max_relation_degree()));
    auto gb = groebner_truncated(pres, c.deg);
    auto growth = growth_estimate(gb);
    Json words = Json::array();
    std::string word_text;
    for (const auto& w : gb.leading_words()) {
      words.push_back(format_word(pres.gens, w));
      word_text += (word_text.empty() ? "" : " ") + format_word(pres.gens, w);
    }
    o.outputs["basis_size"] = gb.basis.size();
    o.outputs["complete"] = gb.complete;
    o.outputs["first_pending_degree"] = gb.first_pending_degree ? Json(*gb.first_pending_degree) : Json(nullptr);
    o.outputs["leading_words"] = words;
    o.outputs["growth"] = Json{{"kind", growth.to_string()}, {"certified", growth.certified}};
    if (!doc.eliminated.empty()) o.outputs["eliminated_generators"] = doc.eliminated;
    std::ostringstream t;
    t << "basis size: " << gb.basis.size() << "\n";
    t << "complete: " << (gb.complete ? "yes" : "no");
    if (gb.first_pending_degree) t << " (overlaps pending from degree " << *gb.first_pending_degree << ")";
    t << "\nleading words: " << (word_text.empty() ? "(none)" : word_text) << "\n";
    t << "growth: " << growth.to_string() << (growth.certified ? " (certified)" : " (uncertified)") << "\n";
    if (show) {
      Json basis = Json::array();
      for (const auto& g : gb.basis) {
        basis.push_back(format_polynomial(pres.gens, g));
        t << "  " << format_polynomial(pres.gens, g) << "\n";
      }
      o.outputs["basis"] = basis;
    }
    o.text = t.str();
    return o;
  });
}

Outcome cmd_hilb(const Common& c) {
  require_deg(c);
  auto raw = load(c.file);
  return with_field(*raw.field, [&](auto k) {
    auto doc = build_document(raw, k);
    Outcome o;
    o.field = k.name();
    o.truncation = c.deg;
    TruncatedSeries s;
    if (c.module.empty()) {
      if (c.deg < doc.algebra.max_relation_degree())
        throw TruncationError("--deg is below the maximal relation degree");
      s = series_of(algebra_dims(doc.algebra, c.deg));
    } else {
      auto m = pick_module(doc, c.module);
      if (c.deg < doc.algebra.max_relation_degree())
        throw TruncationError("--deg is below the maximal relation degree");
      s = series_of(module_dims(m, c.deg).dims);
      o.outputs["module"] = c.module;
    }
    o.outputs["dims"] = series_json(s);
    o.text = join(s) + "\n";
    return o;
  });
}

Outcome cmd_resolve(const Common& c, int imax) {
  require_deg(c);
  auto raw = load(c.file);
  return with_field(*raw.field, [&](auto k) {
    auto doc = build_document(raw, k);
    Outcome o;
    o.field = k.name();
    o.truncation = c.deg;
    ResolutionProfile p;
    if (c.module.empty()) {
      p = algebra_homology(doc.algebra, imax, c.deg);
      o.outputs["module"] = "k";
    } else {
      p = minimal_resolution(pick_module(doc, c.module), imax, c.deg);
      o.outputs["module"] = c.module;
    }
    Json tor = Json::array();
    for (const auto& row : p.tor_dims) tor.push_back(row);
    Json m = Json::array();
    for (const auto& v : p.m) m.push_back(Json{{"value", v.value}, {"status", to_string(v.status)}});
    o.outputs["tor_dims"] = tor;
    o.outputs["m"] = m;
    o.outputs["terminated"] = p.terminated;
    std::ostringstream t;
    t << "degree  ";
    for (int j = 0; j <= c.deg; ++j) t << std::setw(4) << j;
    t << "\n";
    for (std::size_t i = 0; i < p.tor_dims.size(); ++i) {
      t << "Tor_" << std::left << std::setw(4) << i << std::right;
      for (auto d : p.tor_dims[i]) t << std::setw(4) << d;
      t << "\n";
    }
    t << "m:";
    for (const auto& v : p.m) t << " " << v.to_string(c.deg);
    t << "\n";
    if (c.module.empty()) {
      o.outputs["consistent"] = p.consistent;
      if (!p.consistent) {
        t << "consistency check FAILED: " << p.consistency_note << "\n";
        o.code = verification_failed;
      }
    }
    o.text = t.str();
    return o;
  });
}

Outcome cmd_period(const Common& c, int max_shift) {
  require_deg(c);
  auto raw = load(c.file);
  return with_field(*raw.field, [&](auto k) {
    using F = decltype(k);
    auto doc = build_document(raw, k);
    Outcome o;
    o.field = k.name();
    o.truncation = c.deg;
    auto m = c.module.empty() ? regular_module(doc.algebra) : pick_module(doc, c.module);
    auto bounds = shift_bounds(m);
    int s = max_shift;
    if (s < 0) {
      int room = c.deg - bounds.rel_bound - bounds.gen_bound;
      if (room < 0)
        throw TruncationError("--deg must be at least r + g = " + std::to_string(bounds.rel_bound + bounds.gen_bound));
      auto dims = module_dims(m, c.deg).dims;
      s = std::min(default_max_shift(dims, bounds), room);
    }
    PeriodResult<F> r = certify_period(m, s, c.deg);
    o.outputs["module"] = c.module.empty() ? "A" : c.module;
    o.outputs["max_shift"] = s;
    o.outputs["gen_bound"] = bounds.gen_bound;
    o.outputs["rel_bound"] = bounds.rel_bound;
    o.outputs["dims"] = r.dims;
    o.outputs["warnings"] = r.warnings;
    std::ostringstream t;
    for (const auto& w : r.warnings) t << "warning: " << w << "\n";
    if (r.certificate) {
      const auto& cert = *r.certificate;
      o.outputs["status"] = "certified";
      o.outputs["certificate"] = Json{{"i", cert.i},
                                      {"j", cert.j},
                                      {"period", cert.period()},
                                      {"preperiod", cert.preperiod()},
                                      {"rational_form", form_json(cert.rational_form)}};
      t << "certificate: shifts " << cert.i << " and " << cert.j << " have equal presentations\n";
      t << "period d=" << cert.period() << ", preperiod " << cert.preperiod() << "\n";
      t << "M(z) = " << format_rational(cert.rational_form) << "\n";
    } else {
      o.outputs["status"] = "not-found";
      o.outputs["note"] = r.note;
      t << "not-found(" << s << "): " << r.note << "\n";
      o.code = limit_reached;
    }
    o.text = t.str();
    return o;
  });
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(cell, &used);
      if (used != cell.size()) throw std::invalid_argument(cell);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

struct EnumOptions {
  unsigned field = 2;
  int gens = 1;
  std::string gendegs;
  int reldeg = 2;
  int m3 = -1;
  std::string budget = "10000000";
  unsigned threads = 1;
  std::string mgendegs;
  int mreldeg = -1;
  int m2 = -1;
  std::string algebra;
};

Outcome cmd_enum(const Common& c, const EnumOptions& e) {
  require_deg(c);
  EnumerationConfig cfg;
  if (!is_prime(e.field) || e.field >= PrimeField::kMaxCharacteristic)
    throw InputError("--field must be a prime below 65536");
  cfg.field = FieldSpec::prime(e.field);
  cfg.gen_degrees = e.gendegs.empty() ? std::vector<int>(static_cast<std::size_t>(e.gens), 1) : parse_int_list(e.gendegs);
  if (static_cast<int>(cfg.gen_degrees.size()) != e.gens) throw InputError("--gendegs must list --gens degrees");
  for (int d : cfg.gen_degrees)
    if (d < 1) throw InputError("generator degrees must be positive");
  cfg.b = e.reldeg;
  if (e.m3 >= 0) cfg.c = e.m3;
  cfg.truncation = c.deg;
  if (cfg.budget.set_str(e.budget, 10) != 0 || cfg.budget < 0) throw InputError("--budget must be an integer");
  cfg.threads = std::max(1u, e.threads);
  Outcome o;
  o.field = cfg.field.name();
  o.truncation = c.deg;
  SeriesCensus census;
  if (e.mreldeg >= 0) {
    ModuleBounds mb;
    mb.gen_degrees = e.mgendegs.empty() ? std::vector<int>{0} : parse_int_list(e.mgendegs);
    mb.q = e.mreldeg;
    if (e.m2 >= 0) mb.r = e.m2;
    cfg.module = mb;
    std::vector<Presentation<PrimeField>> algebras;
    if (!e.algebra.empty()) {
      auto raw = load(e.algebra);
      if (!(*raw.field == cfg.field)) throw InputError("--algebra must be over " + cfg.field.name());
      algebras.push_back(build_document(raw, PrimeField(e.field)).algebra);
      o.outputs["algebra"] = e.algebra;
    } else {
      algebras = enumerate_algebras(cfg);
    }
    census = census_modules(cfg, algebras);
    o.outputs["kind"] = "modules";
  } else {
    census = census_algebras(cfg);
    o.outputs["kind"] = "algebras";
  }
  auto chains = chain_analysis(census);
  Json entries = Json::array();
  std::ostringstream t;
  t << census.entries.size() << " distinct series from " << census.enumerated.get_str() << " presentations";
  if (census.filtered_out > 0) t << " (" << census.filtered_out.get_str() << " filtered out)";
  t << "\n";
  for (const auto& entry : census.entries) {
    entries.push_back(Json{{"series", series_json(entry.series)},
                           {"count", integer(entry.count)},
                           {"sample_relations", entry.sample_relations}});
    t << std::setw(8) << entry.count.get_str() << "  " << join(entry.series) << "  [";
    for (std::size_t i = 0; i < entry.sample_relations.size(); ++i)
      t << (i ? "; " : "") << entry.sample_relations[i];
    t << "]\n";
  }
  o.outputs["enumerated"] = integer(census.enumerated);
  o.outputs["filtered_out"] = integer(census.filtered_out);
  o.outputs["distinct"] = census.entries.size();
  o.outputs["census"] = entries;
  o.outputs["chains"] = Json{{"lex_descending", chains.lex_descending},
                             {"lex_ascending", chains.lex_ascending},
                             {"coefficientwise_longest", chains.coefficientwise_chain.size()},
                             {"coefficientwise_chain", chains.coefficientwise_chain},
                             {"multiply_realized", chains.flagged}};
  t << "longest coefficientwise chain: " << chains.coefficientwise_chain.size() << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_family(const Common& c, int imax, bool search) {
  require_deg(c);
  auto raw = load(c.file);
  return with_field(*raw.field, [&](auto k) {
    using F = decltype(k);
    auto doc = build_document(raw, k);
    Outcome o;
    o.field = k.name();
    o.truncation = c.deg;
    if (doc.ideals.empty()) throw InputError("the file declares no ideals");
    auto witnesses = doc.witnesses;
    auto ctx = make_family_context(doc.algebra, doc.ideals, witnesses, c.deg);
    if (search) {
      auto found = search_witnesses(ctx);
      ctx.witnesses.insert(ctx.witnesses.end(), found.begin(), found.end());
    }
    FamilyReport report = verify_family(ctx);
    family_mi_bounds(ctx, report, imax);
    family_hilbert_rational(ctx, report);
    bool koszul = report.family_degree <= 1;
    if (koszul) koszul_poincare(ctx, report);

    std::ostringstream t;
    t << "family degree d=" << report.family_degree << (koszul ? " (Koszul family)" : "") << "\n";
    t << "distinct I(z) through degree " << c.deg << ": " << report.distinct_series << "\n";
    Json ideals = Json::array();
    bool all_good = report.verified;
    for (const auto& r : report.ideals) {
      Json j;
      j["name"] = r.name;
      j["m0"] = r.m0;
      j["axioms"] = r.axioms;
      if (r.witness) {
        const WitnessTriple<F>& w = ctx.witnesses[*r.witness];
        j["witness"] = Json{{"j1", w.j1}, {"j2", w.j2}, {"t", w.t}, {"x", format_polynomial(doc.algebra.gens, w.x)}};
      }
      j["failures"] = r.failures;
      j["series"] = series_json(r.series);
      Json m = Json::array();
      for (const auto& v : r.m) m.push_back(Json{{"value", v.value}, {"status", to_string(v.status)}});
      j["m"] = m;
      j["tor_dims"] = r.tor_dims;
      j["bound_ok"] = r.bound_ok;
      j["inductive_bound_ok"] = r.replay_ok;
      j["bound_notes"] = r.bound_notes;
      j["hilbert_ratio"] = r.hilbert_form ? form_json(*r.hilbert_form) : Json(nullptr);
      if (koszul) {
        j["poincare"] = r.poincare ? form_json(*r.poincare) : Json(nullptr);
        j["koszul_ok"] = r.koszul_ok;
        Json v = Json::array();
        for (const auto& [i, d] : r.koszul_violations) v.push_back(Json::array({i, d}));
        j["koszul_violations"] = v;
      }
      ideals.push_back(j);
      all_good = all_good && r.bound_ok && r.replay_ok && (!koszul || r.koszul_ok) && r.failures.empty();

      t << r.name << ": m0=" << r.m0 << " axioms " << (r.axioms[0] ? "1" : "-") << (r.axioms[1] ? "2" : "-")
        << (r.axioms[2] ? "3" : "-") << (r.axioms[3] ? "4" : "-") << " m:";
      for (const auto& v : r.m) t << " " << v.to_string(c.deg);
      if (r.hilbert_form) t << "  I(z)/A(z) = " << format_rational(*r.hilbert_form);
      if (koszul && r.poincare) t << "  P(z) = " << format_rational(*r.poincare);
      t << "\n";
      for (const auto& f : r.failures) t << "  FAIL " << f << "\n";
      for (const auto& n : r.bound_notes) t << "  BOUND " << n << "\n";
      for (const auto& [i, d] : r.koszul_violations) t << "  KOSZUL violation at (" << i << ", " << d << ")\n";
    }
    for (const auto& e : report.errors) t << "error: " << e << "\n";
    o.outputs["family_degree"] = report.family_degree;
    o.outputs["verified"] = report.verified;
    o.outputs["errors"] = report.errors;
    o.outputs["distinct_series"] = report.distinct_series;
    o.outputs["ideals"] = ideals;
    t << (all_good ? "verified" : "NOT verified") << "\n";
    if (!all_good) o.code = verification_failed;
    o.text = t.str();
    return o;
  });
}

TruncatedSeries read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_csv(buf.str());
}

Outcome cmd_cmp(const std::string& a_path, const std::string& b_path) {
  auto a = read_series(a_path);
  auto b = read_series(b_path);
  auto v = lex_compare(a, b);
  Outcome o;
  o.truncation = a.truncation();
  bool le = coefficientwise_leq(a, b), ge = coefficientwise_leq(b, a);
  o.outputs["verdict"] = to_string(v.order);
  o.outputs["first_difference"] = v.first_difference >= 0 ? Json(v.first_difference) : Json(nullptr);
  o.outputs["coefficientwise"] = le && ge ? "equal" : le ? "less-or-equal" : ge ? "greater-or-equal" : "incomparable";
  std::string text = to_string(v.order);
  if (v.order == LexOrder::equal_up_to_truncation)
    text += " (no difference through degree " + std::to_string(a.truncation()) + ")";
  else
    text += " (lex, first difference at degree " + std::to_string(v.first_difference) + ")";
  o.text = text + "\n";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series, resolutions and periodicity of graded algebras and modules"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_file, bool with_module) {
    sub->add_flag("--json", common.json, "Print the JSON document instead of text");
    sub->add_option("--out", common.out, "Write a run record (JSON) to this path");
    if (with_file) sub->add_option("file", common.file, "Presentation file")->required();
    if (with_module) sub->add_option("--module", common.module, "Module block to use");
  };

  bool show = false;
  auto* gb = app.add_subcommand("gb", "Truncated Groebner basis");
  add_common(gb, true, false);
  gb->add_option("--deg", common.deg, "Truncation degree N")->required();
  gb->add_flag("--show", show, "Print the basis");

  auto* hilb = app.add_subcommand("hilb", "Hilbert function of the algebra or a module");
  add_common(hilb, true, true);
  hilb->add_option("--deg", common.deg, "Truncation degree N")->required();

  int imax = 3;
  auto* resolve = app.add_subcommand("resolve", "Minimal resolution: Tor dimensions and m_i");
  add_common(resolve, true, true);
  resolve->add_option("--deg", common.deg, "Truncation degree N")->required();
  resolve->add_option("--imax", imax, "Highest homological degree")->required();

  int max_shift = -1;
  auto* period = app.add_subcommand("period", "Certify periodicity of the Hilbert function");
  add_common(period, true, true);
  period->add_option("--deg", common.deg, "Truncation degree N")->required();
  period->add_option("--max-shift", max_shift, "Largest shift S to scan");

  EnumOptions eo;
  auto* en = app.add_subcommand("enum", "Census of Hilbert series over a finite field");
  add_common(en, false, false);
  en->add_option("--field", eo.field, "Prime p of GF(p)")->required();
  en->add_option("--gens", eo.gens, "Number of algebra generators");
  en->add_option("--gendegs", eo.gendegs, "Generator degrees, comma separated");
  en->add_option("--reldeg", eo.reldeg, "Largest relation degree b");
  en->add_option("--m3", eo.m3, "Keep algebras with m_3 <= c");
  en->add_option("--deg", common.deg, "Truncation degree N")->required();
  en->add_option("--budget", eo.budget, "Largest number of presentations to enumerate");
  en->add_option("--threads", eo.threads, "Worker threads");
  en->add_option("--mgendegs", eo.mgendegs, "Module generator degrees (module census)");
  en->add_option("--mreldeg", eo.mreldeg, "Largest module relation degree q (module census)");
  en->add_option("--m2", eo.m2, "Keep modules with m_2 <= r");
  en->add_option("--algebra", eo.algebra, "Fixed algebra for the module census (file)");

  bool search = false;
  int family_imax = 3;
  auto* family = app.add_subcommand("family", "Verify a quasi-coherent family of ideals");
  add_common(family, true, false);
  family->add_option("--deg", common.deg, "Truncation degree N")->required();
  family->add_option("--imax", family_imax, "Highest homological degree");
  family->add_flag("--search-witnesses", search, "Search witnesses among the listed ideals");

  std::string a_path, b_path;
  auto* cmp = app.add_subcommand("cmp", "Compare two truncated series in the lex order");
  add_common(cmp, false, false);
  cmp->add_option("a", a_path, "First series (CSV)")->required();
  cmp->add_option("b", b_path, "Second series (CSV)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : input_error;
  }

  auto* sub = app.get_subcommands().front();
  std::string command = sub->get_name();
  Json config = Json::object();
  for (const auto* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->get_name() == "--out" || opt->get_name() == "--json" || opt->count() == 0) continue;
    auto results = opt->results();
    config[opt->get_name()] = results.size() == 1 ? Json(results.front()) : Json(results);
  }

  auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (command == "gb") outcome = cmd_gb(common, show);
    else if (command == "hilb") outcome = cmd_hilb(common);
    else if (command == "resolve") outcome = cmd_resolve(common, imax);
    else if (command == "period") outcome = cmd_period(common, max_shift);
    else if (command == "enum") outcome = cmd_enum(common, eo);
    else if (command == "family") outcome = cmd_family(common, family_imax, search);
    else outcome = cmd_cmp(a_path, b_path);
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return verification_failed;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const TruncationError& e) {
    std::cerr << "truncation: " << e.what() << "\n";
    return limit_reached;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return limit_reached;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return input_error;
  }
  double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  Json doc;
  doc["schema"] = kSchema;
  doc["command"] = command;
  doc["version"] = kVersion;
  doc["config"] = config;
  doc["field"] = outcome.field.empty() ? Json(nullptr) : Json(outcome.field);
  doc["truncation"] = outcome.truncation;
  doc["exit_code"] = outcome.code;
  doc["outputs"] = outcome.outputs;

  if (common.json)
    std::cout << doc.dump() << "\n";
  else
    std::cout << outcome.text;

  if (!common.out.empty()) {
    Json record = doc;
    record["wall_time_ms"] = elapsed;
    std::ofstream out(common.out);
    if (!out) {
      std::cerr << "cannot write '" << common.out << "'\n";
      return input_error;
    }
    out << record.dump() << "\n";
  }
  return outcome.code;
}
