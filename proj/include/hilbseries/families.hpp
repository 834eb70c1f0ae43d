#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hilbseries/resolution.hpp"

namespace hilbseries {

/// A homogeneous right ideal I = sum g A given by minimized generators.
template <ExactField F>
struct IdealSpec {
  std::string name;
  std::vector<NcPolynomial<F>> generators;
  int m0 = 0;

  bool is_zero() const { return generators.empty(); }
};

/// I / J1 = A / J2 [-t] through the class of x (degree t).
template <ExactField F>
struct WitnessTriple {
  std::string ideal;
  std::string j1;
  std::string j2;
  int t = 1;
  NcPolynomial<F> x;
};

/// The components I_0..I_N as RREF row lists in normal-word coordinates.
template <ExactField F>
struct IdealData {
  IdealSpec<F> spec;
  std::vector<std::vector<SparseVec<F>>> rows;
  std::vector<std::size_t> dims;

};

namespace detail {

/// x * w for every normal word w with deg x + deg w <= top.
template <ExactField F>
std::vector<std::vector<SparseVec<F>>> left_multiples(const GradedAlgebra<F>& a, const SparseVec<F>& x, int t,
                                                      int top) {
  std::vector<std::vector<SparseVec<F>>> out(static_cast<std::size_t>(std::max(top - t, -1) + 1));
  for (int e = 0; t + e <= top; ++e) {
    auto& row = out[static_cast<std::size_t>(e)];
    row.resize(a.dim(e));
    if (e == 0) {
      row[0] = x;
      continue;
    }
    for (std::uint32_t i = 0; i < a.dim(e); ++i) {
      auto letter = a.last_letter(e, i);
      int prev = e - a.gens().degree(letter);
      row[i] = a.multiply(t + prev, out[static_cast<std::size_t>(prev)][a.parent(e, i)], letter);
    }
  }
  return out;
}

template <ExactField F>
Echelon<F> echelon_of(const F& k, std::uint32_t dim, const std::vector<SparseVec<F>>& rows) {
  Echelon<F> e(k, dim);
  for (const auto& r : rows) e.insert(r);
  return e;
}

}  // namespace detail

/// Minimizes the generators of a right ideal and materializes I_0..I_N.
/// In each degree the new generators are reduced modulo the decomposable
/// part I_{<s} A and brought to RREF, which makes them canonical.
template <ExactField F>
IdealData<F> make_ideal(const GradedAlgebra<F>& a, const std::string& name,
                        const std::vector<NcPolynomial<F>>& generators) {
  const auto& k = a.field();
  int top = a.truncation();
  for (const auto& g : generators)
    if (g.degree() > top)
      throw TruncationError("ideal " + name + " has a generator of degree " + std::to_string(g.degree()) +
                            " above the truncation " + std::to_string(top));
  IdealData<F> out;
  out.spec.name = name;
  out.rows.resize(static_cast<std::size_t>(top) + 1);
  for (int s = 0; s <= top; ++s) {
    auto dim = static_cast<std::uint32_t>(a.dim(s));
    Echelon<F> decomposable(k, dim);
    for (std::size_t x = 0; x < a.gens().size(); ++x) {
      int prev = s - a.gens().degree(x);
      if (prev < 0) continue;
      for (const auto& r : out.rows[static_cast<std::size_t>(prev)])
        decomposable.insert(a.multiply(prev, r, static_cast<Letter>(x)));
    }
    Echelon<F> fresh(k, dim);
    for (const auto& g : generators)
      if (g.degree() == s) fresh.insert(decomposable.reduce(a.coordinates(g)));
    for (const auto& r : fresh.rref()) {
      out.spec.generators.push_back(a.polynomial(s, r));
      out.spec.m0 = s;
      decomposable.insert(r);
    }
    out.rows[static_cast<std::size_t>(s)] = decomposable.rref();
    out.dims.push_back(out.rows[static_cast<std::size_t>(s)].size());
  }
  return out;
}

/// The ideal as a right module: a submodule of A = e A.
template <ExactField F>
GradedModule<F> ideal_module(const AlgebraPtr<F>& a, const IdealData<F>& ideal) {
  FreeModule<F> free(a, {0}, a->truncation());
  return submodule_of_free(free, ideal.rows);
}

struct IdealReport {
  std::string name;
  int m0 = 0;
  std::optional<std::size_t> witness;           // index into the witness list
  std::array<bool, 4> axioms{true, true, true, true};
  std::vector<std::string> failures;
  TruncatedSeries series;                        // I(z)

  // filled by family_mi_bounds
  std::vector<std::vector<std::size_t>> tor_dims;
  std::vector<MValue> m;
  bool bound_ok = true;
  bool replay_ok = true;
  std::vector<std::string> bound_notes;

  // filled by family_hilbert_rational / koszul_poincare
  std::optional<RationalSeriesForm> hilbert_form;  // I(z)/A(z)
  std::optional<RationalSeriesForm> poincare;
  bool koszul_ok = true;
  std::vector<std::pair<int, int>> koszul_violations;  // (i, j)
};

struct FamilyReport {
  int truncation = 0;
  int family_degree = 0;
  bool verified = false;
  std::vector<IdealReport> ideals;  // sorted by name
  std::vector<std::string> errors;
  std::size_t distinct_series = 0;

  IdealReport& at(const std::string& name) {
    for (auto& r : ideals)
      if (r.name == name) return r;
    throw InputError("unknown ideal " + name);
  }
};

/// Everything the family operations share: the truncated algebra, the
/// materialized ideals (by name) and the witnesses in file order.
template <ExactField F>
struct FamilyContext {
  AlgebraPtr<F> algebra;
  std::map<std::string, IdealData<F>> ideals;
  std::vector<std::string> order;  // file order
  std::vector<WitnessTriple<F>> witnesses;
  int truncation = 0;

  const IdealData<F>& ideal(const std::string& name) const {
    auto it = ideals.find(name);
    if (it == ideals.end()) throw InputError("unknown ideal " + name);
    return it->second;
  }
};

template <ExactField F>
FamilyContext<F> make_family_context(const Presentation<F>& pres,
                                     const std::vector<std::pair<std::string, std::vector<NcPolynomial<F>>>>& ideals,
                                     std::vector<WitnessTriple<F>> witnesses, int truncation) {
  FamilyContext<F> ctx;
  ctx.truncation = truncation;
  ctx.algebra = make_algebra(pres, truncation);
  for (const auto& [name, gens] : ideals) {
    if (ctx.ideals.count(name)) throw InputError("ideal " + name + " defined twice");
    ctx.ideals.emplace(name, make_ideal(*ctx.algebra, name, gens));
    ctx.order.push_back(name);
  }
  for (const auto& w : witnesses) {
    for (const auto* n : {&w.ideal, &w.j1, &w.j2}) ctx.ideal(*n);
    if (w.t < 1) throw InputError("witness for " + w.ideal + ": t must be positive");
    if (w.x.is_zero() || w.x.degree() != w.t)
      throw InputError("witness for " + w.ideal + ": x must be a nonzero element of degree t = " +
                       std::to_string(w.t));
    if (w.t > truncation) throw TruncationError("witness degree above the truncation");
  }
  ctx.witnesses = std::move(witnesses);
  return ctx;
}

namespace detail {

/// Runs the four checks for one witness; returns the failed axioms with
/// messages (empty when the witness is valid through degree N).
template <ExactField F>
std::vector<std::pair<int, std::string>> check_witness(const FamilyContext<F>& ctx, const WitnessTriple<F>& w) {
  const auto& a = *ctx.algebra;
  const auto& k = a.field();
  const auto& I = ctx.ideal(w.ideal);
  const auto& J1 = ctx.ideal(w.j1);
  const auto& J2 = ctx.ideal(w.j2);
  int top = ctx.truncation;
  std::vector<std::pair<int, std::string>> failures;
  auto at = [&](int s) { return " (ideal " + w.ideal + ", degree " + std::to_string(s) + ")"; };
  std::string x = format_polynomial(a.gens(), w.x);
  if (w.x.terms().size() > 1) x = "(" + x + ")";

  // (1) J1 strictly inside I
  bool proper = false, contained = true;
  for (int s = 0; s <= top && contained; ++s) {
    auto dim = static_cast<std::uint32_t>(a.dim(s));
    auto ie = echelon_of(k, dim, I.rows[static_cast<std::size_t>(s)]);
    bool inside = true;
    for (const auto& r : J1.rows[static_cast<std::size_t>(s)]) inside = inside && ie.contains(r);
    if (!inside) {
      failures.push_back({1, w.j1 + " is not contained in " + w.ideal + at(s)});
      contained = false;
    }
    if (J1.dims[static_cast<std::size_t>(s)] != I.dims[static_cast<std::size_t>(s)]) proper = true;
  }
  if (contained && !proper) failures.push_back({1, w.j1 + " equals " + w.ideal + " through the truncation"});

  // (2) m_0(J1) <= m_0(I)
  if (J1.spec.m0 > I.spec.m0)
    failures.push_back({2, "m_0(" + w.j1 + ") = " + std::to_string(J1.spec.m0) + " exceeds m_0(" + w.ideal +
                               ") = " + std::to_string(I.spec.m0)});

  auto products = left_multiples(a, a.coordinates(w.x), w.t, top);
  for (int s = 0; s <= top; ++s) {
    auto dim = static_cast<std::uint32_t>(a.dim(s));
    auto j1 = echelon_of(k, dim, J1.rows[static_cast<std::size_t>(s)]);
    std::vector<SparseVec<F>> reduced;
    int e = s - w.t;
    if (e >= 0)
      for (const auto& v : products[static_cast<std::size_t>(e)]) reduced.push_back(j1.reduce(v));

    // (3) I_s = (J1)_s + x A_{s-t}
    auto sum = j1;
    for (const auto& v : reduced) sum.insert(v);
    auto ie = echelon_of(k, dim, I.rows[static_cast<std::size_t>(s)]);
    bool inside = true;
    for (const auto& r : sum.rref()) inside = inside && ie.contains(r);
    if (!inside || sum.rank() != ie.rank()) {
      failures.push_back({3, w.ideal + " is not " + w.j1 + " + " + x + " A" + at(s)});
      break;
    }
  }
  // (4) (J1 : x) = J2 in each degree
  for (int s = w.t; s <= top; ++s) {
    auto dim = static_cast<std::uint32_t>(a.dim(s));
    auto j1 = echelon_of(k, dim, J1.rows[static_cast<std::size_t>(s)]);
    std::vector<SparseVec<F>> reduced;
    for (const auto& v : products[static_cast<std::size_t>(s - w.t)]) reduced.push_back(j1.reduce(v));
    auto colon = sparse_kernel(k, reduced, dim);
    if (colon != J2.rows[static_cast<std::size_t>(s - w.t)]) {
      failures.push_back({4, "(" + w.j1 + " : " + x + ") differs from " + w.j2 + at(s - w.t)});
      break;
    }
  }
  return failures;
}

}  // namespace detail

/// Checks the quasi-coherence axioms for every nonzero ideal through degree
/// N. Each ideal keeps the first witness (file order) that passes.
template <ExactField F>
FamilyReport verify_family(const FamilyContext<F>& ctx) {
  FamilyReport report;
  report.truncation = ctx.truncation;
  bool has_zero = false;
  std::vector<std::string> names(ctx.order);
  std::sort(names.begin(), names.end());
  std::vector<TruncatedSeries> distinct;
  for (const auto& name : names) {
    const auto& ideal = ctx.ideal(name);
    IdealReport r;
    r.name = name;
    r.m0 = ideal.spec.m0;
    r.series = series_of(ideal.dims);
    if (std::find(distinct.begin(), distinct.end(), r.series) == distinct.end()) distinct.push_back(r.series);
    report.family_degree = std::max(report.family_degree, r.m0);
    if (ideal.spec.is_zero()) {
      has_zero = true;
      report.ideals.push_back(std::move(r));
      continue;
    }
    bool any = false;
    std::vector<std::pair<int, std::string>> first_failures;
    for (std::size_t i = 0; i < ctx.witnesses.size(); ++i) {
      if (ctx.witnesses[i].ideal != name) continue;
      auto failures = detail::check_witness(ctx, ctx.witnesses[i]);
      if (!any && first_failures.empty()) first_failures = failures;
      if (failures.empty()) {
        r.witness = i;
        first_failures.clear();
        break;
      }
      any = true;
    }
    if (!r.witness) {
      if (!any) {
        r.failures.push_back("missing witness for " + name);
        report.errors.push_back("missing witness for " + name);
        r.axioms = {false, false, false, false};
      }
      for (const auto& [axiom, msg] : first_failures) {
        r.axioms[static_cast<std::size_t>(axiom - 1)] = false;
        r.failures.push_back("axiom " + std::to_string(axiom) + ": " + msg);
      }
    }
    report.ideals.push_back(std::move(r));
  }
  if (!has_zero) report.errors.push_back("the family does not contain the zero ideal");
  report.distinct_series = distinct.size();
  report.verified = has_zero && std::all_of(report.ideals.begin(), report.ideals.end(),
                                            [](const IdealReport& r) { return r.failures.empty(); });
  return report;
}

/// Resolves every ideal to i_max, checks m_i(I) <= m_0(I) + i d and replays
/// the inductive bound dim Tor_i(I)_j <= dim Tor_i(J1)_j + dim Tor_{i-1}(J2)_{j-t}
/// (with Tor_{-1}(J2) read as k) degree by degree.
template <ExactField F>
void family_mi_bounds(const FamilyContext<F>& ctx, FamilyReport& report, int i_max) {
  int top = ctx.truncation;
  std::map<std::string, ResolutionProfile> profiles;
  for (const auto& [name, ideal] : ctx.ideals) {
    std::vector<std::optional<int>> bounds{ideal.spec.m0};
    profiles[name] = detail::resolve(ctx.algebra, ideal_module(ctx.algebra, ideal), i_max, top, bounds).profile;
  }
  int d = report.family_degree;
  for (auto& r : report.ideals) {
    const auto& p = profiles.at(r.name);
    r.tor_dims = p.tor_dims;
    r.m = p.m;
    for (int i = 0; i <= i_max; ++i)
      for (int j = r.m0 + i * d + 1; j <= top; ++j)
        if (p.tor_dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
          r.bound_ok = false;
          r.bound_notes.push_back("Tor_" + std::to_string(i) + " nonzero in degree " + std::to_string(j) +
                                  " > m_0 + " + std::to_string(i) + "d");
        }
    if (!r.witness) continue;
    const auto& w = ctx.witnesses[*r.witness];
    const auto& pj1 = profiles.at(w.j1);
    const auto& pj2 = profiles.at(w.j2);
    for (int i = 0; i <= i_max; ++i)
      for (int j = 0; j <= top; ++j) {
        std::size_t rhs = pj1.tor_dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (i == 0)
          rhs += j == w.t ? 1 : 0;
        else if (j - w.t >= 0)
          rhs += pj2.tor_dims[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - w.t)];
        if (p.tor_dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > rhs) {
          r.replay_ok = false;
          r.bound_notes.push_back("inductive bound fails for Tor_" + std::to_string(i) + " in degree " +
                                  std::to_string(j));
        }
      }
  }
}

/// I(z)/A(z) as the truncated series (I(z) A(z)^{-1}).
template <ExactField F>
TruncatedSeries ideal_ratio(const FamilyContext<F>& ctx, const std::string& name) {
  auto a = series_of(ctx.algebra->dims());
  return series_of(ctx.ideal(name).dims) * invert(a);
}

/// Fits I(z)/A(z) = p/q with deg p + deg q growing up to `cap` (default
/// about N/2), smaller denominators first.
template <ExactField F>
void family_hilbert_rational(const FamilyContext<F>& ctx, FamilyReport& report, int cap = -1) {
  int top = ctx.truncation;
  if (cap < 0) cap = std::max(0, top / 2);
  cap = std::min(cap, top - 1);
  for (auto& r : report.ideals) {
    auto s = ideal_ratio(ctx, r.name);
    r.hilbert_form.reset();
    for (int total = 0; total <= cap && !r.hilbert_form; ++total)
      for (int e = 0; e <= total && !r.hilbert_form; ++e)
        r.hilbert_form = fit_rational_general(s, total - e, e);
    if (!r.hilbert_form) r.failures.push_back("no rational form p/q with deg p + deg q <= " + std::to_string(cap));
  }
}

/// P_I(z) = p~(-z)/q(-z) with p = z^{m_0} p~, cross-checked against the
/// Tor dimensions: for a Koszul family Tor_i(I) lives in degree m_0 + i.
/// Needs family_hilbert_rational and family_mi_bounds to have run.
template <ExactField F>
void koszul_poincare(const FamilyContext<F>& ctx, FamilyReport& report) {
  if (report.family_degree > 1)
    throw InputError("Poincare series are computed for Koszul families (degree 1) only");
  int top = ctx.truncation;
  auto flip = [](std::vector<BigInt> p) {
    for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
    return p;
  };
  for (auto& r : report.ideals) {
    r.poincare.reset();
    r.koszul_violations.clear();
    r.koszul_ok = true;
    for (std::size_t i = 0; i < r.tor_dims.size(); ++i)
      for (int j = 0; j <= top; ++j)
        if (r.tor_dims[i][static_cast<std::size_t>(j)] != 0 && j != r.m0 + static_cast<int>(i)) {
          r.koszul_ok = false;
          r.koszul_violations.emplace_back(static_cast<int>(i), j);
        }
    if (!r.hilbert_form) continue;
    auto p = r.hilbert_form->numerator;
    bool zero = p.size() == 1 && p[0] == 0;
    RationalSeriesForm form;
    if (!zero) {
      for (int i = 0; i < r.m0 && i < static_cast<int>(p.size()); ++i)
        if (p[static_cast<std::size_t>(i)] != 0) {
          r.koszul_ok = false;
          r.koszul_violations.emplace_back(-1, i);
        }
      std::vector<BigInt> tail(p.begin() + std::min<std::size_t>(p.size(), static_cast<std::size_t>(r.m0)), p.end());
      form.numerator = trim_polynomial(flip(tail));
      form.denominator = trim_polynomial(flip(r.hilbert_form->denominator));
    }
    // compare with total Tor dimensions where they are exact
    int check = std::min<int>(static_cast<int>(r.tor_dims.size()) - 1, top - r.m0);
    if (check >= 0) {
      auto expansion = form.expand(std::max(check, 0));
      for (int i = 0; i <= check; ++i) {
        std::size_t total = 0;
        for (auto v : r.tor_dims[static_cast<std::size_t>(i)]) total += v;
        if (expansion[i] != static_cast<unsigned long>(total)) {
          r.koszul_ok = false;
          r.koszul_violations.emplace_back(i, -1);
        }
      }
    }
    r.poincare = form;
  }
}

/// Brute-force witness search over the family: for each nonzero ideal tries
/// J1, J2 from the family, t up to m_0(I) and x among the minimal generators
/// and the RREF basis of I_t. Intended for tiny inputs only.
template <ExactField F>
std::vector<WitnessTriple<F>> search_witnesses(const FamilyContext<F>& ctx) {
  std::vector<WitnessTriple<F>> found;
  const auto& a = *ctx.algebra;
  for (const auto& name : ctx.order) {
    const auto& I = ctx.ideal(name);
    if (I.spec.is_zero()) continue;
    bool done = false;
    for (int t = 1; t <= I.spec.m0 && !done; ++t) {
      std::vector<NcPolynomial<F>> xs;
      for (const auto& g : I.spec.generators)
        if (g.degree() == t) xs.push_back(g);
      for (const auto& row : I.rows[static_cast<std::size_t>(t)]) {
        auto p = a.polynomial(t, row);
        if (std::find(xs.begin(), xs.end(), p) == xs.end()) xs.push_back(p);
      }
      for (const auto& j1 : ctx.order) {
        if (j1 == name || done) continue;
        for (const auto& j2 : ctx.order) {
          if (done) break;
          for (const auto& x : xs) {
            WitnessTriple<F> w{name, j1, j2, t, x};
            if (detail::check_witness(ctx, w).empty()) {
              found.push_back(std::move(w));
              done = true;
              break;
            }
          }
        }
      }
    }
  }
  return found;
}

}  // namespace hilbseries
