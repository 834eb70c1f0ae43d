#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbseries/resolution.hpp"

namespace hilbseries {

/// Degree bounds for presentations of the tails M^n: every M^n is generated
/// in degrees < gen_bound, and the kernel of the canonical cover is
/// generated in degrees <= rel_bound.
struct ShiftBounds {
  int gen_bound = 1;
  int rel_bound = 0;
};

/// g = max(m_0(M) + 1, m_1(A)) and r = max(m_1(M), m_2(A), g - 1), with the
/// m_i replaced by the presentation degrees that bound them.
template <ExactField F>
ShiftBounds shift_bounds(const ModulePresentation<F>& m) {
  ShiftBounds b;
  b.gen_bound = std::max(m.max_generator_degree() + 1, m.base.gens.max_degree());
  int module_rel = m.rels.empty() ? 0 : m.max_relation_degree();
  b.rel_bound = std::max({module_rel, m.base.max_relation_degree(), b.gen_bound - 1});
  return b;
}

/// The canonical cover of M^n: V_s = M_{n+s} with its normal-word basis for
/// s < g, F = V (x) A, and W_t = ker(F_t -> M_{n+t}) in RREF for t <= r.
/// Two tails with equal fingerprints are isomorphic.
template <ExactField F>
struct Fingerprint {
  std::vector<std::size_t> dim_vector;
  std::vector<Matrix<F>> relation_matrices;  // index t - 1 for t = 1..r

  bool operator==(const Fingerprint& o) const {
    return dim_vector == o.dim_vector && relation_matrices == o.relation_matrices;
  }

  std::string key() const {
    std::string out;
    for (auto d : dim_vector) out += std::to_string(d) + ",";
    for (const auto& m : relation_matrices) {
      out += "|" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (!m.field().is_zero(m(r, c)))
            out += std::to_string(r) + "." + std::to_string(c) + "=" + format_element(m.field(), m(r, c)) + ";";
    }
    return out;
  }
};

template <ExactField F>
struct ShiftedModule {
  ModulePresentation<F> source;
  int n = 0;
  ModulePresentation<F> presentation;
  ShiftBounds bounds;
  Fingerprint<F> fingerprint;
};

namespace detail {

template <ExactField F>
std::vector<GeneratorChoice> canonical_generators(const GradedModule<F>& tail, int gen_bound) {
  std::vector<GeneratorChoice> out;
  for (int s = 0; s < gen_bound; ++s)
    for (std::uint32_t b = 0; b < tail.dim(s); ++b) out.push_back({s, b});
  return out;
}

template <ExactField F>
Cover<F> canonical_cover(const GradedModule<F>& module, int n, const ShiftBounds& bounds) {
  if (n + bounds.rel_bound > module.truncation())
    throw TruncationError("shift " + std::to_string(n) + " needs the module through degree " +
                          std::to_string(n + bounds.rel_bound));
  auto tail = module.shifted(n);
  return cover(tail, canonical_generators(tail, bounds.gen_bound), bounds.rel_bound);
}

template <ExactField F>
Fingerprint<F> fingerprint_of(const GradedModule<F>& module, int n, const Cover<F>& c, const ShiftBounds& bounds) {
  Fingerprint<F> fp;
  for (int s = 0; s < bounds.gen_bound; ++s) fp.dim_vector.push_back(module.dim(n + s));
  while (!fp.dim_vector.empty() && fp.dim_vector.back() == 0) fp.dim_vector.pop_back();
  for (int t = 1; t <= bounds.rel_bound; ++t)
    fp.relation_matrices.push_back(to_dense(module.field(), c.kernel[static_cast<std::size_t>(t)], c.free.dim(t)));
  return fp;
}

}  // namespace detail

/// A presentation of M^n over the canonical generators, with the relations
/// of degree <= r that are not consequences of lower-degree ones.
template <ExactField F>
ShiftedModule<F> shift_module(const ModulePresentation<F>& m, int n, int truncation) {
  if (n < 0) throw InputError("negative shift");
  auto bounds = shift_bounds(m);
  if (truncation < n + bounds.rel_bound || truncation < m.max_relation_degree() ||
      truncation < m.base.max_relation_degree())
    throw TruncationError("truncation " + std::to_string(truncation) + " is too small for shift " +
                          std::to_string(n));
  auto algebra = make_algebra(m.base, truncation);
  auto q = quotient_module(algebra, m, truncation);
  auto c = detail::canonical_cover(q.module, n, bounds);
  const auto& k = m.base.field;
  const auto& gens = m.base.gens;

  ModulePresentation<F> p{m.base, m.name + "^" + std::to_string(n), {}, {}, {}};
  for (int s = 0; s < bounds.gen_bound; ++s)
    for (std::uint32_t b = 0; b < q.module.dim(n + s); ++b) {
      p.gen_names.push_back("v" + std::to_string(s) + "_" + std::to_string(b + 1));
      p.gen_degrees.push_back(s);
    }
  for (int t = 0; t <= bounds.rel_bound; ++t) {
    Echelon<F> generated(k, c.free.dim(t));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int prev = t - gens.degree(g);
      if (prev < 0) continue;
      for (const auto& row : c.kernel[static_cast<std::size_t>(prev)])
        generated.insert(c.free.multiply(prev, row, static_cast<Letter>(g)));
    }
    for (const auto& row : c.kernel[static_cast<std::size_t>(t)]) {
      if (!generated.insert(row)) continue;
      std::vector<std::pair<ModuleWord, typename F::Element>> terms;
      for (const auto& [col, a] : row) terms.emplace_back(c.free.module_word(t, col), a);
      p.rels.push_back(ModElement<F>::from_terms(k, p.gen_degrees, gens, terms));
    }
  }
  return {m, n, std::move(p), bounds, detail::fingerprint_of(q.module, n, c, bounds)};
}

template <ExactField F>
Fingerprint<F> fingerprint(const ShiftedModule<F>& s) {
  return s.fingerprint;
}

template <ExactField F>
struct PeriodCertificate {
  int i = 0;
  int j = 0;
  int period() const { return j - i; }
  int preperiod() const { return i; }
  RationalSeriesForm rational_form;
};

template <ExactField F>
struct PeriodResult {
  std::optional<PeriodCertificate<F>> certificate;
  int max_shift = 0;
  int truncation = 0;
  ShiftBounds bounds;
  std::vector<std::size_t> dims;  // dim M_0..M_N
  std::vector<std::string> warnings;
  std::string note;  // explanation accompanying not-found
};

/// Rational form p(z)/(1 - z^d) of a Hilbert function with
/// c_{s+d} = c_s for s >= i; a polynomial when the periodic part vanishes.
inline RationalSeriesForm periodic_form(const TruncatedSeries& s, int i, int d) {
  bool zero_tail = true;
  for (int t = i; t <= s.truncation() && zero_tail; ++t) zero_tail = s[t] == 0;
  RationalSeriesForm f;
  if (zero_tail) {
    f.numerator = trim_polynomial({s.coeffs().begin(), s.coeffs().begin() + std::min(i, s.truncation() + 1)});
    return f;
  }
  f.numerator.assign(static_cast<std::size_t>(i + d), 0);
  for (int t = 0; t < i + d; ++t) f.numerator[t] = s[t] - (t >= d ? s[t - d] : BigInt(0));
  f.numerator = trim_polynomial(std::move(f.numerator));
  f.denominator.assign(static_cast<std::size_t>(d) + 1, 0);
  f.denominator[0] = 1;
  f.denominator[static_cast<std::size_t>(d)] = -1;
  return f;
}

/// Heuristic scan length 4 * (max dim up to N) * (r + g).
inline int default_max_shift(const std::vector<std::size_t>& dims, const ShiftBounds& b) {
  std::size_t top = dims.empty() ? 1 : std::max<std::size_t>(1, *std::max_element(dims.begin(), dims.end()));
  return static_cast<int>(std::min<std::size_t>(4 * top * static_cast<std::size_t>(b.rel_bound + b.gen_bound), 1000));
}

/// Scans the tails M^0..M^S for the first pair with equal fingerprints.
template <ExactField F>
PeriodResult<F> certify_period(const ModulePresentation<F>& m, int max_shift, int truncation) {
  auto bounds = shift_bounds(m);
  if (max_shift < 0) throw InputError("negative max shift");
  if (truncation < max_shift + bounds.rel_bound + bounds.gen_bound)
    throw TruncationError("truncation " + std::to_string(truncation) + " must be at least S + r + g = " +
                          std::to_string(max_shift + bounds.rel_bound + bounds.gen_bound));
  PeriodResult<F> result;
  result.max_shift = max_shift;
  result.truncation = truncation;
  result.bounds = bounds;

  auto gb = groebner_truncated(m.base, std::max(truncation, m.base.max_relation_degree()));
  auto growth = growth_estimate(gb);
  if (growth.kind == GrowthEstimate::Kind::exponential || growth.kind == GrowthEstimate::Kind::polynomial)
    result.warnings.push_back("algebra growth is " + growth.to_string() +
                              "; modules of higher growth have no periodic Hilbert function");
  auto algebra = std::make_shared<const GradedAlgebra<F>>(m.base, std::move(gb), truncation);
  auto q = quotient_module(algebra, m, truncation);
  result.dims = q.module.dims();

  std::map<std::string, int> seen;
  for (int n = 0; n <= max_shift; ++n) {
    auto c = detail::canonical_cover(q.module, n, bounds);
    auto key = detail::fingerprint_of(q.module, n, c, bounds).key();
    auto [it, fresh] = seen.emplace(std::move(key), n);
    if (fresh) continue;
    int i = it->second, d = n - i;
    auto s = series_of(result.dims);
    for (int t = i; t + d <= truncation; ++t)
      if (s[t] != s[t + d])
        throw VerificationError("fingerprint collision at shifts " + std::to_string(i) + ", " +
                                std::to_string(n) + " contradicted in degree " + std::to_string(t));
    PeriodCertificate<F> cert{i, n, periodic_form(s, i, d)};
    if (cert.rational_form.expand(truncation) != s)
      throw VerificationError("certified rational form does not re-expand to the Hilbert function");
    result.certificate = std::move(cert);
    return result;
  }
  result.note = m.base.field.name() == "Q"
                    ? "no collision among the scanned shifts; over an infinite field no effective bound on the "
                      "period is known"
                    : "no collision among the scanned shifts; this is not a proof of non-periodicity";
  return result;
}

/// The distinct truncated series among M^0(z)..M^S(z), all cut to N - S.
template <ExactField F>
std::vector<TruncatedSeries> hilbert_series_set(const ModulePresentation<F>& m, int max_shift, int truncation) {
  if (truncation < max_shift) throw TruncationError("truncation below the shift range");
  auto algebra = make_algebra(m.base, truncation);
  auto dims = quotient_module(algebra, m, truncation).module.dims();
  int len = truncation - max_shift;
  std::vector<TruncatedSeries> out;
  for (int n = 0; n <= max_shift; ++n) {
    std::vector<std::size_t> tail(dims.begin() + n, dims.begin() + n + len + 1);
    auto s = series_of(tail);
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hilbseries
