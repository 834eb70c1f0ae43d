#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hilbseries/matrix.hpp"

namespace hilbseries {

/// A power series known exactly in degrees 0..truncation.
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1) {}
  explicit TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InputError("a truncated series needs at least one coefficient");
  }
  template <class Int>
    requires std::integral<Int>
  static TruncatedSeries of(const std::vector<Int>& values) {
    std::vector<BigInt> c;
    for (auto v : values) c.emplace_back(static_cast<long>(v));
    return TruncatedSeries(std::move(c));
  }
  static TruncatedSeries zero(int truncation) { return TruncatedSeries(std::vector<BigInt>(truncation + 1)); }
  static TruncatedSeries one(int truncation) {
    auto s = zero(truncation);
    s.coeffs_[0] = 1;
    return s;
  }
  /// Coefficients of a polynomial, padded or cut to the truncation.
  static TruncatedSeries polynomial(const std::vector<BigInt>& p, int truncation) {
    auto s = zero(truncation);
    for (std::size_t i = 0; i < p.size() && i <= static_cast<std::size_t>(truncation); ++i) s.coeffs_[i] = p[i];
    return s;
  }

  int truncation() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  BigInt& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

  TruncatedSeries truncated(int n) const {
    if (n > truncation()) throw TruncationError("cannot extend a truncated series");
    return TruncatedSeries({coeffs_.begin(), coeffs_.begin() + n + 1});
  }
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
  }
  /// Largest degree with a nonzero coefficient, -1 for the zero series.
  int top_degree() const {
    for (int i = truncation(); i >= 0; --i)
      if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
  }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

enum class LexOrder { less, equal_up_to_truncation, greater };

struct LexVerdict {
  LexOrder order = LexOrder::equal_up_to_truncation;
  int first_difference = -1;
};

inline std::string to_string(LexOrder o) {
  switch (o) {
    case LexOrder::less: return "LESS";
    case LexOrder::greater: return "GREATER";
    default: return "EQUAL-UP-TO-TRUNCATION";
  }
}

namespace detail {
inline void require_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation() != b.truncation())
    throw InputError("truncation mismatch: " + std::to_string(a.truncation()) + " vs " +
                     std::to_string(b.truncation()));
}
}  // namespace detail

inline LexVerdict lex_compare(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_truncation(a, b);
  for (int i = 0; i <= a.truncation(); ++i) {
    if (a[i] == b[i]) continue;
    return {a[i] > b[i] ? LexOrder::greater : LexOrder::less, i};
  }
  return {};
}

inline bool coefficientwise_leq(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_truncation(a, b);
  for (int i = 0; i <= a.truncation(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.truncation(), b.truncation());
  auto s = TruncatedSeries::zero(n);
  for (int i = 0; i <= n; ++i) s[i] = a[i] + b[i];
  return s;
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.truncation(), b.truncation());
  auto s = TruncatedSeries::zero(n);
  for (int i = 0; i <= n; ++i) s[i] = a[i] - b[i];
  return s;
}

inline TruncatedSeries operator-(const TruncatedSeries& a) { return TruncatedSeries::zero(a.truncation()) - a; }

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.truncation(), b.truncation());
  auto s = TruncatedSeries::zero(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) s[i + j] += a[i] * b[j];
  }
  return s;
}

/// Multiplicative inverse; the constant term must be a unit of Z.
inline TruncatedSeries invert(const TruncatedSeries& a) {
  if (abs(a[0]) != 1) throw InputError("series with constant term " + a[0].get_str() + " is not invertible");
  int n = a.truncation();
  auto s = TruncatedSeries::zero(n);
  s[0] = a[0];  // 1/a0 == a0 for a0 = +-1
  for (int k = 1; k <= n; ++k) {
    BigInt acc = 0;
    for (int j = 1; j <= k; ++j) acc += a[j] * s[k - j];
    s[k] = -acc * a[0];
  }
  return s;
}

/// Alternating sum sum_i (-1)^i series[i].
inline TruncatedSeries alternating_sum(const std::vector<TruncatedSeries>& series, int truncation) {
  auto s = TruncatedSeries::zero(truncation);
  for (std::size_t i = 0; i < series.size(); ++i) s = (i % 2 == 0) ? s + series[i] : s - series[i];
  return s;
}

/// p(z)/q(z) with integer coefficients and q(0) = 1.
struct RationalSeriesForm {
  std::vector<BigInt> numerator{BigInt(0)};
  std::vector<BigInt> denominator{BigInt(1)};

  TruncatedSeries expand(int truncation) const {
    return TruncatedSeries::polynomial(numerator, truncation) *
           invert(TruncatedSeries::polynomial(denominator, truncation));
  }
  bool operator==(const RationalSeriesForm&) const = default;
};

/// Drops trailing zero coefficients, keeping at least one entry.
inline std::vector<BigInt> trim_polynomial(std::vector<BigInt> p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.emplace_back(0);
  return p;
}

inline std::string format_polynomial_z(const std::vector<BigInt>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    BigInt c = abs(p[i]);
    bool negative = p[i] < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    if (mono.empty())
      out += c.get_str();
    else
      out += (c == 1 ? "" : c.get_str() + "*") + mono;
  }
  return out.empty() ? "0" : out;
}

inline std::string format_rational(const RationalSeriesForm& f) {
  auto num = trim_polynomial(f.numerator);
  auto den = trim_polynomial(f.denominator);
  auto wrap = [](const std::vector<BigInt>& p) {
    std::string s = format_polynomial_z(p);
    std::size_t terms = std::count_if(p.begin(), p.end(), [](const BigInt& c) { return c != 0; });
    return terms > 1 ? "(" + s + ")" : s;
  };
  if (den.size() == 1 && den[0] == 1) return format_polynomial_z(num);
  return wrap(num) + "/" + wrap(den);
}

/// Finds the smallest period d <= max_period and then the smallest
/// preperiod D <= max_preperiod with c_{n+d} = c_n for D <= n <= N - d.
/// At least one full period must be observed (D + 2d - 1 <= N). Returns
/// p/(1 - z^d), or a polynomial when the periodic part is zero.
inline std::optional<RationalSeriesForm> fit_rational(const TruncatedSeries& s, int max_preperiod, int max_period) {
  int n = s.truncation();
  for (int d = 1; d <= max_period; ++d) {
    int limit = std::min(max_preperiod, n - 2 * d + 1);
    for (int pre = 0; pre <= limit; ++pre) {
      bool ok = true;
      for (int i = pre; i + d <= n && ok; ++i) ok = s[i + d] == s[i];
      if (!ok) continue;
      bool zero_tail = true;
      for (int i = pre; i <= n && zero_tail; ++i) zero_tail = s[i] == 0;
      RationalSeriesForm f;
      if (zero_tail) {
        f.numerator.assign(s.coeffs().begin(), s.coeffs().begin() + pre);
        f.numerator = trim_polynomial(std::move(f.numerator));
        return f;
      }
      f.numerator.assign(static_cast<std::size_t>(pre + d), 0);
      for (int i = 0; i < pre + d; ++i) f.numerator[i] = s[i] - (i >= d ? s[i - d] : BigInt(0));
      f.numerator = trim_polynomial(std::move(f.numerator));
      f.denominator.assign(static_cast<std::size_t>(d) + 1, 0);
      f.denominator[0] = 1;
      f.denominator[static_cast<std::size_t>(d)] = -1;
      if (f.expand(n) != s) continue;  // cannot happen; kept as a guard
      return f;
    }
  }
  return std::nullopt;
}

/// Solves q*s = p mod z^{N+1} with deg p <= degp, deg q <= degq, q(0) = 1,
/// trying denominators of increasing degree. The solution is accepted only
/// if it has integer coefficients and re-expands to s.
inline std::optional<RationalSeriesForm> fit_rational_general(const TruncatedSeries& s, int degp, int degq) {
  int n = s.truncation();
  if (degp < 0 || degq < 0 || degp + degq >= n)
    throw InputError("fit_rational_general needs degp + degq < N");
  RationalField qq;
  for (int e = 0; e <= degq; ++e) {
    // unknowns q_1..q_e; equation for each n > degp: sum_{k=1}^e q_k s_{n-k} = -s_n
    std::vector<std::vector<Rational>> rows;
    for (int i = degp + 1; i <= n; ++i) {
      std::vector<Rational> row;
      for (int k = 1; k <= e; ++k) row.emplace_back(i - k >= 0 ? Rational(s[i - k]) : Rational(0));
      row.emplace_back(-Rational(s[i]));
      rows.push_back(std::move(row));
    }
    auto r = rref(Matrix<RationalField>::from_rows(qq, rows));
    if (std::find(r.pivots.begin(), r.pivots.end(), static_cast<std::size_t>(e)) != r.pivots.end()) continue;
    std::vector<Rational> q(static_cast<std::size_t>(e) + 1, Rational(0));
    q[0] = 1;
    for (std::size_t row = 0; row < r.pivots.size(); ++row) q[r.pivots[row] + 1] = r.reduced(row, e);
    bool integral = std::all_of(q.begin(), q.end(), [](const Rational& c) { return c.get_den() == 1; });
    if (!integral) continue;
    RationalSeriesForm f;
    f.denominator.clear();
    for (const auto& c : q) f.denominator.push_back(c.get_num());
    f.numerator.assign(static_cast<std::size_t>(degp) + 1, 0);
    for (int i = 0; i <= degp; ++i)
      for (int k = 0; k <= e && k <= i; ++k) f.numerator[i] += f.denominator[k] * s[i - k];
    f.numerator = trim_polynomial(std::move(f.numerator));
    f.denominator = trim_polynomial(std::move(f.denominator));
    if (f.expand(n) != s) continue;
    return f;
  }
  return std::nullopt;
}

inline std::string to_csv(const TruncatedSeries& s) {
  std::string out;
  for (int i = 0; i <= s.truncation(); ++i) {
    if (i) out += ',';
    out += s[i].get_str();
  }
  return out;
}

/// Parses integers separated by commas and/or line breaks.
inline TruncatedSeries from_csv(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::string cell;
  auto flush = [&](bool required) {
    auto b = cell.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      if (required) throw InputError("empty cell in series CSV");
      cell.clear();
      return;
    }
    auto e = cell.find_last_not_of(" \t\r");
    std::string token = cell.substr(b, e - b + 1);
    BigInt v;
    if (v.set_str(token, 10) != 0) throw InputError("not an integer in series CSV: '" + token + "'");
    coeffs.push_back(v);
    cell.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush(true);
    else if (c == '\n')
      flush(false);
    else
      cell += c;
  }
  flush(false);
  if (coeffs.empty()) throw InputError("empty series");
  return TruncatedSeries(std::move(coeffs));
}

inline TruncatedSeries series_of(const std::vector<BigInt>& dims) { return TruncatedSeries(dims); }

inline TruncatedSeries series_of(const std::vector<std::size_t>& dims) {
  std::vector<BigInt> c;
  for (auto d : dims) c.emplace_back(static_cast<unsigned long>(d));
  return TruncatedSeries(std::move(c));
}

}  // namespace hilbseries
