#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace hilbseries;
using testing_support::random_series;

namespace {

TruncatedSeries s(std::vector<long> v) { return TruncatedSeries::of(v); }

std::vector<BigInt> poly(std::vector<long> v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

bool lex_leq(const TruncatedSeries& a, const TruncatedSeries& b) {
  return lex_compare(a, b).order != LexOrder::greater;
}

}  // namespace

TEST(Lex, Examples) {
  EXPECT_EQ(lex_compare(s({1, 2, 3}), s({1, 2, 3})).order, LexOrder::equal_up_to_truncation);
  auto v = lex_compare(s({1, 3, 0}), s({1, 2, 9}));
  EXPECT_EQ(v.order, LexOrder::greater);
  EXPECT_EQ(v.first_difference, 1);
  EXPECT_EQ(lex_compare(s({1, 2, 2}), s({1, 2, 3})).order, LexOrder::less);
  EXPECT_THROW(lex_compare(s({1, 2}), s({1, 2, 3})), InputError);
  EXPECT_EQ(to_string(LexOrder::greater), "GREATER");
}

TEST(Coefficientwise, Examples) {
  EXPECT_TRUE(coefficientwise_leq(s({1, 1, 1}), s({1, 2, 1})));
  EXPECT_FALSE(coefficientwise_leq(s({1, 3, 0}), s({1, 2, 9})));
  EXPECT_FALSE(coefficientwise_leq(s({1, 2, 9}), s({1, 3, 0})));
  EXPECT_TRUE(coefficientwise_leq(s({4, 5}), s({4, 5})));
}

TEST(Arithmetic, Examples) {
  auto inv = invert(TruncatedSeries::polynomial(poly({1, -2}), 3));
  EXPECT_EQ(inv, s({1, 2, 4, 8}));
  EXPECT_EQ(s({1, 1}) * s({1, -1}), s({1, 0}));
  EXPECT_EQ(TruncatedSeries::polynomial(poly({1, 1}), 4) * TruncatedSeries::polynomial(poly({1, -1}), 4),
            s({1, 0, -1, 0, 0}));
  auto a = s({1, 2, 3, 4, 5, 6});
  EXPECT_EQ(a * invert(a), TruncatedSeries::one(5));
  EXPECT_THROW(invert(s({2, 1})), InputError);
  EXPECT_EQ(s({1, 2, 3}) * s({1, 0}), s({1, 2}));  // truncation is the minimum
}

TEST(Csv, RoundTripAndFormats) {
  auto a = s({1, -3, 0, 12345678});
  EXPECT_EQ(from_csv(to_csv(a)), a);
  EXPECT_EQ(from_csv("1\n2\n9\n"), s({1, 2, 9}));
  EXPECT_EQ(from_csv("1, 3,0\n"), s({1, 3, 0}));
  EXPECT_EQ(from_csv("100000000000000000000000"), TruncatedSeries({BigInt("100000000000000000000000")}));
  EXPECT_THROW(from_csv(""), InputError);
  EXPECT_THROW(from_csv("1,,2"), InputError);
  EXPECT_THROW(from_csv("1,x"), InputError);
}

TEST(FitRational, PeriodicExamples) {
  auto f = fit_rational(TruncatedSeries::of(std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2, 2}), 4, 4);
  ASSERT_TRUE(f);
  EXPECT_EQ(format_rational(*f), "(1 + z)/(1 - z)");
  auto g = fit_rational(s({1, 0, 0, 0, 0, 0}), 4, 2);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->numerator, poly({1}));
  EXPECT_EQ(g->denominator, poly({1}));
  EXPECT_FALSE(fit_rational(s({1, 2, 4, 8, 16}), 4, 3));
  auto h = fit_rational(s({1, 2, 3, 1, 3, 1, 3, 1, 3, 1}), 3, 3);
  ASSERT_TRUE(h);
  EXPECT_EQ(h->denominator, poly({1, 0, -1}));
  EXPECT_EQ(h->expand(9), s({1, 2, 3, 1, 3, 1, 3, 1, 3, 1}));
}

TEST(FitRational, GeneralExamples) {
  // z(2 - z) and z/(1 - z)
  auto a = fit_rational_general(TruncatedSeries::polynomial(poly({0, 2, -1}), 10), 2, 0);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->numerator, poly({0, 2, -1}));
  EXPECT_EQ(a->denominator, poly({1}));
  auto b = fit_rational_general(s({0, 1, 1, 1, 1, 1, 1, 1}), 1, 1);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->numerator, poly({0, 1}));
  EXPECT_EQ(b->denominator, poly({1, -1}));
  auto fib = fit_rational_general(s({1, 1, 2, 3, 5, 8, 13, 21, 34}), 1, 2);
  ASSERT_TRUE(fib);
  EXPECT_EQ(fib->denominator, poly({1, -1, -1}));
  EXPECT_EQ(fib->numerator, poly({1}));
  EXPECT_FALSE(fit_rational_general(s({1, 2, 4, 8, 16, 32, 64, 128, 256, 600}), 1, 2));
  EXPECT_THROW(fit_rational_general(s({1, 1, 1}), 1, 2), InputError);
}

TEST(FitRational, FormsReexpand) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> digit(0, 4), len(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    int pre = len(rng) - 1, per = len(rng);
    std::vector<long> c;
    for (int i = 0; i < pre + per; ++i) c.push_back(digit(rng));
    while (static_cast<int>(c.size()) < 20) c.push_back(c[c.size() - static_cast<std::size_t>(per)]);
    auto series = s(c);
    auto f = fit_rational(series, pre, per);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->expand(19), series);
  }
}

TEST(Format, Rational) {
  RationalSeriesForm f{poly({0, 2, -1}), poly({1})};
  EXPECT_EQ(format_rational(f), "2*z - z^2");
  RationalSeriesForm g{poly({0}), poly({1})};
  EXPECT_EQ(format_rational(g), "0");
  RationalSeriesForm h{poly({2}), poly({1, 0, -1})};
  EXPECT_EQ(format_rational(h), "2/(1 - z^2)");
}

// Order laws over 10^4+ random series.
TEST(OrderLaws, LexIsATotalOrder) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 12000; ++trial) {
    auto a = random_series(rng, 4, 0, 2), b = random_series(rng, 4, 0, 2), c = random_series(rng, 4, 0, 2);
    auto ab = lex_compare(a, b).order, ba = lex_compare(b, a).order;
    // totality and antisymmetry
    if (ab == LexOrder::less) { EXPECT_EQ(ba, LexOrder::greater); }
    if (ab == LexOrder::greater) { EXPECT_EQ(ba, LexOrder::less); }
    if (ab == LexOrder::equal_up_to_truncation) { EXPECT_EQ(a, b); }
    // transitivity
    if (lex_leq(a, b) && lex_leq(b, c)) { EXPECT_TRUE(lex_leq(a, c)); }
    // reflexivity
    EXPECT_EQ(lex_compare(a, a).order, LexOrder::equal_up_to_truncation);
  }
}

TEST(OrderLaws, LexRefinesCoefficientwise) {
  std::mt19937_64 rng(2);
  int comparable = 0;
  for (int trial = 0; trial < 12000; ++trial) {
    auto a = random_series(rng, 5, 0, 3), b = random_series(rng, 5, 0, 3);
    if (coefficientwise_leq(a, b)) {
      ++comparable;
      EXPECT_TRUE(lex_leq(a, b));
    }
    // a <= a + (nonnegative)
    auto bump = random_series(rng, 5, 0, 2);
    EXPECT_TRUE(coefficientwise_leq(a, a + bump));
    EXPECT_TRUE(lex_leq(a, a + bump));
  }
  EXPECT_GT(comparable, 0);
}

TEST(OrderLaws, PositiveMultiplicationIsMonotone) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 12000; ++trial) {
    auto a = random_series(rng, 6, 0, 4), b = random_series(rng, 6, 0, 4);
    auto c = random_series(rng, 6, 0, 3);
    c[0] = 1 + c[0];
    auto before = lex_compare(a, b);
    auto after = lex_compare(a * c, b * c);
    EXPECT_EQ(after.order, before.order);
    if (before.order != LexOrder::equal_up_to_truncation) { EXPECT_EQ(after.first_difference, before.first_difference); }
  }
}

TEST(OrderLaws, RingIdentities) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 12000; ++trial) {
    auto a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, TruncatedSeries::zero(6));
    a[0] = trial % 2 ? 1 : -1;
    EXPECT_EQ(a * invert(a), TruncatedSeries::one(6));
  }
}

TEST(Alternating, Sum) {
  EXPECT_EQ(alternating_sum({s({1, 0, 0}), s({0, 2, 0}), s({0, 0, 1})}, 2), s({1, -2, 1}));
}
