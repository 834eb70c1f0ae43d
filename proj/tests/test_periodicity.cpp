#include <gtest/gtest.h>

#include "support.hpp"

using namespace hilbseries;
using testing_support::load_p;
using testing_support::load_q;
using testing_support::parse;

namespace {

std::vector<BigInt> poly(std::vector<long> v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

// Counts words in x, y avoiding the given factors; an oracle for monomial algebras.
std::size_t count_avoiding(int d, const std::vector<std::string>& banned) {
  std::size_t n = 0;
  for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
    std::string w;
    for (int i = 0; i < d; ++i) w += (mask >> i) & 1 ? 'y' : 'x';
    bool ok = true;
    for (const auto& b : banned) ok = ok && w.find(b) == std::string::npos;
    n += ok;
  }
  return n;
}

}  // namespace

TEST(ShiftBounds, FromPresentationDegrees) {
  auto lin = regular_module(load_p("linear.alg").algebra);
  auto b = shift_bounds(lin);
  EXPECT_EQ(b.gen_bound, 1);
  EXPECT_EQ(b.rel_bound, 2);
  auto t = load_q("modules.alg").module("T");
  auto bt = shift_bounds(t);
  EXPECT_EQ(bt.gen_bound, 2);
  EXPECT_EQ(bt.rel_bound, 2);
}

TEST(ShiftModule, ZeroShiftKeepsHilbertFunction) {
  auto t = load_q("modules.alg").module("T");
  auto s = shift_module(t, 0, 12);
  EXPECT_EQ(module_dims(s.presentation, 8).dims, module_dims(t, 8).dims);
}

TEST(ShiftModule, TailOfLinearAlgebra) {
  auto a = regular_module(load_p("linear.alg").algebra);
  auto s = shift_module(a, 1, 12);
  EXPECT_EQ(s.presentation.gen_degrees, (std::vector<int>{0, 0}));
  EXPECT_EQ(s.presentation.rels.size(), 2u);
  EXPECT_EQ(module_dims(s.presentation, 8).dims, (std::vector<std::size_t>(9, 2)));
}

TEST(ShiftModule, PastTheTopIsZero) {
  auto a = regular_module(load_q("x2.alg").algebra);
  auto s = shift_module(a, 3, 10);
  EXPECT_TRUE(s.presentation.gen_names.empty());
  EXPECT_TRUE(s.fingerprint.dim_vector.empty());
  EXPECT_THROW(shift_module(a, 9, 10), TruncationError);
}

TEST(ShiftModule, ShiftedDimsMatchTails) {
  auto doc = load_q("modules.alg");
  for (const char* name : {"K", "S", "T"}) {
    const auto& m = doc.module(name);
    auto full = module_dims(m, 14).dims;
    for (int n = 0; n <= 5; ++n) {
      auto s = shift_module(m, n, 14);
      auto dims = module_dims(s.presentation, 6).dims;
      for (int t = 0; t <= 6; ++t) EXPECT_EQ(dims[t], full[n + t]) << name << " n=" << n << " t=" << t;
    }
  }
}

TEST(Fingerprint, Examples) {
  auto free = regular_module(load_q("free1.alg").algebra);
  auto f = shift_module(free, 2, 10).fingerprint;
  EXPECT_EQ(f.dim_vector, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(f.relation_matrices.empty());

  auto a = regular_module(load_p("linear.alg").algebra);
  auto f1 = fingerprint(shift_module(a, 1, 12));
  auto f2 = fingerprint(shift_module(a, 2, 12));
  auto f0 = fingerprint(shift_module(a, 0, 12));
  EXPECT_EQ(f1, f2);
  EXPECT_EQ(f1.key(), f2.key());
  EXPECT_FALSE(f0 == f1);
}

TEST(CertifyPeriod, LinearAlgebraOverBothFields) {
  auto check = [](auto doc) {
    auto r = certify_period(regular_module(doc.algebra), 10, 30);
    ASSERT_TRUE(r.certificate);
    EXPECT_EQ(r.certificate->i, 1);
    EXPECT_EQ(r.certificate->j, 2);
    EXPECT_EQ(r.certificate->period(), 1);
    EXPECT_EQ(format_rational(r.certificate->rational_form), "(1 + z)/(1 - z)");
    for (int s = 1; s <= 29; ++s) EXPECT_EQ(r.dims[s], r.dims[s + 1]);
  };
  check(load_p("linear.alg"));
  check(load_q("linear_q.alg"));
}

TEST(CertifyPeriod, FiniteDimensionalGivesPolynomial) {
  auto r = certify_period(regular_module(load_q("x2.alg").algebra), 5, 12);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->rational_form.numerator, poly({1, 1}));
  EXPECT_EQ(r.certificate->rational_form.denominator, poly({1}));
}

TEST(CertifyPeriod, NeedsEnoughTruncation) {
  auto a = regular_module(load_p("linear.alg").algebra);
  EXPECT_THROW(certify_period(a, 10, 12), TruncationError);
}

TEST(CertifyPeriod, TruncatedNonPeriodicExample) {
  // The relations of degree <= 8 of <x,y | yxy, x^2, x y^(2^n) x> present a
  // finitely presented monomial algebra whose normal words y^d, x y^(d-1),
  // y^(d-1) x, x y^(d-2) x give dim 4 from degree 7 on: it is periodic.
  auto doc = load_p("yxy_trunc.alg");
  std::vector<std::string> banned{"yxy", "xx", "xyyx", "xyyyyx"};
  auto dims = algebra_dims(doc.algebra, 14);
  for (int d = 0; d <= 14; ++d) EXPECT_EQ(dims[d], count_avoiding(d, banned)) << d;
  auto r = certify_period(regular_module(doc.algebra), 20, 40);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->i, 7);
  EXPECT_EQ(r.certificate->period(), 1);
  // adding the next relation x y^8 x moves the onset beyond degree 10
  auto more = parse("field GF(2)\ngen x:1 y:1\nrel y*x*y; x^2; x*y^2*x; x*y^4*x; x*y^8*x\n", PrimeField(2));
  auto r2 = certify_period(regular_module(more.algebra), 20, 40);
  ASSERT_TRUE(r2.certificate);
  EXPECT_EQ(r2.certificate->i, 11);
}

TEST(CertifyPeriod, NotFoundWithinSmallScan) {
  auto doc = load_p("yxy_trunc.alg");
  auto r = certify_period(regular_module(doc.algebra), 5, 30);
  EXPECT_FALSE(r.certificate);
  EXPECT_NE(r.note.find("not a proof"), std::string::npos);
  auto q = certify_period(regular_module(load_q("comm2.alg").algebra), 5, 20);
  EXPECT_FALSE(q.certificate);
  EXPECT_FALSE(q.warnings.empty());
}

TEST(CertifyPeriod, ModuleOverLinearAlgebra) {
  auto doc = parse("field GF(2)\ngen x:1 y:1\nrel y^2; y*x\nmodule M\nmgen e:0\nmrel e*y\n", PrimeField(2));
  auto r = certify_period(doc.module("M"), 10, 30);
  ASSERT_TRUE(r.certificate);
  EXPECT_EQ(r.certificate->i, 2);
  EXPECT_EQ(r.certificate->rational_form.expand(30), series_of(module_dims(doc.module("M"), 30).dims));
}

TEST(HilbertSeriesSet, Examples) {
  auto lin = hilbert_series_set(regular_module(load_p("linear.alg").algebra), 6, 16);
  EXPECT_EQ(lin.size(), 2u);
  auto fin = hilbert_series_set(regular_module(load_q("x2.alg").algebra), 6, 16);
  EXPECT_EQ(fin.size(), 3u);
  EXPECT_TRUE(fin.back().is_zero());
  EXPECT_EQ(hilbert_series_set(regular_module(load_q("free1.alg").algebra), 6, 16).size(), 1u);
}
