#include <gtest/gtest.h>

#include "support.hpp"

using namespace hilbseries;
using testing_support::IdealRankOracle;
using testing_support::load_p;
using testing_support::load_q;
using testing_support::parse;

namespace {

template <ExactField F>
std::vector<std::string> basis_text(const GroebnerResult<F>& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.basis) out.push_back(format_polynomial(gb.gens, g));
  return out;
}

template <ExactField F>
void expect_matches_oracle(const Document<F>& doc, int top, const std::string& name) {
  IdealRankOracle<F> oracle(doc.algebra);
  auto dims = algebra_dims(doc.algebra, top);
  for (int d = 0; d <= top; ++d) EXPECT_EQ(dims[static_cast<std::size_t>(d)], oracle.dim(d)) << name << " degree " << d;
}

}  // namespace

TEST(Groebner, CommutingVariables) {
  auto doc = load_q("comm2.alg");
  auto gb = groebner_truncated(doc.algebra, 6);
  EXPECT_EQ(basis_text(gb), (std::vector<std::string>{"y*x - x*y"}));
  EXPECT_TRUE(gb.complete);
}

TEST(Groebner, FreeAlgebra) {
  auto gb = groebner_truncated(load_q("free2.alg").algebra, 5);
  EXPECT_TRUE(gb.basis.empty());
  EXPECT_TRUE(gb.complete);
}

TEST(Groebner, MonomialLinearGrowth) {
  auto gb = groebner_truncated(load_p("linear.alg").algebra, 6);
  EXPECT_EQ(basis_text(gb), (std::vector<std::string>{"y^2", "y*x"}));
  EXPECT_TRUE(gb.complete);
}

TEST(Groebner, JordanPlaneStaysFinite) {
  auto gb = groebner_truncated(load_q("jordan.alg").algebra, 8);
  EXPECT_EQ(gb.basis.size(), 1u);
  EXPECT_TRUE(gb.complete);
}

TEST(Groebner, IncompleteBasisReportsPendingDegree) {
  // the leading word yxy overlaps itself in degree 5
  auto doc = parse("field Q\ngen x:1 y:1\nrel x*y*x - y*x*y\n", RationalField{});
  auto gb = groebner_truncated(doc.algebra, 3);
  EXPECT_FALSE(gb.complete);
  ASSERT_TRUE(gb.first_pending_degree.has_value());
  EXPECT_GT(*gb.first_pending_degree, 3);
  EXPECT_THROW(groebner_truncated(doc.algebra, 2), TruncationError);
}

TEST(NormalForm, Examples) {
  auto comm = load_q("comm2.alg");
  auto gb = groebner_truncated(comm.algebra, 4);
  const auto& g = comm.algebra.gens;
  auto yx = NcPolynomial<RationalField>::monomial(RationalField{}, g, {1, 0});
  EXPECT_EQ(format_polynomial(g, normal_form(yx, gb)), "x*y");
  auto xy = NcPolynomial<RationalField>::monomial(RationalField{}, g, {0, 1});
  EXPECT_EQ(normal_form(xy, gb), xy);

  auto lin = load_p("linear.alg");
  auto gb2 = groebner_truncated(lin.algebra, 4);
  auto yy = NcPolynomial<PrimeField>::monomial(PrimeField(2), lin.algebra.gens, {1, 1});
  EXPECT_TRUE(normal_form(yy, gb2).is_zero());
}

TEST(AlgebraDims, Examples) {
  EXPECT_EQ(algebra_dims(load_q("free2.alg").algebra, 4), (std::vector<BigInt>{1, 2, 4, 8, 16}));
  EXPECT_EQ(algebra_dims(load_q("comm2.alg").algebra, 4), (std::vector<BigInt>{1, 2, 3, 4, 5}));
  EXPECT_EQ(algebra_dims(load_p("linear.alg").algebra, 4), (std::vector<BigInt>{1, 2, 2, 2, 2}));
  EXPECT_EQ(algebra_dims(load_q("weighted.alg").algebra, 6), (std::vector<BigInt>{1, 1, 2, 2, 2, 2, 2}));
}

TEST(AlgebraDims, AgreeWithBruteForceOracle) {
  for (const char* name : {"free1.alg", "free2.alg", "comm2.alg", "comm3.alg", "x2.alg", "x2_deg2.alg", "linear_q.alg",
                           "weighted.alg", "jordan.alg"})
    expect_matches_oracle(load_q(name), 6, name);
  for (const char* name : {"free3.alg", "linear.alg", "yxy_x2.alg", "yxy_trunc.alg"})
    expect_matches_oracle(load_p(name), 6, name);
  expect_matches_oracle(load_p("quadratic_gf3.alg", 3), 6, "quadratic_gf3.alg");
}

TEST(AlgebraDims, RandomQuadraticAlgebrasAgreeWithOracle) {
  std::mt19937_64 rng(5);
  PrimeField k(3);
  std::uniform_int_distribution<int> coef(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::string text = "field GF(3)\ngen x:1 y:1\n";
    for (int r = 0; r < 2; ++r) {
      text += "rel 0*x^2";
      const char* words[] = {"x^2", "x*y", "y*x", "y^2"};
      for (const char* w : words) text += " + " + std::to_string(coef(rng)) + "*" + w;
      text += "\n";
    }
    Document<PrimeField> doc = [&] {
      try {
        return parse(text, k);
      } catch (const InputError&) {
        return parse("field GF(3)\ngen x:1 y:1\n", k);
      }
    }();
    expect_matches_oracle(doc, 5, text);
  }
}

TEST(ModuleDims, Examples) {
  auto doc = parse(
      "field Q\ngen x:1\nmodule F\nmgen e:0\nmodule C\nmgen e:0\nmrel e*x\n", RationalField{});
  EXPECT_EQ(module_dims(doc.module("F"), 4).dims, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(module_dims(doc.module("C"), 4).dims, (std::vector<std::size_t>{1, 0, 0, 0, 0}));

  // right module A/yA: yA is spanned by y alone, so x^{d-1} y survives for d >= 2
  auto lin = parse("field GF(2)\ngen x:1 y:1\nrel y^2; y*x\nmodule M\nmgen e:0\nmrel e*y\n", PrimeField(2));
  auto m = module_dims(lin.module("M"), 5);
  EXPECT_EQ(m.dims, (std::vector<std::size_t>{1, 1, 2, 2, 2, 2}));
  ASSERT_EQ(m.bases[3].size(), 2u);
  EXPECT_EQ(m.bases[3][0].word, (Word{0, 0, 1}));
  EXPECT_EQ(m.bases[3][1].word, (Word{0, 0, 0}));

  // killing x instead leaves e and e y only
  auto cut = parse("field GF(2)\ngen x:1 y:1\nrel y^2; y*x\nmodule M\nmgen e:0\nmrel e*x\n", PrimeField(2));
  EXPECT_EQ(module_dims(cut.module("M"), 5).dims, (std::vector<std::size_t>{1, 1, 0, 0, 0, 0}));
}

TEST(ModuleDims, ShiftedGenerators) {
  auto doc = load_q("modules.alg");
  EXPECT_EQ(module_dims(doc.module("K"), 4).dims, (std::vector<std::size_t>{1, 0, 0, 0, 0}));
  EXPECT_EQ(module_dims(doc.module("S"), 4).dims, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(module_dims(doc.module("T"), 4).dims, (std::vector<std::size_t>{1, 2, 2, 2, 2}));
}

TEST(Growth, Examples) {
  auto lin = growth_estimate(groebner_truncated(load_p("linear.alg").algebra, 6));
  EXPECT_EQ(lin.kind, GrowthEstimate::Kind::linear);
  EXPECT_TRUE(lin.certified);
  EXPECT_EQ(growth_estimate(groebner_truncated(load_q("free2.alg").algebra, 6)).kind,
            GrowthEstimate::Kind::exponential);
  auto fin = growth_estimate(groebner_truncated(load_q("x2.alg").algebra, 6));
  EXPECT_EQ(fin.kind, GrowthEstimate::Kind::finite_dimensional);
  auto comm = growth_estimate(groebner_truncated(load_q("comm3.alg").algebra, 6));
  EXPECT_EQ(comm.to_string(), "polynomial(3)");
  EXPECT_EQ(growth_estimate(groebner_truncated(load_p("yxy_x2.alg").algebra, 6)).kind, GrowthEstimate::Kind::linear);
}

TEST(MinimizeRelations, DropsConsequences) {
  auto doc = parse("field Q\ngen x:1 y:1\nrel x^2\nrel x^3; x*y*x + x^3\n", RationalField{});
  // x^3 follows from x^2; x*y*x does not
  EXPECT_EQ(doc.algebra.rels.size(), 2u);
}
