#include <gtest/gtest.h>

#include "support.hpp"

using namespace hilbseries;
using testing_support::IdealRankOracle;
using testing_support::load_q;
using testing_support::parse;

namespace {

std::vector<BigInt> poly(std::vector<long> v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

struct Run {
  Document<RationalField> doc;
  FamilyContext<RationalField> ctx;
  FamilyReport report;
};

Run run(Document<RationalField> doc, int top, int i_max = 3) {
  auto ctx = make_family_context(doc.algebra, doc.ideals, doc.witnesses, top);
  auto report = verify_family(ctx);
  family_mi_bounds(ctx, report, i_max);
  family_hilbert_rational(ctx, report);
  if (report.family_degree <= 1) koszul_poincare(ctx, report);
  return {std::move(doc), std::move(ctx), std::move(report)};
}

const char* kFlag =
    "field Q\ngen x:1 y:1\nrel x*y - y*x\nideal Z = 0\nideal X = (x)\nideal XY = (x, y)\n";

}  // namespace

TEST(Family, KoszulFlagOfThePolynomialRing) {
  auto r = run(load_q("koszul2.alg"), 12);
  EXPECT_TRUE(r.report.verified);
  EXPECT_EQ(r.report.family_degree, 1);
  EXPECT_TRUE(r.report.errors.empty());

  auto& x = r.report.at("X");
  EXPECT_EQ(x.m0, 1);
  EXPECT_EQ(x.axioms, (std::array<bool, 4>{true, true, true, true}));
  EXPECT_EQ(x.m[0].value, 1);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(x.m[i].value, 0);
  ASSERT_TRUE(x.hilbert_form);
  EXPECT_EQ(x.hilbert_form->numerator, poly({0, 1}));
  EXPECT_EQ(x.hilbert_form->denominator, poly({1}));
  ASSERT_TRUE(x.poincare);
  EXPECT_EQ(format_rational(*x.poincare), "1");

  auto& xy = r.report.at("XY");
  EXPECT_EQ(xy.m[0].value, 1);
  EXPECT_EQ(xy.m[1].value, 2);
  EXPECT_EQ(xy.m[2].value, 0);
  EXPECT_TRUE(xy.bound_ok);
  EXPECT_TRUE(xy.replay_ok);
  ASSERT_TRUE(xy.hilbert_form);
  EXPECT_EQ(xy.hilbert_form->numerator, poly({0, 2, -1}));
  EXPECT_EQ(xy.hilbert_form->denominator, poly({1}));
  EXPECT_EQ(format_rational(*xy.poincare), "2 + z");
  EXPECT_TRUE(xy.koszul_ok);

  auto& z = r.report.at("Z");
  EXPECT_EQ(format_rational(*z.hilbert_form), "0");
  EXPECT_EQ(format_rational(*z.poincare), "0");
  EXPECT_EQ(r.report.distinct_series, 3u);
}

TEST(Family, IdealDimsMatchOracle) {
  auto doc = load_q("koszul2.alg");
  auto ctx = make_family_context(doc.algebra, doc.ideals, doc.witnesses, 8);
  for (const auto& [name, gens] : doc.ideals) {
    IdealRankOracle<RationalField> whole(doc.algebra), quotient(doc.algebra, gens);
    const auto& dims = ctx.ideal(name).dims;
    for (int d = 0; d <= 8; ++d) EXPECT_EQ(dims[d], whole.dim(d) - quotient.dim(d)) << name << " " << d;
  }
}

TEST(Family, MissingZeroIdeal) {
  auto doc = parse("field Q\ngen x:1 y:1\nrel x*y - y*x\nideal X = (x)\nideal XY = (x, y)\nwit XY X X 1 y\n",
                   RationalField{});
  auto r = run(std::move(doc), 8);
  EXPECT_FALSE(r.report.verified);
  EXPECT_FALSE(r.report.errors.empty());
}

TEST(Family, WrongWitnessFailsAxioms) {
  auto r = run(load_q("bad_family.alg"), 10);
  EXPECT_FALSE(r.report.verified);
  auto& xy = r.report.at("XY");
  EXPECT_FALSE(xy.axioms[2]);
  EXPECT_FALSE(xy.axioms[3]);
  EXPECT_TRUE(xy.axioms[0]);
}

TEST(Family, GeneratorDegreeOfJ1MustNotExceedI) {
  auto doc = parse(std::string(kFlag) + "ideal Y2 = (y^2)\nwit X Y2 Z 1 x\nwit XY X X 1 y\nwit Y2 Z Z 2 y^2\n",
                   RationalField{});
  auto r = run(std::move(doc), 8);
  EXPECT_FALSE(r.report.verified);
  auto& x = r.report.at("X");
  EXPECT_FALSE(x.axioms[1]);
  bool mentioned = false;
  for (const auto& f : x.failures) mentioned = mentioned || f.rfind("axiom 2", 0) == 0;
  EXPECT_TRUE(mentioned);
}

TEST(Family, MissingWitness) {
  auto doc = parse(std::string(kFlag) + "wit X Z Z 1 x\n", RationalField{});
  auto r = run(std::move(doc), 8);
  EXPECT_FALSE(r.report.verified);
  EXPECT_FALSE(r.report.at("XY").failures.empty());
}

TEST(Family, WitnessSearch) {
  auto doc = parse(kFlag, RationalField{});
  auto ctx = make_family_context(doc.algebra, doc.ideals, {}, 8);
  auto found = search_witnesses(ctx);
  ASSERT_EQ(found.size(), 2u);
  ctx.witnesses = found;
  EXPECT_TRUE(verify_family(ctx).verified);
}

TEST(Family, DegreeTwoFamily) {
  auto doc = parse("field Q\ngen x:1\nideal Z = 0\nideal Q = (x^2)\nwit Q Z Z 2 x^2\n", RationalField{});
  auto ctx = make_family_context(doc.algebra, doc.ideals, doc.witnesses, 10);
  auto report = verify_family(ctx);
  EXPECT_TRUE(report.verified);
  EXPECT_EQ(report.family_degree, 2);
  family_mi_bounds(ctx, report, 3);
  EXPECT_TRUE(report.at("Q").bound_ok);
  family_hilbert_rational(ctx, report);
  EXPECT_EQ(format_rational(*report.at("Q").hilbert_form), "z^2");
  EXPECT_THROW(koszul_poincare(ctx, report), InputError);
}

TEST(Family, WitnessValidation) {
  auto doc = parse(kFlag, RationalField{});
  auto x = doc.ideals[1].second[0];
  std::vector<WitnessTriple<RationalField>> bad{{"X", "Z", "W", 1, x}};
  EXPECT_THROW(make_family_context(doc.algebra, doc.ideals, bad, 6), InputError);
  std::vector<WitnessTriple<RationalField>> wrong_degree{{"X", "Z", "Z", 2, x}};
  EXPECT_THROW(make_family_context(doc.algebra, doc.ideals, wrong_degree, 6), InputError);
}
