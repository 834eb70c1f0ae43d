#include <gtest/gtest.h>

#include "support.hpp"

using namespace hilbseries;
using testing_support::parse;

namespace {

GeneratorSet two_gens() {
  GeneratorSet g;
  g.add("x", 1);
  g.add("y", 1);
  return g;
}

}  // namespace

TEST(Words, ComponentDims) {
  auto g = two_gens();
  EXPECT_EQ(free_component_dim(g, 3), 8);
  EXPECT_EQ(free_component_dim(g, 0), 1);
  GeneratorSet w;
  w.add("x", 1);
  w.add("y", 2);
  EXPECT_EQ(free_component_dim(w, 2), 2);
  EXPECT_EQ(words_of_degree(w, 2).size(), 2u);
  // Fibonacci numbers for degrees {1, 2}
  EXPECT_EQ(free_component_dim(w, 10), 89);
  EXPECT_EQ(free_component_dim(w, 0), 1);
}

TEST(Words, DeglexPutsLargerLettersFirst) {
  auto g = two_gens();
  auto words = words_of_degree(g, 2);
  ASSERT_EQ(words.size(), 4u);
  EXPECT_EQ(format_word(g, words.front()), "y^2");
  EXPECT_EQ(format_word(g, words.back()), "x^2");
  EXPECT_EQ(compare_words(g, Word{1, 0}, Word{0, 1}), std::strong_ordering::greater);
  EXPECT_EQ(format_word(g, Word{}), "1");
  EXPECT_EQ(format_word(g, Word{0, 1, 1, 0}), "x*y^2*x");
}

TEST(Polynomial, Products) {
  PrimeField k(2);
  auto g = two_gens();
  auto x = NcPolynomial<PrimeField>::monomial(k, g, {0});
  auto y = NcPolynomial<PrimeField>::monomial(k, g, {1});
  auto xy = multiply(x, y);
  ASSERT_EQ(xy.terms().size(), 1u);
  EXPECT_EQ(xy.terms()[0].word, (Word{0, 1}));
  EXPECT_EQ(xy.terms()[0].coeff, 1u);
  EXPECT_EQ(xy.degree(), 2);

  auto s = x + y;
  auto sq = multiply(s, s);
  EXPECT_EQ(sq.terms().size(), 4u);
  EXPECT_EQ(format_polynomial(g, sq), "y^2 + y*x + x*y + x^2");

  EXPECT_TRUE(multiply(s, NcPolynomial<PrimeField>(k)).is_zero());
}

TEST(Polynomial, CancellationOverF2) {
  PrimeField k(2);
  auto g = two_gens();
  auto x = NcPolynomial<PrimeField>::monomial(k, g, {0});
  EXPECT_TRUE((x + x).is_zero());
}

TEST(Polynomial, FromTermsRejectsInhomogeneous) {
  RationalField q;
  auto g = two_gens();
  EXPECT_THROW(NcPolynomial<RationalField>::from_terms(q, g, {{Word{0, 1}, Rational(1)}, {Word{0}, Rational(1)}}),
               InputError);
}

TEST(Parser, Transcription) {
  auto doc = parse("field GF(2)\ngen x:1 y:1\nrel x*y + y*x", PrimeField(2));
  EXPECT_EQ(doc.algebra.gens.size(), 2u);
  ASSERT_EQ(doc.algebra.rels.size(), 1u);
  EXPECT_EQ(doc.algebra.rels[0].degree(), 2);
  EXPECT_EQ(format_polynomial(doc.algebra.gens, doc.algebra.rels[0]), "y*x + x*y");
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse("field Q\ngen x:0\n", RationalField{}), InputError);
  EXPECT_THROW(parse("field Q\ngen x:1 y:1\nrel x*y + x\n", RationalField{}), InputError);
  EXPECT_THROW(parse("field Q\ngen x:1\nrel x*z\n", RationalField{}), InputError);
  EXPECT_THROW(parse("field Q\ngen x:1\nrel x*\n", RationalField{}), InputError);
  EXPECT_THROW(parse("field GF(4)\ngen x:1\n", PrimeField(2)), InputError);
  EXPECT_THROW(parse_document_text("gen x:1\n"), InputError);
  EXPECT_THROW(parse("field GF(3)\ngen x:1\nrel 1/3*x^2\n", PrimeField(3)), InputError);
}

TEST(Parser, ErrorPositions) {
  try {
    parse("field Q\ngen x:1 y:1\nrel x*y + x\n", RationalField{});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Parser, CommentsContinuationsAndPowers) {
  auto doc = parse("# comment\nfield Q\ngen x:1 y:1  # trailing\nrel y^2*x - 1/2*x*y*x\n  x^3\n", RationalField{});
  ASSERT_EQ(doc.algebra.rels.size(), 2u);
}

TEST(Parser, EliminatesLinearGenerators) {
  auto doc = parse("field GF(3)\ngen x:1 y:1 z:1\nrel x*y - y*x; z - x - 2*y\n", PrimeField(3));
  EXPECT_EQ(doc.algebra.gens.size(), 2u);
  EXPECT_EQ(doc.eliminated, (std::vector<std::string>{"z"}));
  EXPECT_EQ(algebra_dims(doc.algebra, 4), (std::vector<BigInt>{1, 2, 3, 4, 5}));
}

TEST(Parser, RoundTrip) {
  auto text =
      "field GF(3)\ngen x:1 y:1\nrel x*y - y*x\nmodule M\nmgen e:0 f:1\nmrel e*x - f; e*y\n"
      "ideal Z = 0\nideal I = (x)\nwit I Z Z 1 x\n";
  auto doc = parse(text, PrimeField(3));
  auto printed = pretty_print(doc);
  auto again = parse(printed, PrimeField(3));
  EXPECT_EQ(pretty_print(again), printed);
  EXPECT_EQ(doc.module("M").gen_names.size(), 2u);
  EXPECT_THROW(doc.module("N"), InputError);
}

TEST(Parser, ModuleRelationsNeedPositiveDegree) {
  EXPECT_THROW(parse("field Q\ngen x:1\nmodule M\nmgen e:0 f:0\nmrel e - f\n", RationalField{}), InputError);
}

TEST(Parser, CorpusFilesLoad) {
  for (const char* name : {"free1.alg", "free2.alg", "comm2.alg", "comm3.alg", "x2.alg", "x2_deg2.alg",
                           "linear_q.alg", "weighted.alg", "jordan.alg", "modules.alg", "koszul2.alg"})
    EXPECT_NO_THROW(testing_support::load_q(name)) << name;
  for (const char* name : {"free3.alg", "linear.alg", "yxy_x2.alg", "yxy_trunc.alg"})
    EXPECT_NO_THROW(testing_support::load_p(name)) << name;
  EXPECT_NO_THROW(testing_support::load_p("quadratic_gf3.alg", 3));
}
