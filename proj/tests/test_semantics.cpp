#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pbnf/errors.hpp"
#include "pbnf/semantics.hpp"

using namespace pbnf;

TEST(TruthVector, BinaryOperators) {
  EXPECT_EQ(truth_vector(parse("p | q")).to_string(), "1110");
  EXPECT_EQ(truth_vector(parse("p -> q")).to_string(), "1011");
  EXPECT_EQ(truth_vector(parse("p nand q")).to_string(), "0111");
  EXPECT_EQ(truth_vector(parse("p")).to_string(), "10");
}

TEST(TruthVector, MatchesOracleForEveryConnective) {
  for (OperatorId op : oracle::binary_ops()) {
    const Formula f = Formula::binary(op, Formula::atom("p"), Formula::atom("q"));
    std::string expected;
    for (const auto& env : oracle::rows({"p", "q"})) expected += oracle::eval(f, env) ? '1' : '0';
    EXPECT_EQ(truth_vector(f, {"p", "q"}).to_string(), expected) << name(op);
  }
}

TEST(TruthVector, Errors) {
  EXPECT_THROW(TruthVector::from_string("101"), LengthMismatch);
  std::vector<std::string> many;
  for (int i = 0; i < 21; ++i) many.push_back("x" + std::to_string(i));
  EXPECT_THROW(truth_vector(Formula::atom("x0"), many), BoundExceeded);
}

TEST(Eval, Constants) {
  EXPECT_TRUE(eval_formula(parse("0 -> 1"), {}));
  EXPECT_TRUE(eval_formula(parse("p nor p"), {{"p", false}}));
  EXPECT_FALSE(eval_formula(parse("1 nand 1"), {}));
}

TEST(Mobius, KnownVectors) {
  EXPECT_EQ(vector_to_poly(TruthVector::from_string("1000")), parse_poly("pq"));
  EXPECT_EQ(vector_to_poly(TruthVector::from_string("1110")), parse_poly("pq+p+q"));
  EXPECT_EQ(vector_to_poly(TruthVector::from_string("0110")), parse_poly("p+q"));
  EXPECT_EQ(vector_to_poly(TruthVector::from_string("1111")), Poly::one());
}

TEST(Bitwise, Operations) {
  const auto p = TruthVector::from_string("1100");
  const auto q = TruthVector::from_string("1010");
  EXPECT_EQ(bitwise_add(p, q).to_string(), "0110");
  EXPECT_EQ(bitwise_mul(p, q).to_string(), "1000");
  EXPECT_EQ(complement(p).to_string(), "0011");
  EXPECT_EQ(mirror(TruthVector::from_string("1011")).to_string(), "1101");
  // p + q + 1 read componentwise
  EXPECT_EQ(bitwise_add(bitwise_add(p, q), TruthVector::from_string("1111")).to_string(), "1001");
}

TEST(Mobius, RoundTripRandomWide) {
  std::mt19937 rng(5U);
  const std::vector<std::string> vars{"a", "b", "c", "d", "e"};
  for (int i = 0; i < 200; ++i) {
    std::vector<bool> bits(32);
    for (auto&& b : bits) b = rng() & 1U;
    const TruthVector v(vars, bits);
    EXPECT_EQ(poly_to_vector(vector_to_poly(v), vars), v);
  }
}
