#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pbnf/basis.hpp"
#include "pbnf/transform.hpp"

using namespace pbnf;
using O = OperatorId;

TEST(Closure, Verdicts) {
  EXPECT_TRUE(is_complete({O::And, O::Neg}));
  EXPECT_TRUE(is_complete({O::Nand}));
  EXPECT_TRUE(is_complete({O::Nor}));
  EXPECT_TRUE(is_complete({O::Imp, O::NConvImp}));
  EXPECT_FALSE(is_complete({O::Iff, O::Xor}));
  EXPECT_FALSE(is_complete({O::And, O::Or}));
  const auto x = closure({O::Xor});
  std::vector<std::string> reached;
  for (const auto& v : x.reached()) reached.push_back(v.to_string());
  EXPECT_EQ(reached, (std::vector<std::string>{"0000", "0110", "1010", "1100"}));
}

TEST(Closure, ConstantsWidenTheClone) {
  EXPECT_FALSE(is_complete({O::And, O::Xor}));
  EXPECT_TRUE(is_complete({O::And, O::Xor}, true));
  EXPECT_EQ(which_missing({O::And, O::Xor}).size(), 8U);
}

TEST(Closure, WitnessesEvaluateToTheirKey) {
  const auto result = closure({O::Imp, O::Neg});
  for (const auto& [v, w] : result.witnesses) {
    EXPECT_EQ(truth_vector(w.expression, {"p", "q"}), v) << print(w.expression);
  }
}

TEST(Closure, MonotoneUnderAddingConnectives) {
  const auto& ops = oracle::binary_ops();
  std::mt19937 rng(41U);
  for (int i = 0; i < 200; ++i) {
    std::set<O> small;
    for (O op : ops) {
      if (rng() % 4 == 0) small.insert(op);
    }
    std::set<O> big = small;
    big.insert(ops[rng() % ops.size()]);
    const auto a = closure(small), b = closure(big);
    for (const auto& [v, w] : a.witnesses) EXPECT_TRUE(b.contains(v));
  }
}

TEST(Closure, AffineConnectivesNeverComplete) {
  // Subsets of the connectives with polynomials of degree at most one.
  std::vector<O> affine;
  for (O op : oracle::binary_ops()) {
    if (op_poly(op, Family::Normal).degree() <= 1) affine.push_back(op);
  }
  ASSERT_EQ(affine.size(), 8U);
  for (unsigned mask = 0; mask < 256; ++mask) {
    std::set<O> s;
    for (unsigned i = 0; i < 8; ++i) {
      if (mask & (1U << i)) s.insert(affine[i]);
    }
    EXPECT_LE(closure(s).witnesses.size(), 8U);
  }
}

TEST(SelfNegation, OnlyNandAndNor) {
  for (O op : oracle::binary_ops()) {
    EXPECT_EQ(self_negation_test(op), op == O::Nand || op == O::Nor) << name(op);
  }
  EXPECT_EQ(diagonal_poly(O::Nand), parse_poly("p+1"));
  EXPECT_EQ(diagonal_poly(O::NProjP), parse_poly("p+1"));
}

TEST(Synthesize, Examples) {
  EXPECT_EQ(print(synthesize(parse("p & q"), {O::Imp, O::Neg}, 8)), "!(p -> !q)");
  EXPECT_EQ(print(synthesize(parse("p & q"), {O::Nand}, 8)), "(p nand q) nand (p nand q)");
  const Formula via_poly = synthesize(parse_poly("p+q+1"), {O::Nor}, 8);
  EXPECT_EQ(pbnf::pbnf(via_poly), parse_poly("p+q+1"));
}

TEST(Synthesize, Unreachable) {
  try {
    synthesize(parse("p & q"), {O::Xor}, 8);
    FAIL();
  } catch (const Unreachable& e) {
    EXPECT_EQ(e.reason(), Unreachable::Reason::IncompleteBasis);
  }
  try {
    synthesize(parse("p & q"), {O::Nand}, 1);
    FAIL();
  } catch (const Unreachable& e) {
    EXPECT_EQ(e.reason(), Unreachable::Reason::DepthCapped);
    EXPECT_EQ(e.needed_depth(), std::optional<std::size_t>(2));
  }
  EXPECT_THROW(synthesize(parse("p & r"), {O::Nand}, 8), BoundExceeded);
}
