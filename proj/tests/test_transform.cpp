#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pbnf/errors.hpp"
#include "pbnf/transform.hpp"

using namespace pbnf;

namespace {
Poly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST(Pbnf, Examples) {
  EXPECT_EQ(pbnf::pbnf(parse("p & !p")), Poly::zero());
  EXPECT_EQ(pbnf::pbnf(parse("!(p -> !q)")), P("pq"));
  EXPECT_EQ(pbnf::pbnf(parse("!(!p | !q)")), P("pq"));
  EXPECT_EQ(pbnf::pbnf(parse("p nand p")), P("p+1"));
  EXPECT_EQ(pbnf::pbnf(parse("p nor p")), P("p+1"));
  EXPECT_EQ(pbnf::pbnf(parse("p & q"), Family::Pullback), P("(p+1)(q+1)"));
}

TEST(Classify, Verdicts) {
  EXPECT_EQ(classify(parse("p & !p")).cls, VerdictClass::Contradiction);
  EXPECT_EQ(classify(parse("(p | (q & p)) <-> p")).cls, VerdictClass::Tautology);
  const Verdict v = classify(parse("p -> q"));
  EXPECT_EQ(v.cls, VerdictClass::Contingent);
  ASSERT_TRUE(v.falsifying);
  EXPECT_EQ(*v.falsifying, (Assignment{{"p", true}, {"q", false}}));
}

TEST(Classify, SameVerdictInEveryFamily) {
  oracle::RandomFormula gen(17U, 3);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen(5);
    const VerdictClass normal = classify(f).cls;
    for (Family fam : kFamilies) {
      const Verdict v = classify(f, fam);
      EXPECT_EQ(v.cls, normal) << print(f);
      if (v.falsifying) EXPECT_FALSE(oracle::eval(f, *v.falsifying)) << print(f);
      if (v.satisfying) EXPECT_TRUE(oracle::eval(f, *v.satisfying)) << print(f);
    }
  }
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(parse("p & q"), parse("!(!p | !q)")).equivalent);
  EXPECT_TRUE(equivalent(parse("p -> q"), parse("!p | q")).equivalent);
  EXPECT_TRUE(equivalent(parse("p & q"), parse("!(p nand q)")).equivalent);
  EXPECT_TRUE(equivalent(parse("p & q"), parse("p -/> !q")).equivalent);
  EXPECT_TRUE(equivalent(parse("p & q"), parse("!p </- q")).equivalent);
  const Equivalence e = equivalent(parse("p -> q"), parse("q -> p"));
  EXPECT_FALSE(e.equivalent);
  ASSERT_TRUE(e.witness);
  EXPECT_EQ(*e.witness, (Assignment{{"p", true}, {"q", false}}));
}

TEST(Equivalent, AgreesWithTruthTables) {
  oracle::RandomFormula gen(23U, 3);
  const auto rows = oracle::rows({"p", "q", "r"});
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen(3), g = gen(3);
    bool same = true;
    for (const auto& env : rows) same = same && oracle::eval(f, env) == oracle::eval(g, env);
    const Equivalence e = equivalent(f, g);
    EXPECT_EQ(e.equivalent, same);
    if (!same) {
      ASSERT_TRUE(e.witness);
      std::map<std::string, bool> env{{"p", false}, {"q", false}, {"r", false}};
      for (const auto& [k, v] : *e.witness) env[k] = v;
      EXPECT_NE(oracle::eval(f, env), oracle::eval(g, env));
    }
  }
}

TEST(EqualCondition, NandNor) {
  const auto cond = equal_condition(parse("p nand q"), parse("p nor q"));
  EXPECT_EQ(cond.difference, P("p+q"));
  EXPECT_EQ(cond.description, "p = q");
  EXPECT_EQ(cond.solutions.size(), 2U);
  EXPECT_EQ(equal_condition(parse("p"), parse("p")).description, "always (identical polynomials)");
  EXPECT_EQ(equal_condition(parse("p"), parse("!p")).description, "never");
  EXPECT_EQ(equal_condition(parse("p"), parse("1")).description, "p = 1");
}

TEST(EqualCondition, Bound) {
  std::string text = "a0";
  for (int i = 1; i < 11; ++i) text += " & a" + std::to_string(i);
  EXPECT_THROW(equal_condition(parse(text), parse("1")), BoundExceeded);
}

TEST(Trace, Steps) {
  const auto steps = proof_trace(parse("!(p -> !q)"));
  ASSERT_EQ(steps.size(), 3U);
  EXPECT_EQ(steps.back().result, P("pq"));
  const auto collapse = proof_trace(parse("p & p"));
  EXPECT_EQ(collapse.back().note, "equal operands: collapsing g^2=g");
  const auto pulled = proof_trace(parse("p & q"), Family::Pullback);
  EXPECT_EQ(pulled.back().result, P("(p+1)(q+1)"));
}

TEST(Assignment, Format) {
  EXPECT_EQ(format_assignment({{"p", true}, {"q", false}}, {"p", "q"}), "p=1 q=0");
  const auto sat = satisfying_assignment(P("pq+q"), {"p", "q"});
  ASSERT_TRUE(sat);
  EXPECT_TRUE(evaluate(P("pq+q"), *sat));
  EXPECT_FALSE(satisfying_assignment(Poly::zero(), {"p"}));
}
