#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pbnf/errors.hpp"
#include "pbnf/poly.hpp"

using namespace pbnf;

namespace {
Poly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST(Poly, CanonicalForm) {
  EXPECT_EQ(P("(p+1)(q+1)+1"), P("pq+p+q"));
  EXPECT_EQ(P("p*p"), P("p"));
  EXPECT_EQ(P("p+p"), Poly::zero());
  EXPECT_EQ(P("(p+1)(q+1)+1").to_string(), "pq+p+q");
  EXPECT_EQ(P("1+qp+r").to_string(), "pq+r+1");
  EXPECT_EQ(P("p'"), P("p+1"));
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_EQ(P("x1*x2+x1").to_string(), "x1x2+x1");
}

TEST(Poly, Degree) {
  EXPECT_EQ(P("pq+r").degree(), 2U);
  EXPECT_EQ(P("1").degree(), 0U);
  EXPECT_EQ(P("pqr+1").variables(), (std::vector<std::string>{"p", "q", "r"}));
}

TEST(Poly, Evaluate) {
  EXPECT_FALSE(evaluate(P("pq"), {{"p", true}, {"q", false}}));
  EXPECT_FALSE(evaluate(P("p(q+1)+1"), {{"p", true}, {"q", false}}));
  EXPECT_TRUE(evaluate(P("p(q+1)+1"), {{"p", false}, {"q", true}}));
  EXPECT_THROW(evaluate(P("pq"), {{"p", true}}), UnboundVariable);
}

TEST(Poly, Substitute) {
  EXPECT_EQ(substitute(P("pq"), {{"q", P("p")}}), P("p"));
  EXPECT_EQ(substitute(P("pq+1"), {{"q", P("p")}}), P("p+1"));
  // simultaneous
  EXPECT_EQ(substitute(P("p+q"), {{"p", P("q")}, {"q", P("p")}}), P("p+q"));
  EXPECT_EQ(substitute(P("pq"), {{"p", P("p+1")}, {"q", P("q+1")}}), P("(p+1)(q+1)"));
}

TEST(Poly, ParseErrors) {
  EXPECT_THROW(parse_poly("p+"), SyntaxError);
  EXPECT_THROW(parse_poly("(p"), SyntaxError);
  EXPECT_THROW(parse_poly("p&q"), SyntaxError);
}

TEST(Poly, RingLawsRandom) {
  oracle::RandomFormula gen(11U);
  const Poly one = Poly::one();
  for (int i = 0; i < 500; ++i) {
    const Poly a = gen.poly(6), b = gen.poly(6), c = gen.poly(6);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + a, Poly::zero());
    EXPECT_EQ(a * a, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a + Poly::zero(), a);
    EXPECT_EQ(parse_poly(a.to_string()), a);
  }
}

TEST(Poly, EvaluationIsHomomorphism) {
  oracle::RandomFormula gen(12U);
  const auto rows = oracle::rows({"p", "q", "r", "s"});
  for (int i = 0; i < 300; ++i) {
    const Poly a = gen.poly(6), b = gen.poly(6);
    for (const auto& env : rows) {
      EXPECT_EQ(evaluate(a + b, env), oracle::eval_poly(a, env) != oracle::eval_poly(b, env));
      EXPECT_EQ(evaluate(a * b, env), oracle::eval_poly(a, env) && oracle::eval_poly(b, env));
    }
  }
}

TEST(Matrix, Product) {
  const PolyMatrix2 a{{P("p"), P("p"), P("q"), P("1")}};
  const PolyMatrix2 b{{P("q"), P("p"), P("p"), P("1")}};
  const PolyMatrix2 product = mat_mul(a, b);
  EXPECT_EQ(product.at(0, 0), P("p(q+1)"));
  EXPECT_EQ(product.at(0, 1), P("0"));
  EXPECT_EQ(product.at(1, 0), P("p+q"));
  EXPECT_EQ(product.at(1, 1), P("pq+1"));
  EXPECT_EQ(mat_mul(a, PolyMatrix2::identity()), a);
  const PolyMatrix2 d{{P("p"), P("0"), P("0"), P("p")}};
  EXPECT_EQ(mat_mul(d, d), d);
}

TEST(Matrix, OperatorMatrices) {
  EXPECT_EQ(op_matrix(OperatorId::Imp).to_string(), "1011");
  EXPECT_EQ(transpose(op_matrix(OperatorId::ProjP)), op_matrix(OperatorId::ProjQ));
  EXPECT_EQ(mirror(op_matrix(OperatorId::Imp)).to_string(), "1101");
  EXPECT_EQ(complement(op_matrix(OperatorId::Or)).to_string(), "0001");
  EXPECT_THROW(op_matrix(OperatorId::Neg), ArityError);
}
