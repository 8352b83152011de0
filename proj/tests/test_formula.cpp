#include <gtest/gtest.h>

#include "oracle.hpp"
#include "pbnf/errors.hpp"
#include "pbnf/formula.hpp"

using namespace pbnf;

TEST(Parse, BinaryPrecedence) {
  const Formula f = parse("p | q & r");
  ASSERT_EQ(f.kind(), Formula::Kind::Binary);
  EXPECT_EQ(f.op(), OperatorId::Or);
  EXPECT_EQ(f.children()[1].op(), OperatorId::And);
  EXPECT_EQ(parse("p -> q <-> r").op(), OperatorId::Iff);
  EXPECT_EQ(parse("p & q -> r").op(), OperatorId::Imp);
}

TEST(Parse, LeftAssociative) {
  const Formula f = parse("p -> q -> r");
  EXPECT_EQ(f.children()[0].op(), OperatorId::Imp);
  EXPECT_EQ(f.children()[1].kind(), Formula::Kind::Atom);
}

TEST(Parse, NandOnRepeatedLetter) {
  const Formula f = parse("p nand p");
  EXPECT_EQ(f.op(), OperatorId::Nand);
  EXPECT_EQ(f.children()[0], Formula::atom("p"));
  EXPECT_EQ(f.children()[1], Formula::atom("p"));
}

TEST(Parse, UnicodeGlyphs) {
  EXPECT_EQ(parse("¬(p ⇒ ¬q)"), parse("!(p -> !q)"));
  EXPECT_EQ(parse("p ↑ q"), parse("p nand q"));
  EXPECT_EQ(parse("p ↓ q"), parse("p nor q"));
  EXPECT_EQ(parse("p ⊕ q"), parse("p ^ q"));
  EXPECT_EQ(parse("p ⇍ q"), parse("p </- q"));
  EXPECT_EQ(parse("~p"), parse("!p"));
}

TEST(Parse, SingularPrefixes) {
  EXPECT_EQ(parse("-p").op(), OperatorId::Lower);
  EXPECT_EQ(parse("+p").op(), OperatorId::Raise);
  EXPECT_EQ(parse("=p").op(), OperatorId::Id);
  EXPECT_EQ(parse("-(p | q)").children()[0].op(), OperatorId::Or);
  EXPECT_EQ(parse("p'").op(), OperatorId::Neg);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("p &"), SyntaxError);
  EXPECT_THROW(parse("(p"), SyntaxError);
  EXPECT_THROW(parse("p q"), SyntaxError);
  EXPECT_THROW(parse("-!p"), SyntaxError);
  try {
    parse("p & (q");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 6U);
  }
}

TEST(Formula, Counts) {
  const Formula f = parse("!(p -> !q)");
  EXPECT_EQ(f.connective_count(), 3U);
  EXPECT_EQ(f.letter_count(), 2U);
  EXPECT_EQ(f.depth(), 3U);
  EXPECT_EQ(letters(parse("q & p | q")), (std::vector<std::string>{"q", "p"}));
}

TEST(Print, Styles) {
  const Formula f = parse("!(p -> !q)");
  EXPECT_EQ(print(f, Style::Ascii), "!(p -> !q)");
  EXPECT_EQ(print(f, Style::Unicode), "¬(p ⇒ ¬q)");
  EXPECT_EQ(print(parse("(p nand q) nand (p nand q)")), "(p nand q) nand (p nand q)");
  EXPECT_EQ(print(parse("(p & q) & r")), "p & q & r");
  EXPECT_EQ(print(parse("p & (q & r)")), "p & (q & r)");
}

TEST(Print, RoundTripRandom) {
  oracle::RandomFormula gen(7U);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen(5);
    for (Style s : {Style::Ascii, Style::Unicode}) {
      const std::string text = print(f, s);
      EXPECT_EQ(parse(text), f) << text;
      EXPECT_EQ(print(parse(text), s), text);
    }
  }
}
