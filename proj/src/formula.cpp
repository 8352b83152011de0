#include "pbnf/formula.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>
#include <utility>

#include "pbnf/errors.hpp"

namespace pbnf {

struct Formula::Node {
  Kind kind;
  OperatorId op;
  std::vector<Formula> children;
  std::string name;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

constexpr std::array<std::string_view, 8> kKeywords{
    "nand", "nor", "projp", "projq", "nprojp", "nprojq", "top", "bot"};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty() || !is_ident_start(name.front())) return false;
  if (!std::all_of(name.begin(), name.end(), is_ident_char)) return false;
  return std::find(kKeywords.begin(), kKeywords.end(), name) == kKeywords.end();
}

Formula Formula::atom(std::string name) {
  if (!is_identifier(name)) throw UnknownName("invalid atom name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, OperatorId::Id, {}, std::move(name)}));
}

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Constant, value ? OperatorId::True : OperatorId::False, {}, {}}));
}

Formula Formula::apply(OperatorId op, std::vector<Formula> children) {
  const int n = arity(op);
  if (n == 0) {
    if (!children.empty()) throw ArityError("constant " + std::string(pbnf::name(op)) + " takes no operands");
    return constant(op == OperatorId::True);
  }
  if (static_cast<int>(children.size()) != n) {
    throw ArityError(std::string(pbnf::name(op)) + " expects " + std::to_string(n) + " operand(s), got " +
                     std::to_string(children.size()));
  }
  const Kind kind = n == 1 ? Kind::Unary : Kind::Binary;
  return Formula(std::make_shared<const Node>(Node{kind, op, std::move(children), {}}));
}

Formula Formula::unary(OperatorId op, Formula child) { return apply(op, {std::move(child)}); }

Formula Formula::binary(OperatorId op, Formula left, Formula right) {
  return apply(op, {std::move(left), std::move(right)});
}

Formula::Kind Formula::kind() const { return node_->kind; }
OperatorId Formula::op() const { return node_->op; }
const std::vector<Formula>& Formula::children() const { return node_->children; }
const std::string& Formula::name() const { return node_->name; }
bool Formula::value() const { return node_->op == OperatorId::True; }

std::size_t Formula::connective_count() const {
  std::size_t count = (kind() == Kind::Unary || kind() == Kind::Binary) ? 1 : 0;
  for (const auto& child : children()) count += child.connective_count();
  return count;
}

std::size_t Formula::letter_count() const { return letters(*this).size(); }

std::size_t Formula::depth() const {
  std::size_t deepest = 0;
  for (const auto& child : children()) deepest = std::max(deepest, child.depth() + 1);
  return deepest;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.op() == b.op() && a.name() == b.name() &&
         a.children() == b.children();
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Ident, Zero, One, LParen, RParen, Prime, Neg, Singular, Binary, End };

struct Token {
  Tok kind;
  OperatorId op = OperatorId::Id;
  std::string text;
  std::size_t pos = 0;
};

struct Glyph {
  std::string_view text;
  Tok kind;
  OperatorId op;
};

// Longest spellings first so that maximal munch falls out of the scan order.
constexpr std::array<Glyph, 28> kGlyphs{{
    {"<->", Tok::Binary, OperatorId::Iff},
    {"</-", Tok::Binary, OperatorId::NConvImp},
    {"-/>", Tok::Binary, OperatorId::NImp},
    {"->", Tok::Binary, OperatorId::Imp},
    {"<-", Tok::Binary, OperatorId::ConvImp},
    {"&", Tok::Binary, OperatorId::And},
    {"|", Tok::Binary, OperatorId::Or},
    {"^", Tok::Binary, OperatorId::Xor},
    {"∧", Tok::Binary, OperatorId::And},
    {"∨", Tok::Binary, OperatorId::Or},
    {"⇒", Tok::Binary, OperatorId::Imp},
    {"→", Tok::Binary, OperatorId::Imp},
    {"⇐", Tok::Binary, OperatorId::ConvImp},
    {"←", Tok::Binary, OperatorId::ConvImp},
    {"⇏", Tok::Binary, OperatorId::NImp},
    {"⇍", Tok::Binary, OperatorId::NConvImp},
    {"⇔", Tok::Binary, OperatorId::Iff},
    {"↔", Tok::Binary, OperatorId::Iff},
    {"⊕", Tok::Binary, OperatorId::Xor},
    {"↑", Tok::Binary, OperatorId::Nand},
    {"↓", Tok::Binary, OperatorId::Nor},
    {"!", Tok::Neg, OperatorId::Neg},
    {"~", Tok::Neg, OperatorId::Neg},
    {"¬", Tok::Neg, OperatorId::Neg},
    {"=", Tok::Singular, OperatorId::Id},
    {"-", Tok::Singular, OperatorId::Lower},
    {"−", Tok::Singular, OperatorId::Lower},
    {"+", Tok::Singular, OperatorId::Raise},
}};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(' || c == ')' || c == '\'') {
      tokens.push_back({c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : Tok::Prime,
                        OperatorId::Id, std::string(1, c), i});
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      const std::string_view word = text.substr(i, j - i);
      if (word != "0" && word != "1") throw SyntaxError("invalid constant '" + std::string(word) + "'", i);
      tokens.push_back({word == "1" ? Tok::One : Tok::Zero, OperatorId::Id, std::string(word), i});
      i = j;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end()) {
        tokens.push_back({Tok::Binary, operator_from_string(word), word, i});
      } else {
        tokens.push_back({Tok::Ident, OperatorId::Id, word, i});
      }
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& glyph : kGlyphs) {
      if (text.substr(i).starts_with(glyph.text)) {
        tokens.push_back({glyph.kind, glyph.op, std::string(glyph.text), i});
        i += glyph.text.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      // Report the whole UTF-8 sequence rather than a lone lead byte.
      std::size_t j = i + 1;
      while (j < text.size() && (static_cast<unsigned char>(text[j]) & 0xC0) == 0x80) ++j;
      throw SyntaxError("unknown connective token '" + std::string(text.substr(i, j - i)) + "'", i);
    }
  }
  tokens.push_back({Tok::End, OperatorId::Id, "", text.size()});
  return tokens;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_level(1);
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, peek().pos);
  }

  Formula parse_level(int level) {
    if (level > 4) return parse_unary();
    Formula left = parse_level(level + 1);
    while (peek().kind == Tok::Binary && info(peek().op).precedence == level) {
      const OperatorId op = advance().op;
      Formula right = parse_level(level + 1);
      left = Formula::binary(op, std::move(left), std::move(right));
    }
    return left;
  }

  Formula parse_unary() {
    if (peek().kind == Tok::Neg) {
      advance();
      return Formula::unary(OperatorId::Neg, parse_unary());
    }
    if (peek().kind == Tok::Singular) {
      const Token tok = advance();
      const Tok next = peek().kind;
      if (next != Tok::Ident && next != Tok::Zero && next != Tok::One && next != Tok::LParen) {
        throw SyntaxError("prefix '" + tok.text + "' must precede an atom or parenthesized statement",
                          tok.pos);
      }
      return Formula::unary(tok.op, parse_postfix());
    }
    return parse_postfix();
  }

  Formula parse_postfix() {
    Formula f = parse_primary();
    while (peek().kind == Tok::Prime) {
      advance();
      f = Formula::unary(OperatorId::Neg, std::move(f));
    }
    return f;
  }

  Formula parse_primary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Ident:
        advance();
        return Formula::atom(tok.text);
      case Tok::Zero:
        advance();
        return Formula::constant(false);
      case Tok::One:
        advance();
        return Formula::constant(true);
      case Tok::LParen: {
        advance();
        Formula inner = parse_level(1);
        if (peek().kind != Tok::RParen) fail("expected ')'");
        advance();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + tok.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

std::string_view glyph(OperatorId op, Style style) {
  return style == Style::Unicode ? info(op).unicode : info(op).ascii;
}

void print_into(const Formula& f, Style style, std::string& out);

bool associative(OperatorId op) {
  return op == OperatorId::And || op == OperatorId::Or || op == OperatorId::Iff || op == OperatorId::Xor;
}

void print_wrapped(const Formula& f, Style style, bool wrap, std::string& out) {
  if (wrap) out += '(';
  print_into(f, style, out);
  if (wrap) out += ')';
}

void print_into(const Formula& f, Style style, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.name();
      return;
    case Formula::Kind::Constant:
      out += f.value() ? '1' : '0';
      return;
    case Formula::Kind::Unary: {
      const Formula& child = f.children().front();
      out += glyph(f.op(), style);
      if (f.op() == OperatorId::Neg) {
        print_wrapped(child, style, child.kind() == Formula::Kind::Binary, out);
      } else {
        const bool bare = child.kind() == Formula::Kind::Atom ||
                          child.kind() == Formula::Kind::Constant;
        print_wrapped(child, style, !bare, out);
      }
      return;
    }
    case Formula::Kind::Binary: {
      const int prec = info(f.op()).precedence;
      const Formula& left = f.children()[0];
      const Formula& right = f.children()[1];
      // Only a chain of one associative connective drops the left parentheses.
      const bool wrap_left =
          left.kind() == Formula::Kind::Binary &&
          (info(left.op()).precedence < prec ||
           (info(left.op()).precedence == prec && (left.op() != f.op() || !associative(f.op()))));
      const bool wrap_right =
          right.kind() == Formula::Kind::Binary && info(right.op()).precedence <= prec;
      print_wrapped(left, style, wrap_left, out);
      out += ' ';
      out += glyph(f.op(), style);
      out += ' ';
      print_wrapped(right, style, wrap_right, out);
      return;
    }
  }
}

void collect_letters(const Formula& f, std::vector<std::string>& out) {
  if (f.kind() == Formula::Kind::Atom) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
    return;
  }
  for (const auto& child : f.children()) collect_letters(child, out);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string print(const Formula& f, Style style) {
  std::string out;
  print_into(f, style, out);
  return out;
}

std::vector<std::string> letters(const Formula& f) {
  std::vector<std::string> out;
  collect_letters(f, out);
  return out;
}

}  // namespace pbnf
