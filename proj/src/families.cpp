#include "pbnf/families.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "pbnf/errors.hpp"

namespace pbnf {

std::string_view family_name(Family fam) {
  switch (fam) {
    case Family::Normal:
      return "normal";
    case Family::Complement:
      return "complement";
    case Family::Pullback:
      return "pullback";
    case Family::PullbackComplement:
      return "pullback-complement";
  }
  return "normal";
}

std::string_view family_signature(Family fam) {
  switch (fam) {
    case Family::Normal:
      return "g(p,q,1)";
    case Family::Complement:
      return "g(p,q,0)";
    case Family::Pullback:
      return "g(p',q',1)";
    case Family::PullbackComplement:
      return "g(p',q',0)";
  }
  return "g(p,q,1)";
}

Family parse_family(std::string_view text) {
  for (Family fam : kFamilies) {
    if (family_name(fam) == text) return fam;
  }
  throw UnknownName("unknown family '" + std::string(text) +
                    "' (expected normal|complement|pullback|pullback-complement)");
}

bool complements_output(Family fam) {
  return fam == Family::Complement || fam == Family::PullbackComplement;
}

bool complements_inputs(Family fam) {
  return fam == Family::Pullback || fam == Family::PullbackComplement;
}

bool reads_one_as_true(Family fam) { return !complements_output(fam); }

namespace {

Poly pull_back(const Poly& a) {
  Substitution map;
  for (const auto& v : a.variables()) map[v] = negate(Poly::variable(v));
  return substitute(a, map);
}

Poly from_normal(const Poly& a, Family to) {
  Poly out = complements_inputs(to) ? pull_back(a) : a;
  return complements_output(to) ? negate(out) : out;
}

// Both transforms are involutions and commute, so the inverse is the same
// pair of steps.
Poly to_normal(const Poly& a, Family from) { return from_normal(a, from); }

}  // namespace

Poly to_family(const Poly& a, Family from, Family to) {
  return from_normal(to_normal(a, from), to);
}

TruthVector map_vector(const TruthVector& v, Family fam) {
  TruthVector out = complements_inputs(fam) ? mirror(v) : v;
  return complements_output(fam) ? complement(out) : out;
}

// ---------------------------------------------------------------------------
// Templates

std::string Template::to_string() const {
  std::string out;
  for (const auto& term : terms) {
    if (!out.empty()) out += '+';
    for (const auto& lit : term) {
      out += lit.complemented ? "(" + lit.var + "+1)" : lit.var;
    }
  }
  if (plus_one) out += out.empty() ? "1" : "+1";
  return out.empty() ? "0" : out;
}

Poly Template::expand() const {
  Poly sum = Poly::constant(plus_one);
  for (const auto& term : terms) {
    Poly product = Poly::one();
    for (const auto& lit : term) {
      Poly v = Poly::variable(lit.var);
      product *= lit.complemented ? negate(v) : v;
    }
    sum += product;
  }
  return sum;
}

namespace {

const Literal P{"p", false};
const Literal Pc{"p", true};
const Literal Q{"q", false};
const Literal Qc{"q", true};

Template normal_template(OperatorId op) {
  using Op = OperatorId;
  switch (op) {
    case Op::And:
      return {{{P, Q}}, false};
    case Op::Or:
      return {{{Pc, Qc}}, true};
    case Op::Imp:
      return {{{P, Qc}}, true};
    case Op::ConvImp:
      return {{{Pc, Q}}, true};
    case Op::NImp:
      return {{{P, Qc}}, false};
    case Op::NConvImp:
      return {{{Pc, Q}}, false};
    case Op::Iff:
      return {{{P}, {Q}}, true};
    case Op::Xor:
      return {{{P}, {Q}}, false};
    case Op::Nand:
      return {{{P, Q}}, true};
    case Op::Nor:
      return {{{Pc, Qc}}, false};
    case Op::ProjP:
      return {{{P}}, false};
    case Op::ProjQ:
      return {{{Q}}, false};
    case Op::NProjP:
      return {{{P}}, true};
    case Op::NProjQ:
      return {{{Q}}, true};
    case Op::Top:
      return {{{Pc, P, Q}}, true};
    case Op::Bot:
      return {{{Pc, P, Q}}, false};
    case Op::Id:
      return {{{P}}, false};
    case Op::Lower:
      return {{{P}, {P}}, false};
    case Op::Neg:
      return {{{P}}, true};
    case Op::Raise:
      return {{{P}, {Pc}}, false};
    case Op::True:
      return {{}, true};
    case Op::False:
      return {{}, false};
  }
  return {};
}

// Complements every literal; a lone (v+1) term is rewritten as v with the
// 1 moved into the constant, which keeps linear rows reduced.
Template pull_back(Template t) {
  for (auto& term : t.terms) {
    for (auto& lit : term) lit.complemented = !lit.complemented;
    if (term.size() == 1 && term.front().complemented) {
      term.front().complemented = false;
      t.plus_one = !t.plus_one;
    }
  }
  return t;
}

}  // namespace

Template op_template(OperatorId op, Family fam) {
  Template t = normal_template(op);
  if (complements_inputs(fam)) t = pull_back(std::move(t));
  if (complements_output(fam)) t.plus_one = !t.plus_one;
  return t;
}

Poly op_poly(OperatorId op, Family fam) {
  const OperatorInfo& entry = info(op);
  Poly normal;
  switch (entry.arity) {
    case 0:
      normal = Poly::constant(op == OperatorId::True);
      break;
    case 1:
      normal = vector_to_poly(TruthVector::from_string(entry.truth, {"p"}));
      break;
    default:
      normal = vector_to_poly(TruthVector::from_string(entry.truth, {"p", "q"}));
      break;
  }
  return to_family(normal, Family::Normal, fam);
}

// ---------------------------------------------------------------------------
// Fiber

Fiber fiber(const Poly& a, Family fam) {
  Poly normal = to_family(a, fam, Family::Normal);
  std::vector<std::string> vars = normal.variables();
  if (vars.size() > 2) {
    throw BoundExceeded("fiber is defined for at most two letters, got " + std::to_string(vars.size()));
  }
  std::string note;
  const bool standard =
      std::all_of(vars.begin(), vars.end(), [](const std::string& v) { return v == "p" || v == "q"; });
  if (!standard) {
    Substitution rename;
    const std::array<const char*, 2> targets{"p", "q"};
    for (std::size_t i = 0; i < vars.size(); ++i) {
      rename[vars[i]] = Poly::variable(targets[i]);
      note += (note.empty() ? "renamed " : ", ") + vars[i] + "->" + targets[i];
    }
    normal = substitute(normal, rename);
  }
  const TruthVector v = poly_to_vector(normal, {"p", "q"});
  const OperatorId op = *operator_by_truth(v.to_string());
  const Formula p = Formula::atom("p");
  const Formula q = Formula::atom("q");

  auto degenerate = [&](Formula statement, std::string why) {
    if (!note.empty()) note += "; ";
    note += "degenerate: " + why;
    return Fiber{op, true, std::move(statement), note};
  };
  switch (op) {
    case OperatorId::ProjP:
      return degenerate(p, "depends only on p");
    case OperatorId::NProjP:
      return degenerate(Formula::unary(OperatorId::Neg, p), "depends only on p");
    case OperatorId::ProjQ:
      return degenerate(q, "depends only on q");
    case OperatorId::NProjQ:
      return degenerate(Formula::unary(OperatorId::Neg, q), "depends only on q");
    case OperatorId::Top:
      return degenerate(Formula::constant(true), "constant");
    case OperatorId::Bot:
      return degenerate(Formula::constant(false), "constant");
    default:
      return Fiber{op, false, Formula::binary(op, p, q), note};
  }
}

// ---------------------------------------------------------------------------
// Table

std::string FamilyRow::display() const {
  const std::string reduced_text = reduced.to_string();
  if (template_text == reduced_text) return template_text;
  return template_text + " [= " + reduced_text + "]";
}

namespace {

constexpr std::array<OperatorId, 20> kTableOrder{
    OperatorId::ProjP, OperatorId::NProjP,  OperatorId::ProjQ, OperatorId::NProjQ,
    OperatorId::Or,    OperatorId::And,     OperatorId::Imp,   OperatorId::NImp,
    OperatorId::ConvImp, OperatorId::NConvImp, OperatorId::Nor, OperatorId::Nand,
    OperatorId::Iff,   OperatorId::Xor,     OperatorId::Top,   OperatorId::Bot,
    OperatorId::Id,    OperatorId::Lower,   OperatorId::Neg,   OperatorId::Raise,
};

std::string row_statement(OperatorId op) {
  switch (op) {
    case OperatorId::ProjP:
      return "p";
    case OperatorId::NProjP:
      return "p′";
    case OperatorId::ProjQ:
      return "q";
    case OperatorId::NProjQ:
      return "q′";
    case OperatorId::Top:
      return "ι₁";
    case OperatorId::Bot:
      return "ι₀";
    default:
      break;
  }
  const Formula p = Formula::atom("p");
  if (arity(op) == 1) return print(Formula::unary(op, p), Style::Unicode);
  return print(Formula::binary(op, p, Formula::atom("q")), Style::Unicode);
}

}  // namespace

std::vector<FamilyRow> family_table(Family fam) {
  std::vector<FamilyRow> rows;
  rows.reserve(kTableOrder.size());
  for (OperatorId op : kTableOrder) {
    rows.push_back({row_statement(op), op, op_template(op, fam).to_string(), op_poly(op, fam)});
  }
  return rows;
}

}  // namespace pbnf
