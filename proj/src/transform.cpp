#include "pbnf/transform.hpp"

#include <algorithm>
#include <limits>

#include "pbnf/errors.hpp"
#include "pbnf/semantics.hpp"

namespace pbnf {
namespace {

Substitution operand_map(const std::vector<Poly>& operands) {
  Substitution map;
  map["p"] = operands[0];
  if (operands.size() > 1) map["q"] = operands[1];
  return map;
}

Poly compile_normal(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return Poly::variable(f.name());
    case Formula::Kind::Constant:
      return Poly::constant(f.value());
    default:
      break;
  }
  std::vector<Poly> operands;
  for (const auto& child : f.children()) operands.push_back(compile_normal(child));
  return substitute(op_poly(f.op(), Family::Normal), operand_map(operands));
}

std::vector<std::string> merged_letters(const Formula& f, const Formula& g) {
  std::vector<std::string> out = letters(f);
  for (auto& v : letters(g)) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

Poly pbnf(const Formula& f, Family fam) {
  return to_family(compile_normal(f), Family::Normal, fam);
}

std::string_view class_name(VerdictClass c) {
  switch (c) {
    case VerdictClass::Tautology:
      return "tautology";
    case VerdictClass::Contradiction:
      return "contradiction";
    case VerdictClass::Contingent:
      return "contingent";
  }
  return "contingent";
}

std::optional<Assignment> satisfying_assignment(const Poly& a, const std::vector<std::string>& vars) {
  if (a.is_zero()) return std::nullopt;
  std::size_t min_degree = std::numeric_limits<std::size_t>::max();
  for (const auto& m : a.terms()) min_degree = std::min(min_degree, m.size());
  const Monomial* chosen = nullptr;
  for (const auto& m : a.terms()) {
    if (m.size() == min_degree) {
      chosen = &m;
      break;
    }
  }
  Assignment out;
  for (const auto& v : vars) out[v] = false;
  for (const auto& v : a.variables()) out[v] = false;
  for (const auto& v : *chosen) out[v] = true;
  return out;
}

std::string format_assignment(const Assignment& a, const std::vector<std::string>& vars) {
  std::string out;
  for (const auto& v : vars) {
    auto it = a.find(v);
    if (it == a.end()) continue;
    if (!out.empty()) out += ' ';
    out += v + "=" + (it->second ? "1" : "0");
  }
  return out;
}

Verdict classify(const Formula& f, Family fam) {
  const Poly normal = compile_normal(f);
  Verdict verdict{VerdictClass::Contingent, std::nullopt, std::nullopt,
                  to_family(normal, Family::Normal, fam), fam, letters(f)};
  if (normal.is_one()) {
    verdict.cls = VerdictClass::Tautology;
  } else if (normal.is_zero()) {
    verdict.cls = VerdictClass::Contradiction;
  }
  verdict.satisfying = satisfying_assignment(normal, verdict.letters);
  verdict.falsifying = satisfying_assignment(negate(normal), verdict.letters);
  return verdict;
}

Equivalence equivalent(const Formula& f, const Formula& g) {
  Equivalence out{false, std::nullopt, compile_normal(f), compile_normal(g), merged_letters(f, g)};
  out.equivalent = out.left == out.right;
  if (!out.equivalent) out.witness = satisfying_assignment(out.left + out.right, out.letters);
  return out;
}

namespace {

std::string describe_zero_set(const Poly& diff) {
  if (diff.is_zero()) return "always (identical polynomials)";
  if (diff.is_one()) return "never";
  const auto vars = diff.variables();
  const bool linear = diff.degree() == 1;
  const bool has_one = diff.terms().count(Monomial{}) > 0;
  if (linear && vars.size() == 1) return vars[0] + (has_one ? " = 1" : " = 0");
  if (linear && vars.size() == 2 && diff.terms().size() == (has_one ? 3U : 2U)) {
    return vars[0] + (has_one ? " != " : " = ") + vars[1];
  }
  return diff.to_string() + " = 0";
}

}  // namespace

EqualCondition equal_condition(const Formula& f, const Formula& g, std::size_t max_letters) {
  EqualCondition out;
  out.letters = merged_letters(f, g);
  if (out.letters.size() > max_letters) {
    throw BoundExceeded("equal_condition enumerates at most " + std::to_string(max_letters) +
                        " letters, got " + std::to_string(out.letters.size()));
  }
  out.difference = compile_normal(f) + compile_normal(g);
  const std::size_t rows = std::size_t{1} << out.letters.size();
  for (std::size_t row = 0; row < rows; ++row) {
    Assignment a = row_assignment(out.letters, row);
    if (!evaluate(out.difference, a)) out.solutions.push_back(std::move(a));
  }
  out.description = describe_zero_set(out.difference);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Poly trace_into(const Formula& f, std::vector<TraceStep>& steps, bool is_root) {
  if (f.kind() == Formula::Kind::Atom || f.kind() == Formula::Kind::Constant) {
    Poly p = f.kind() == Formula::Kind::Atom ? Poly::variable(f.name()) : Poly::constant(f.value());
    if (is_root) steps.push_back({print(f), "letter", {}, p, ""});
    return p;
  }
  std::vector<Poly> operands;
  for (const auto& child : f.children()) operands.push_back(trace_into(child, steps, false));

  TraceStep step;
  step.statement = print(f);
  step.rule = op_template(f.op(), Family::Normal).to_string();
  const char* names[] = {"p", "q"};
  for (std::size_t i = 0; i < operands.size(); ++i) step.substitution.emplace_back(names[i], operands[i]);
  step.result = substitute(op_poly(f.op(), Family::Normal), operand_map(operands));
  if (operands.size() == 2 && operands[0] == operands[1]) {
    step.note = (f.op() == OperatorId::Xor || f.op() == OperatorId::Iff)
                    ? "equal operands: annihilating g+g=0"
                    : "equal operands: collapsing g^2=g";
  } else if (step.result.is_one()) {
    step.note = "reaches 1";
  } else if (step.result.is_zero()) {
    step.note = "reaches 0";
  }
  steps.push_back(std::move(step));
  return steps.back().result;
}

}  // namespace

std::vector<TraceStep> proof_trace(const Formula& f, Family fam) {
  std::vector<TraceStep> steps;
  const Poly normal = trace_into(f, steps, true);
  if (fam != Family::Normal) {
    steps.push_back({print(f), "to " + std::string(family_signature(fam)), {},
                     to_family(normal, Family::Normal, fam), std::string(family_name(fam))});
  }
  return steps;
}

}  // namespace pbnf
