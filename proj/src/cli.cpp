#include "pbnf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "pbnf/basis.hpp"
#include "pbnf/errors.hpp"
#include "pbnf/families.hpp"
#include "pbnf/formula.hpp"
#include "pbnf/poly.hpp"
#include "pbnf/semantics.hpp"
#include "pbnf/singular.hpp"
#include "pbnf/transform.hpp"

namespace pbnf::cli {
namespace {

using json = nlohmann::ordered_json;

// Formula text that failed to parse, kept for the caret diagnostic.
struct InputError {
  std::string text;
  SyntaxError error;
};

Formula parse_input(const std::string& text) {
  try {
    return parse(text);
  } catch (const SyntaxError& e) {
    throw InputError{text, e};
  }
}

Poly parse_poly_input(const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const SyntaxError& e) {
    throw InputError{text, e};
  }
}

Style resolve_style(const std::string& flag) {
  std::string choice = flag;
  if (choice.empty()) {
    const char* env = std::getenv("PBNF_STYLE");
    choice = env ? env : "unicode";
  }
  if (choice == "ascii") return Style::Ascii;
  if (choice == "unicode") return Style::Unicode;
  throw UnknownName("unknown style '" + choice + "' (expected ascii|unicode)");
}

std::set<OperatorId> parse_ops(const std::string& text) {
  std::set<OperatorId> ops;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) ops.insert(operator_from_string(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (ops.empty()) throw UnknownName("--ops needs at least one connective");
  return ops;
}

json assignment_json(const std::optional<Assignment>& a, const std::vector<std::string>& vars) {
  if (!a) return nullptr;
  json out = json::object();
  for (const auto& v : vars) {
    auto it = a->find(v);
    if (it != a->end()) out[v] = it->second ? 1 : 0;
  }
  return out;
}

std::string vars_text(const std::vector<std::string>& vars) {
  std::string s = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
  return s + ")";
}

// Display width of UTF-8 text in code points.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t w) {
  const std::size_t have = width(s);
  return have >= w ? s : s + std::string(w - have, ' ');
}

// Renders rows as columns separated by " | ", trailing spaces trimmed.
std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += " | ";
      line += i + 1 == row.size() ? row[i] : pad(row[i], widths[i]);
    }
    out += line + "\n";
  }
  return out;
}

std::string poly_as_statement(const Poly& a) {
  if (a.is_zero()) return "0";
  if (a.is_one()) return "1";
  if (a == Poly::variable("p")) return "p";
  if (a == negate(Poly::variable("p"))) return "¬p";
  return a.to_string();
}

// ---------------------------------------------------------------------------
// Tables

json family_table_json() {
  json families = json::array();
  for (Family fam : kFamilies) {
    json rows = json::array();
    for (const auto& row : family_table(fam)) {
      rows.push_back({{"statement", row.statement},
                      {"operator", std::string(name(row.op))},
                      {"template", row.template_text},
                      {"polynomial", row.reduced.to_string()},
                      {"vector", map_vector(TruthVector::from_string(info(row.op).truth), fam).to_string()}});
    }
    families.push_back({{"family", std::string(family_name(fam))},
                        {"signature", std::string(family_signature(fam))},
                        {"rows", rows}});
  }
  return families;
}

std::string family_table_text() {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"OP"};
  for (Family fam : kFamilies) header.emplace_back(family_signature(fam));
  grid.push_back(header);
  std::vector<std::vector<FamilyRow>> tables;
  for (Family fam : kFamilies) tables.push_back(family_table(fam));
  for (std::size_t r = 0; r < tables[0].size(); ++r) {
    std::vector<std::string> line{tables[0][r].statement};
    for (const auto& table : tables) line.push_back(table[r].display());
    grid.push_back(line);
  }
  return render_grid(grid);
}

std::string single_family_text(Family fam) {
  std::vector<std::vector<std::string>> grid{{"OP", std::string(family_signature(fam)), "vector"}};
  for (const auto& row : family_table(fam)) {
    grid.push_back({row.statement, row.display(),
                    map_vector(TruthVector::from_string(info(row.op).truth), fam).to_string()});
  }
  return "family " + std::string(family_name(fam)) + "\n" + render_grid(grid);
}

std::string klein_text() {
  std::vector<std::vector<std::string>> grid{{"∘", "p", "−p", "¬p", "+p"}};
  const auto table = singular::klein_table();
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<std::string> line{std::string(singular::glyph(singular::kSingularOps[r]))};
    for (const auto& cell : table[r]) line.push_back(poly_as_statement(cell));
    grid.push_back(line);
  }
  return render_grid(grid);
}

std::string value_text() {
  std::vector<std::vector<std::string>> grid{{"+"}};
  for (auto op : singular::kSingularOps) {
    grid[0].push_back(std::string(singular::glyph(op)) + "p(" + singular::pair_of(op).to_string() + ")");
  }
  const auto table = singular::value_table();
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<std::string> line{grid[0][r + 1]};
    for (const auto& cell : table[r]) line.push_back(cell.to_string());
    grid.push_back(line);
  }
  return render_grid(grid);
}

std::string z4_text() {
  std::vector<std::vector<std::string>> grid{{"*", "0", "1", "2", "3"}};
  for (std::uint8_t r = 0; r < 4; ++r) {
    std::vector<std::string> line{std::to_string(r)};
    for (std::uint8_t c = 0; c < 4; ++c) line.push_back(std::to_string(singular::z4_compose({r}, {c}).residue));
    grid.push_back(line);
  }
  return render_grid(grid);
}

std::size_t mismatch_count(const std::vector<singular::TableCell>& cells) {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const auto& c) {
    return c.status == singular::CellStatus::Mismatch;
  }));
}

std::string diff_text() {
  const auto cells = singular::singular_table_diff();
  std::vector<std::vector<std::string>> grid{{"op", "statement", "published", "computed", "status"}};
  for (const auto& cell : cells) {
    grid.push_back({std::string(singular::glyph(cell.op)), cell.column, cell.published, cell.computed,
                    cell.status == singular::CellStatus::Match ? "match" : "MISMATCH"});
  }
  std::string out = render_grid(grid);
  out += "mismatches: " + std::to_string(mismatch_count(cells)) + " of " + std::to_string(cells.size()) + "\n";
  for (const auto& check : singular::de_morgan_checks()) {
    out += check.source + ": " + check.clause + "  [" + check.lhs.to_string() + " vs " + check.rhs.to_string() +
           "] " + (check.agrees ? "agrees" : "DISAGREES") + "\n";
  }
  return out;
}

json diff_json() {
  const auto cells = singular::singular_table_diff();
  json list = json::array();
  for (const auto& cell : cells) {
    json status = cell.status == singular::CellStatus::Match
                      ? json("match")
                      : json({{"mismatch", {{"paper_value", cell.published}, {"computed_value", cell.computed}}}});
    list.push_back({{"op", std::string(singular::name(cell.op))},
                    {"column", cell.column},
                    {"published", cell.published},
                    {"computed", cell.computed},
                    {"polynomial", cell.computed_poly.to_string()},
                    {"status", status}});
  }
  json clauses = json::array();
  for (const auto& check : singular::de_morgan_checks()) {
    clauses.push_back({{"source", check.source},
                       {"clause", check.clause},
                       {"lhs", check.lhs.to_string()},
                       {"rhs", check.rhs.to_string()},
                       {"agrees", check.agrees}});
  }
  return {{"cells", list}, {"mismatches", mismatch_count(cells)}, {"de_morgan", clauses}};
}

json singular_tables_json() {
  json klein = json::array();
  for (const auto& row : singular::klein_table()) {
    json line = json::array();
    for (const auto& cell : row) line.push_back(poly_as_statement(cell));
    klein.push_back(line);
  }
  json values = json::array();
  for (const auto& row : singular::value_table()) {
    json line = json::array();
    for (const auto& cell : row) line.push_back(cell.to_string());
    values.push_back(line);
  }
  json z4 = json::array();
  for (std::uint8_t r = 0; r < 4; ++r) {
    json line = json::array();
    for (std::uint8_t c = 0; c < 4; ++c) line.push_back(singular::z4_compose({r}, {c}).residue);
    z4.push_back(line);
  }
  return {{"klein", klein}, {"values", values}, {"z4", z4}, {"singular_diff", diff_json()}};
}

std::string singular_tables_text() {
  return "Klein table (row applied to column)\n" + klein_text() + "\nvalue table (coordinatewise sum)\n" +
         value_text() + "\nmod-4 table\n" + z4_text() + "\nsingular operators on binary statements\n" +
         diff_text();
}

// ---------------------------------------------------------------------------
// Commands

struct Options {
  std::string style;
  bool as_json = false;
  std::string family = "normal";
  std::string ops;
  bool constants = false;
  std::size_t depth = 8;
  bool trace = false;
  std::string target;
  std::vector<std::string> positional;
};

void emit_json(std::ostream& out, json doc) {
  json wrapped = {{"schema", kSchema}};
  for (auto& [key, value] : doc.items()) wrapped[key] = value;
  out << wrapped.dump(2) << "\n";
}

int cmd_transform(const Options& o, std::ostream& out) {
  const Formula f = parse_input(o.positional.at(0));
  const Family fam = parse_family(o.family);
  const Style style = resolve_style(o.style);
  const Verdict verdict = classify(f, fam);
  const auto vars = verdict.letters;
  std::optional<TruthVector> vec;
  if (vars.size() <= kMaxVectorVariables) vec = map_vector(truth_vector(f, vars), fam);
  const auto steps = o.trace ? proof_trace(f, fam) : std::vector<TraceStep>{};
  if (o.as_json) {
    json doc = {{"formula", print(f, style)},
                {"family", std::string(family_name(fam))},
                {"polynomial", verdict.polynomial.to_string()},
                {"vector", vec ? json(vec->to_string()) : json(nullptr)},
                {"variables", vars},
                {"class", std::string(class_name(verdict.cls))},
                {"witness", assignment_json(verdict.falsifying, vars)}};
    if (o.trace) {
      json trace = json::array();
      for (const auto& step : steps) {
        json sub = json::object();
        for (const auto& [v, p] : step.substitution) sub[v] = p.to_string();
        trace.push_back({{"statement", step.statement},
                         {"rule", step.rule},
                         {"substitution", sub},
                         {"result", step.result.to_string()},
                         {"note", step.note}});
      }
      doc["trace"] = trace;
    }
    emit_json(out, doc);
    return kOk;
  }
  out << "formula:    " << print(f, style) << "  [S(" << f.connective_count() << "," << vars.size() << ")]\n";
  out << "family:     " << family_name(fam) << " " << family_signature(fam) << "\n";
  out << "polynomial: " << verdict.polynomial << "\n";
  if (vec) out << "vector:     " << vec->to_string() << " over " << vars_text(vars) << "\n";
  out << "class:      " << class_name(verdict.cls) << "\n";
  if (verdict.cls != VerdictClass::Tautology && verdict.falsifying) {
    out << "falsified:  " << format_assignment(*verdict.falsifying, vars) << "\n";
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& step = steps[i];
    out << "step " << i + 1 << ": " << step.statement << "  via " << step.rule;
    for (const auto& [v, p] : step.substitution) out << "  " << v << "↦" << p;
    out << "  = " << step.result;
    if (!step.note.empty()) out << "  (" << step.note << ")";
    out << "\n";
  }
  return kOk;
}

int cmd_prove(const Options& o, std::ostream& out) {
  const Formula f = parse_input(o.positional.at(0));
  const Family fam = parse_family(o.family);
  const Verdict verdict = classify(f, fam);
  if (o.as_json) {
    emit_json(out, {{"formula", print(f, resolve_style(o.style))},
                    {"family", std::string(family_name(fam))},
                    {"polynomial", verdict.polynomial.to_string()},
                    {"class", std::string(class_name(verdict.cls))},
                    {"witness", assignment_json(verdict.falsifying, verdict.letters)}});
  } else {
    out << class_name(verdict.cls);
    if (verdict.cls != VerdictClass::Tautology && verdict.falsifying && !verdict.letters.empty()) {
      out << ", falsified by " << format_assignment(*verdict.falsifying, verdict.letters);
    }
    out << "\n";
  }
  return verdict.cls == VerdictClass::Tautology ? kOk : kNegative;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const Formula f = parse_input(o.positional.at(0));
  const Formula g = parse_input(o.positional.at(1));
  const Equivalence eq = equivalent(f, g);
  if (o.as_json) {
    emit_json(out, {{"left", print(f, resolve_style(o.style))},
                    {"right", print(g, resolve_style(o.style))},
                    {"left_polynomial", eq.left.to_string()},
                    {"right_polynomial", eq.right.to_string()},
                    {"equivalent", eq.equivalent},
                    {"witness", assignment_json(eq.witness, eq.letters)}});
  } else if (eq.equivalent) {
    out << "equivalent\n";
  } else {
    out << "not equivalent, witness " << format_assignment(*eq.witness, eq.letters) << "\n";
  }
  return eq.equivalent ? kOk : kNegative;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Formula f = parse_input(o.positional.at(0));
  const Formula g = parse_input(o.positional.at(1));
  const EqualCondition cond = equal_condition(f, g);
  if (o.as_json) {
    json sols = json::array();
    for (const auto& s : cond.solutions) sols.push_back(assignment_json(s, cond.letters));
    emit_json(out, {{"letters", cond.letters},
                    {"difference", cond.difference.to_string()},
                    {"description", cond.description},
                    {"solutions", sols}});
  } else {
    out << "difference: " << cond.difference << " = 0\n";
    out << "condition:  " << cond.description << "\n";
    out << "solutions " << vars_text(cond.letters) << ":";
    for (const auto& s : cond.solutions) {
      out << " ";
      for (const auto& v : cond.letters) out << (s.at(v) ? '1' : '0');
    }
    out << (cond.solutions.empty() ? " none\n" : "\n");
  }
  return cond.solutions.empty() ? kNegative : kOk;
}

int cmd_fiber(const Options& o, std::ostream& out) {
  const Poly a = parse_poly_input(o.positional.at(0));
  const Family fam = parse_family(o.family);
  const Fiber fb = fiber(a, fam);
  const Style style = resolve_style(o.style);
  if (o.as_json) {
    emit_json(out, {{"polynomial", a.to_string()},
                    {"family", std::string(family_name(fam))},
                    {"operator", std::string(name(fb.op))},
                    {"statement", print(fb.statement, style)},
                    {"degenerate", fb.degenerate},
                    {"note", fb.note}});
  } else {
    out << name(fb.op) << ": " << print(fb.statement, style);
    if (!fb.note.empty()) out << "  (" << fb.note << ")";
    out << "\n";
  }
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out, bool family_given) {
  if (family_given) {
    const Family fam = parse_family(o.family);
    if (o.as_json) {
      for (const auto& entry : family_table_json()) {
        if (entry["family"] == family_name(fam)) emit_json(out, entry);
      }
    } else {
      out << single_family_text(fam);
    }
    return kOk;
  }
  out << emit_tables(o.as_json);
  return kOk;
}

json closure_json(const ClosureResult& result) {
  json reached = json::object();
  for (const auto& [v, w] : result.witnesses) {
    reached[v.to_string()] = {{"witness", print(w.expression)}, {"depth", w.depth}};
  }
  json missing = json::array();
  for (const auto& v : which_missing(result.ops, result.include_constants)) missing.push_back(v.to_string());
  json ops = json::array();
  for (auto op : result.ops) ops.push_back(std::string(name(op)));
  return {{"ops", ops},
          {"constants", result.include_constants},
          {"complete", result.complete},
          {"reached_count", result.witnesses.size()},
          {"generation", result.generation},
          {"reached", reached},
          {"missing", missing}};
}

int report_unreachable(const Unreachable& e, bool as_json, std::ostream& out) {
  const bool capped = e.reason() == Unreachable::Reason::DepthCapped;
  if (as_json) {
    emit_json(out, {{"synthesized", nullptr},
                    {"reason", capped ? "depth-capped" : "incomplete-basis"},
                    {"needed_depth", e.needed_depth() ? json(*e.needed_depth()) : json(nullptr)},
                    {"message", e.what()}});
  } else {
    out << "unreachable (" << (capped ? "depth-capped" : "incomplete basis") << "): " << e.what() << "\n";
  }
  return kNegative;
}

int cmd_synth(const Options& o, const std::string& target_text, std::ostream& out) {
  const Formula target = parse_input(target_text);
  const auto ops = parse_ops(o.ops);
  const Style style = resolve_style(o.style);
  try {
    const Formula result = synthesize(target, ops, o.depth, o.constants);
    if (o.as_json) {
      emit_json(out, {{"target", print(target, style)},
                      {"synthesized", print(result, style)},
                      {"depth", result.depth()},
                      {"polynomial", pbnf(result).to_string()}});
    } else {
      out << print(result, style) << "\n";
    }
    return kOk;
  } catch (const Unreachable& e) {
    return report_unreachable(e, o.as_json, out);
  }
}

int cmd_basis(const Options& o, std::ostream& out) {
  if (!o.target.empty()) return cmd_synth(o, o.target, out);
  const auto ops = parse_ops(o.ops);
  const ClosureResult result = closure(ops, o.constants);
  if (o.as_json) {
    emit_json(out, closure_json(result));
  } else {
    out << (result.complete ? "complete" : "incomplete") << ": " << result.witnesses.size()
        << " of 16 binary functions reached in " << result.generation << " round(s)\n";
    std::vector<std::vector<std::string>> grid{{"vector", "depth", "witness"}};
    for (const auto& [v, w] : result.witnesses) {
      grid.push_back({v.to_string(), std::to_string(w.depth), print(w.expression, resolve_style(o.style))});
    }
    out << render_grid(grid);
    if (!result.complete) {
      out << "missing:";
      for (const auto& v : which_missing(ops, o.constants)) out << " " << v.to_string();
      out << "\n";
    }
  }
  return result.complete ? kOk : kNegative;
}

int cmd_singular_apply(const Options& o, std::ostream& out) {
  const singular::SingularOp op = singular::parse_singular(o.positional.at(0));
  const Formula f = parse_input(o.positional.at(1));
  const Style style = resolve_style(o.style);
  const auto applied = singular::apply_to_binary(op, f);
  std::optional<singular::TableCell> published;
  for (const auto& cell : singular::singular_table_diff()) {
    if (cell.op == op && cell.column == print(f, Style::Unicode)) published = cell;
  }
  if (o.as_json) {
    json doc = {{"operator", std::string(singular::name(op))},
                {"formula", print(f, style)},
                {"letter", applied.letter},
                {"input", applied.input.to_string()},
                {"polynomial", applied.result.to_string()},
                {"statement", print(applied.statement, style)}};
    if (published) {
      doc["published"] = published->published;
      doc["status"] = published->status == singular::CellStatus::Match ? "match" : "mismatch";
    }
    emit_json(out, doc);
  } else {
    out << singular::glyph(op) << "(" << print(f, style) << ") = " << applied.input << " + "
        << singular::added_template(op, applied.letter) << " = " << applied.result << "  ->  "
        << print(applied.statement, style) << "\n";
    if (published) {
      out << "published: " << published->published << " ("
          << (published->status == singular::CellStatus::Match ? "match" : "MISMATCH") << ")\n";
    }
  }
  return kOk;
}

int cmd_singular_demi(const Options& o, std::ostream& out) {
  const auto report = singular::demi_negation_search();
  const auto cross = singular::inner_cross_check();
  json pair_roots = json::array();
  for (const auto& image : report.pair_map_roots) {
    json m = json::object();
    const char* domain[] = {"10", "00", "01", "11"};
    for (std::size_t i = 0; i < 4; ++i) m[domain[i]] = image[i].to_string();
    pair_roots.push_back(m);
  }
  json z4 = json::array();
  for (const auto& r : report.z4_roots) z4.push_back(r.residue);
  json inner = json::object();
  for (auto op : singular::kSingularOps) {
    inner[std::string(singular::name(op))] = singular::inner_identity_check(op).to_string();
  }
  if (o.as_json) {
    emit_json(out, {{"two_valued_roots", json::array()},
                    {"pair_map_roots", pair_roots},
                    {"z4_roots", z4},
                    {"inner_identity", inner},
                    {"inner_cross", {{"plain", cross.plain.to_string()},
                                     {"with_extra_unit", cross.with_extra_unit.to_string()}}}});
  } else {
    out << "two-valued: no f in {=,−,¬,+} with f∘f = ¬ (" << report.two_valued_roots.size() << " found)\n";
    out << "maps on coordinate pairs with f∘f = flip: " << report.pair_map_roots.size() << "\n";
    for (const auto& image : report.pair_map_roots) {
      out << "  10->" << image[0].to_string() << " 00->" << image[1].to_string() << " 01->"
          << image[2].to_string() << " 11->" << image[3].to_string() << "\n";
    }
    out << "mod-4 demi-negations:";
    for (const auto& r : report.z4_roots) out << " " << int(r.residue);
    out << "\n";
    out << "inner identity <p-,px> o <px,p+>:";
    for (auto op : singular::kSingularOps) {
      out << " " << singular::glyph(op) << "=" << singular::inner_identity_check(op).to_string();
    }
    out << "\n";
    out << "<p-,p+> o <p+,p->: " << cross.plain.to_string() << " (with extra unit: "
        << cross.with_extra_unit.to_string() << ")\n";
  }
  return kOk;
}

std::vector<std::string> split_entries(const std::string& text) {
  std::vector<std::string> entries;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      entries.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  entries.push_back(cur);
  if (entries.size() != 4) throw UnknownName("a 2x2 matrix needs 4 comma-separated entries: '" + text + "'");
  return entries;
}

PolyMatrix2 parse_matrix(const std::string& text) {
  const auto entries = split_entries(text);
  PolyMatrix2 m;
  for (std::size_t i = 0; i < 4; ++i) m.entries[i] = parse_poly_input(entries[i]);
  return m;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const std::string& mode = o.positional.at(0);
  if (mode == "op") {
    const OperatorId op = operator_from_string(o.positional.at(1));
    const BitMatrix2 m = op_matrix(op);
    if (o.as_json) {
      emit_json(out, {{"operator", std::string(name(op))},
                      {"matrix", m.to_string()},
                      {"mirror", mirror(m).to_string()},
                      {"complement", complement(m).to_string()},
                      {"transpose", transpose(m).to_string()}});
    } else {
      auto show = [&](const char* label, const BitMatrix2& b) {
        out << pad(label, 11) << "[[" << b.bits[0] << "," << b.bits[1] << "],[" << b.bits[2] << "," << b.bits[3]
            << "]]  " << b.to_string() << "\n";
      };
      show("matrix", m);
      show("mirror", mirror(m));
      show("complement", complement(m));
      show("transpose", transpose(m));
    }
    return kOk;
  }
  if (mode == "mul") {
    const PolyMatrix2 product = mat_mul(parse_matrix(o.positional.at(1)), parse_matrix(o.positional.at(2)));
    json entries = json::array();
    for (const auto& e : product.entries) entries.push_back(e.to_string());
    if (o.as_json) {
      emit_json(out, {{"product", entries}});
    } else {
      out << "[[" << product.entries[0] << ", " << product.entries[1] << "], [" << product.entries[2] << ", "
          << product.entries[3] << "]]\n";
    }
    return kOk;
  }
  throw UnknownName("matrix mode must be 'op' or 'mul', got '" + mode + "'");
}

void print_caret(const InputError& e, std::ostream& err) {
  err << "error: " << e.error.what() << "\n";
  err << "  " << e.text << "\n";
  // Caret column counts code points up to the byte offset.
  const std::string prefix = e.text.substr(0, std::min(e.error.position(), e.text.size()));
  err << "  " << std::string(width(prefix), ' ') << "^\n";
}

}  // namespace

std::string emit_tables(bool json_output) {
  if (json_output) {
    json doc = {{"schema", kSchema}, {"families", family_table_json()}};
    const json singular_part = singular_tables_json();
    for (const auto& [key, value] : singular_part.items()) doc[key] = value;
    return doc.dump(2) + "\n";
  }
  return "four-family table\n" + family_table_text() + "\n" + singular_tables_text();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"PBNF: propositional statements as polynomials over the two-element field", "pbnf"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.as_json, "Emit JSON");
    cmd->add_option("--style", o.style, "ascii|unicode (default: $PBNF_STYLE or unicode)");
  };
  auto add_family = [&](CLI::App* cmd) {
    return cmd->add_option("--family", o.family, "normal|complement|pullback|pullback-complement");
  };

  auto* transform = app.add_subcommand("transform", "Compile a statement to its family polynomial");
  transform->add_option("formula", o.positional, "Statement")->required()->expected(1);
  transform->add_flag("--trace", o.trace, "Show each substitution step");
  add_family(transform);
  add_common(transform);

  auto* prove = app.add_subcommand("prove", "Classify a statement; exit 0 iff it is a tautology");
  prove->add_option("formula", o.positional, "Statement")->required()->expected(1);
  add_family(prove);
  add_common(prove);

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence by polynomial identity");
  equiv->add_option("formulas", o.positional, "Two statements")->required()->expected(2);
  add_common(equiv);

  auto* solve = app.add_subcommand("solve", "Assignments where two statements agree");
  solve->add_option("formulas", o.positional, "Two statements")->required()->expected(2);
  add_common(solve);

  auto* fib = app.add_subcommand("fiber", "Name the operator with a given polynomial");
  fib->add_option("polynomial", o.positional, "Polynomial in p, q")->required()->expected(1);
  add_family(fib);
  add_common(fib);

  auto* table = app.add_subcommand("table", "Print the family tables and singular-operator tables");
  auto* table_family = add_family(table);
  add_common(table);

  auto* basis = app.add_subcommand("basis", "Clone closure of a set of connectives");
  basis->add_option("--ops", o.ops, "Comma-separated connectives, e.g. and,neg")->required();
  basis->add_flag("--constants", o.constants, "Seed the constants 0 and 1");
  basis->add_option("--target", o.target, "Synthesize this statement over the basis");
  basis->add_option("--depth", o.depth, "Depth cap for synthesis");
  add_common(basis);

  auto* synth = app.add_subcommand("synth", "Rewrite a statement over a restricted basis");
  synth->add_option("target", o.positional, "Statement in p, q")->required()->expected(1);
  synth->add_option("--ops", o.ops, "Comma-separated connectives")->required();
  synth->add_flag("--constants", o.constants, "Seed the constants 0 and 1");
  synth->add_option("--depth", o.depth, "Depth cap");
  add_common(synth);

  auto* sing = app.add_subcommand("singular", "Singular (unary) operator algebra");
  sing->require_subcommand(1);
  auto* sing_apply = sing->add_subcommand("apply", "Apply =, lower, neg or raise to a statement");
  sing_apply->add_option("args", o.positional, "Operator and statement")->required()->expected(2);
  add_common(sing_apply);
  auto* sing_tables = sing->add_subcommand("tables", "Klein, value, mod-4 and diff tables");
  add_common(sing_tables);
  auto* sing_demi = sing->add_subcommand("demi", "Search for demi-negations");
  add_common(sing_demi);

  auto* matrix = app.add_subcommand("matrix", "Operator matrices and 2x2 polynomial products");
  matrix->add_option("args", o.positional, "op OP | mul A B (entries comma-separated)")
      ->required()
      ->expected(2, 3);
  add_common(matrix);

  // A leading ASCII '-' on an operand is the lowering prefix, not a short
  // option; hand it to the parser as the unicode glyph.
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    const std::string& a = *it;
    if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h") {
      reversed.push_back("\u2212" + a.substr(1));
    } else {
      reversed.push_back(a);
    }
  }
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*transform) return cmd_transform(o, out);
    if (*prove) return cmd_prove(o, out);
    if (*equiv) return cmd_equiv(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*fib) return cmd_fiber(o, out);
    if (*table) return cmd_table(o, out, table_family->count() > 0);
    if (*basis) return cmd_basis(o, out);
    if (*synth) return cmd_synth(o, o.positional.at(0), out);
    if (*sing_apply) return cmd_singular_apply(o, out);
    if (*sing_tables) {
      if (o.as_json) {
        emit_json(out, singular_tables_json());
      } else {
        out << singular_tables_text();
      }
      return kOk;
    }
    if (*sing_demi) return cmd_singular_demi(o, out);
    if (*matrix) return cmd_matrix(o, out);
  } catch (const InputError& e) {
    print_caret(e, err);
    return kUsage;
  } catch (const UnknownName& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ArityError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "usage error: no command given\n";
  return kUsage;
}

}  // namespace pbnf::cli
