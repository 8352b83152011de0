#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pbnf/basis.hpp"
#include "pbnf/cli.hpp"
#include "pbnf/errors.hpp"
#include "pbnf/families.hpp"
#include "pbnf/singular.hpp"
#include "pbnf/transform.hpp"

namespace py = pybind11;
using namespace pbnf;

namespace {

std::set<OperatorId> to_ops(const std::vector<std::string>& names) {
  std::set<OperatorId> ops;
  for (const auto& n : names) ops.insert(operator_from_string(n));
  return ops;
}

Style to_style(const std::string& s) {
  if (s == "ascii") return Style::Ascii;
  if (s == "unicode") return Style::Unicode;
  throw UnknownName("unknown style '" + s + "'");
}

py::object optional_assignment(const std::optional<Assignment>& a) {
  if (!a) return py::none();
  py::dict d;
  for (const auto& [k, v] : *a) d[py::str(k)] = v ? 1 : 0;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Propositional statements as polynomials over the two-element field";

  py::register_exception<SyntaxError>(m, "SyntaxError", PyExc_ValueError);
  py::register_exception<Error>(m, "PbnfError", PyExc_ValueError);

  py::enum_<Family>(m, "Family")
      .value("NORMAL", Family::Normal)
      .value("COMPLEMENT", Family::Complement)
      .value("PULLBACK", Family::Pullback)
      .value("PULLBACK_COMPLEMENT", Family::PullbackComplement);

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse(text); }))
      .def("print", [](const Formula& f, const std::string& style) { return print(f, to_style(style)); },
           py::arg("style") = "ascii")
      .def_property_readonly("letters", [](const Formula& f) { return letters(f); })
      .def_property_readonly("connectives", &Formula::connective_count)
      .def_property_readonly("depth", &Formula::depth)
      .def("__str__", [](const Formula& f) { return print(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + print(f) + "')"; })
      .def(py::self == py::self);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& text) { return parse_poly(text); }))
      .def_property_readonly("degree", &Poly::degree)
      .def_property_readonly("variables", &Poly::variables)
      .def("evaluate", [](const Poly& a, const Assignment& env) { return evaluate(a, env); })
      .def("substitute", [](const Poly& a, const Substitution& s) { return substitute(a, s); })
      .def("__str__", &Poly::to_string)
      .def("__repr__", [](const Poly& a) { return "Poly('" + a.to_string() + "')"; })
      .def("__hash__", [](const Poly& a) { return std::hash<std::string>{}(a.to_string()); })
      .def(py::self + py::self)
      .def(py::self * py::self)
      .def(py::self == py::self);

  m.def("parse", [](const std::string& text) { return parse(text); });
  m.def("parse_poly", [](const std::string& text) { return parse_poly(text); });

  m.def("pbnf", [](const Formula& f, Family fam) { return pbnf::pbnf(f, fam); }, py::arg("formula"),
        py::arg("family") = Family::Normal);
  m.def("pbnf", [](const std::string& text, Family fam) { return pbnf::pbnf(parse(text), fam); },
        py::arg("formula"), py::arg("family") = Family::Normal);

  m.def("truth_vector", [](const std::string& text) { return truth_vector(parse(text)).to_string(); });
  m.def("vector_to_poly", [](const std::string& bits, const std::vector<std::string>& vars) {
    return vector_to_poly(TruthVector::from_string(bits, vars));
  });
  m.def("poly_to_vector", [](const Poly& a, const std::vector<std::string>& vars) {
    return poly_to_vector(a, vars).to_string();
  });
  m.def("op_poly", [](const std::string& op, Family fam) { return op_poly(operator_from_string(op), fam); },
        py::arg("op"), py::arg("family") = Family::Normal);

  m.def("classify", [](const std::string& text, Family fam) {
        const Verdict v = classify(parse(text), fam);
        py::dict d;
        d["class"] = std::string(class_name(v.cls));
        d["polynomial"] = v.polynomial;
        d["falsifying"] = optional_assignment(v.falsifying);
        d["satisfying"] = optional_assignment(v.satisfying);
        return d;
      },
      py::arg("formula"), py::arg("family") = Family::Normal);

  m.def("equivalent", [](const std::string& f, const std::string& g) {
    const Equivalence e = equivalent(parse(f), parse(g));
    return py::make_tuple(e.equivalent, optional_assignment(e.witness));
  });

  m.def("equal_condition", [](const std::string& f, const std::string& g) {
    const EqualCondition c = equal_condition(parse(f), parse(g));
    py::list sols;
    for (const auto& s : c.solutions) sols.append(optional_assignment(s));
    return py::make_tuple(sols, c.description);
  });

  m.def("fiber", [](const Poly& a, Family fam) {
        const Fiber fb = fiber(a, fam);
        return py::make_tuple(std::string(name(fb.op)), print(fb.statement));
      },
      py::arg("poly"), py::arg("family") = Family::Normal);

  m.def("closure", [](const std::vector<std::string>& ops, bool constants) {
        const ClosureResult r = closure(to_ops(ops), constants);
        py::dict reached;
        for (const auto& [v, w] : r.witnesses) reached[py::str(v.to_string())] = print(w.expression);
        return py::make_tuple(r.complete, reached);
      },
      py::arg("ops"), py::arg("constants") = false);

  m.def("is_complete", [](const std::vector<std::string>& ops, bool constants) {
        return is_complete(to_ops(ops), constants);
      },
      py::arg("ops"), py::arg("constants") = false);

  m.def("self_negation_test", [](const std::string& op) { return self_negation_test(operator_from_string(op)); });

  m.def("synthesize", [](const std::string& target, const std::vector<std::string>& ops, std::size_t depth) {
        return print(synthesize(parse(target), to_ops(ops), depth));
      },
      py::arg("target"), py::arg("ops"), py::arg("depth") = 8);

  m.def("singular_apply", [](const std::string& op, const std::string& text) {
    const auto r = singular::apply_to_binary(singular::parse_singular(op), parse(text));
    return py::make_tuple(r.result, print(r.statement));
  });

  m.def("emit_tables", &cli::emit_tables, py::arg("json") = false);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
