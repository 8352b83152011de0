import json
import pathlib

import jsonschema
import pytest

import pbnf

ROOT = pathlib.Path(__file__).resolve().parents[2]


def test_transform_and_classify():
    assert str(pbnf.pbnf("!(p -> !q)")) == "pq"
    assert pbnf.pbnf("p & q", pbnf.Family.PULLBACK) == pbnf.Poly("(p+1)(q+1)")
    verdict = pbnf.classify("p -> q")
    assert verdict["class"] == "contingent"
    assert verdict["falsifying"] == {"p": 1, "q": 0}
    assert pbnf.classify("p | !p")["class"] == "tautology"


def test_formula_and_poly_objects():
    f = pbnf.parse("¬(p ⇒ ¬q)")
    assert f.print() == "!(p -> !q)"
    assert f.print("unicode") == "¬(p ⇒ ¬q)"
    assert f.letters == ["p", "q"]
    a = pbnf.Poly("p+1")
    assert a * a == a
    assert str(a + a) == "0"
    assert a.evaluate({"p": 0}) is True
    assert str(a.substitute({"p": pbnf.Poly("q")})) == "q+1"


def test_equivalence_and_solving():
    assert pbnf.equivalent("p & q", "!(!p | !q)") == (True, None)
    same, witness = pbnf.equivalent("p -> q", "q -> p")
    assert not same and witness == {"p": 1, "q": 0}
    solutions, description = pbnf.equal_condition("p nand q", "p nor q")
    assert solutions == [{"p": 1, "q": 1}, {"p": 0, "q": 0}]
    assert description == "p = q"


def test_vectors_and_fibers():
    assert pbnf.truth_vector("p | q") == "1110"
    assert str(pbnf.vector_to_poly("1110", ["p", "q"])) == "pq+p+q"
    assert pbnf.poly_to_vector(pbnf.Poly("pq+1"), ["p", "q"]) == "0111"
    assert pbnf.fiber(pbnf.Poly("pq+1")) == ("NAND", "p nand q")
    assert str(pbnf.op_poly("imp", pbnf.Family.COMPLEMENT)) == "pq+p"


def test_generators():
    assert pbnf.is_complete(["nand"])
    complete, reached = pbnf.closure(["iff", "xor"])
    assert not complete and len(reached) == 8
    assert pbnf.synthesize("p & q", ["imp", "neg"]) == "!(p -> !q)"
    assert [op for op in ("and", "or", "nand", "nor", "xor") if pbnf.self_negation_test(op)] == ["nand", "nor"]
    with pytest.raises(pbnf.PbnfError):
        pbnf.synthesize("p & q", ["xor"])


def test_singular():
    poly, statement = pbnf.singular_apply("lower", "p | q")
    assert str(poly) == "pq+q"
    assert statement == "p </- q"


def test_syntax_error():
    with pytest.raises(ValueError):
        pbnf.parse("p & (q")


@pytest.mark.parametrize(
    "args",
    [
        ["table", "--json"],
        ["table", "--json", "--family", "complement"],
        ["transform", "p <-> q", "--json", "--trace"],
        ["prove", "p -> q", "--json"],
        ["equiv", "p", "q", "--json"],
        ["solve", "p nand q", "p nor q", "--json"],
        ["fiber", "pq", "--json"],
        ["basis", "--ops", "and,neg", "--json"],
        ["synth", "p & q", "--ops", "nand", "--json"],
        ["synth", "p & q", "--ops", "xor", "--json"],
        ["singular", "apply", "neg", "p nand q", "--json"],
        ["singular", "tables", "--json"],
        ["singular", "demi", "--json"],
        ["matrix", "op", "nor", "--json"],
        ["matrix", "mul", "p,p,q,1", "q,p,p,1", "--json"],
    ],
)
def test_json_matches_schema(args):
    schema = json.loads((ROOT / "docs" / "output.schema.json").read_text())
    code, out, err = pbnf.run_cli(args)
    assert code in (0, 1), err
    jsonschema.validate(json.loads(out), schema)


def test_tables_match_golden():
    assert pbnf.emit_tables() == (ROOT / "tests" / "golden" / "tables.txt").read_text(encoding="utf-8")
