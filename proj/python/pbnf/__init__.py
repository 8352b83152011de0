"""Propositional statements compiled to polynomials over the two-element field."""

from ._core import (
    Family,
    Formula,
    PbnfError,
    Poly,
    SyntaxError,
    classify,
    closure,
    emit_tables,
    equal_condition,
    equivalent,
    fiber,
    is_complete,
    op_poly,
    parse,
    parse_poly,
    pbnf,
    poly_to_vector,
    run_cli,
    self_negation_test,
    singular_apply,
    synthesize,
    truth_vector,
    vector_to_poly,
)

__all__ = [
    "Family",
    "Formula",
    "PbnfError",
    "Poly",
    "SyntaxError",
    "classify",
    "closure",
    "emit_tables",
    "equal_condition",
    "equivalent",
    "fiber",
    "is_complete",
    "op_poly",
    "parse",
    "parse_poly",
    "pbnf",
    "poly_to_vector",
    "run_cli",
    "self_negation_test",
    "singular_apply",
    "synthesize",
    "truth_vector",
    "vector_to_poly",
]
