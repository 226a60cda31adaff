import pytest
from hypothesis import given

from extremes import (
    PreconditionError, check_by_model, decide, decide_flat, decide_taut, logic_to_set, parse_statement, render,
    set_to_logic,
)
from extremes.parser import render_prop
from extremes.syntax import SetEq, Taut, UNIVERSE, desugar, sides, size
from extremes.verdict import Status
from generators import flat_statements, prop_statements


def test_contrapositive():
    s = logic_to_set(parse_statement("(p -> q) <-> (~q -> ~p)"))
    assert render(s) == "P' | Q = (Q')' | P'"


def test_plain_formula_becomes_universe():
    s = logic_to_set(parse_statement("p \\/ ~p"))
    assert s == SetEq(parse_statement("P | P' = 1").l, UNIVERSE)


def test_set_to_logic():
    f = set_to_logic(parse_statement("A \\ B <= A & C'"))
    assert render_prop(f) == "a /\\ ~b -> a /\\ ~c"


def test_quantifiers_translate_to_binders():
    s = logic_to_set(parse_statement("~(forall s in S. p[s]) <-> (exists s in S. ~p[s])"))
    assert render(s) == "(Inter s in S. P[s])' = Union s in S. P[s]'"


def test_products_refused():
    with pytest.raises(PreconditionError):
        set_to_logic(parse_statement("X * Y = Y * X"))


def test_invalid_formula_witness_uses_atoms():
    v = decide_taut(parse_statement("p -> q").p)
    assert v.status is Status.INVALID
    assert v.witness.assignment == {("p", ()): True, ("q", ()): False}


def test_quantified_witness():
    v = decide(parse_statement("(forall s in S. exists t in T. p[s,t]) -> (exists t in T. forall s in S. p[s,t])"))
    assert v.status is Status.INVALID
    assert v.witness.index_sizes == {"S": 2, "T": 2}


@given(prop_statements)
def test_translation_size_is_linear(s):
    translated = logic_to_set(s)
    assert sum(size(side) for side in sides(translated)) <= 2 * size(s.p) + 1


@given(flat_statements)
def test_round_trip_keeps_verdict(s):
    formula = set_to_logic(desugar(s))
    assert decide_taut(formula).holds == decide_flat(s).holds
    assert decide_flat(logic_to_set(Taut(formula))).holds == decide_flat(s).holds


@given(prop_statements)
def test_tautology_matches_truth_table(s):
    assert decide_taut(s.p).holds == check_by_model(s).holds
