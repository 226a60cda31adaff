import random

import pytest
from hypothesis import given, settings, strategies as st

from extremes import ParseError, UnsupportedError, parse_statement, render
from extremes.parser import parse_prop, parse_set_expr
from extremes.syntax import (
    UNIVERSE, And, Atom, Diff, FamInter, FamVar, Implies, Inter, Not, Or, PropEquiv, SetEq,
    SetIncl, Taut, Union, Var,
)
from generators import general_statement, general_statements

A, B, C = Var("A"), Var("B"), Var("C")
p, q = Atom("p"), Atom("q")


def test_set_statement():
    assert parse_statement("A & B = B & A") == SetEq(Inter(A, B), Inter(B, A))


def test_difference_from_union():
    s = parse_statement("A \\ (B | C) = (A \\ B) & (A \\ C)")
    assert s == SetEq(Diff(A, Union(B, C)), Inter(Diff(A, B), Diff(A, C)))


def test_tautology_mode():
    assert parse_statement("p \\/ ~p") == Taut(Or(p, Not(p)))


def test_equiv_mode():
    assert parse_statement("p <-> q", equiv=True) == PropEquiv(p, q)


def test_inclusion():
    assert parse_statement("A <= B") == SetIncl(A, B)


def test_render_examples():
    assert render(SetEq(Union(A, Diff(UNIVERSE, A)), UNIVERSE)) == "A | (1 \\ A) = 1"
    assert render(Taut(Implies(And(p, q), p))) == "p /\\ q -> p"
    assert render(FamInter("s", "S", FamVar("A", ("s",)))) == "Inter s in S. A[s]"


def test_precedence():
    assert parse_set_expr("A | B \\ C & D") == Union(A, Diff(B, Inter(C, Var("D"))))
    assert parse_set_expr("A \\ B ^ C") == parse_set_expr("(A \\ B) ^ C")
    assert parse_prop("p -> q -> p") == Implies(p, Implies(q, p))
    assert parse_prop("~p /\\ q \\/ p") == Or(And(Not(p), q), p)


def test_binder_scope_extends_right():
    e = parse_set_expr("Union s in S. A[s] | B")
    assert e.body == Union(FamVar("A", ("s",)), B)


def test_comments_and_whitespace():
    assert parse_statement("A&B=B&A  # commutative") == parse_statement("A & B = B & A")


@pytest.mark.parametrize("text", [
    "(A & B", "A & = B", "A = B = C", "p <-> q <-> p", "A[s] = B", "", "A ! B = B",
    "forall s in S p[s]", "Union s in s. A[s] = 0",
])
def test_parse_errors(text):
    with pytest.raises(ParseError) as info:
        parse_statement(text)
    err = info.value
    assert 0 <= err.span.start <= err.span.end <= len(text.encode())
    assert err.expected
    assert "^" in err.describe(text)


@pytest.mark.parametrize("text", [
    "(A * B) * C = A * B",
    "Union s in S. Union t in T. Union u in U. A[s,t,u] = 0",
])
def test_unsupported(text):
    with pytest.raises(UnsupportedError):
        parse_statement(text)


def test_byte_offsets_after_non_ascii():
    text = "A é B"
    with pytest.raises(ParseError) as info:
        parse_statement(text)
    assert info.value.span.start == 2


@given(general_statements)
def test_round_trip(s):
    assert parse_statement(render(s), equiv=isinstance(s, PropEquiv)) == s


@settings(max_examples=200)
@given(st.integers(0, 2**32), st.integers(0, 40))
def test_errors_point_inside_input(seed, cut):
    # truncating or corrupting a valid statement either parses or gives a well-formed error
    rng = random.Random(seed)
    text = render(general_statement(rng))
    text = text[: max(0, len(text) - cut)] + rng.choice(["", ")", "(", "=", "|", "->", "["])
    try:
        parse_statement(text)
    except ParseError as err:
        assert 0 <= err.span.start <= err.span.end <= len(text.encode())
        assert err.expected and err.message
    except UnsupportedError:
        pass
