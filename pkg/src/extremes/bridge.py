"""Translation between set statements and formulas, and tautology checking.

Set to logic: a variable ``Y`` becomes the atom ``y`` ("Y is not empty" at
the point under consideration), union/intersection/complement become
or/and/not, difference ``L \\ R`` becomes ``L /\\ ~R``, indexed unions and
intersections become existential and universal quantifiers, equality becomes
``<->`` and inclusion ``->``.

Logic to sets runs the other way, with ``p -> q`` expanded to ``P' | Q`` and
a nested ``p <-> q`` to ``(P ^ Q)'``.  A formula is a tautology exactly when
its translation equals the universe, so tautologies are decided by the same
extremes engine as set identities.
"""
from __future__ import annotations

from .engine import DEFAULT_DYADIC_BOUND, decide_flat, decide_indexed
from .errors import PreconditionError
from .syntax import (
    EMPTY, FALSE, TRUE, UNIVERSE, And, Atom, Bottom, Complement, Diff, Empty, Exists, FamInter,
    FamUnion, FamVar, Forall, Iff, Implies, Inter, Not, Or, Product, PropEquiv, SetEq,
    SetIncl, SymDiff, Taut, Top, Union, Universe, Var, has_families,
)
from .verdict import Verdict, Witness


def atom_name(set_name: str) -> str:
    return set_name[0].lower() + set_name[1:]


def set_name(atom: str) -> str:
    return atom[0].upper() + atom[1:]


def _to_logic(e):
    match e:
        case Var(name):
            return Atom(atom_name(name))
        case FamVar(name, indices):
            return Atom(atom_name(name), indices)
        case Empty():
            return FALSE
        case Universe():
            return TRUE
        case Union(l, r):
            return Or(_to_logic(l), _to_logic(r))
        case Inter(l, r):
            return And(_to_logic(l), _to_logic(r))
        case Diff(l, r):
            return And(_to_logic(l), Not(_to_logic(r)))
        case SymDiff(l, r):
            # desugared first so the translation stays purely structural
            return _to_logic(Union(Diff(l, r), Diff(r, l)))
        case Complement(x):
            return Not(_to_logic(x))
        case FamUnion(i, S, body):
            return Exists(i, S, _to_logic(body))
        case FamInter(i, S, body):
            return Forall(i, S, _to_logic(body))
        case Product():
            raise PreconditionError("cartesian products translate through decide_product, not set_to_logic")
    raise TypeError(f"not a set expression: {e!r}")


def set_to_logic(s):
    """The formula that is a tautology exactly when the set statement is an identity."""
    match s:
        case SetEq(l, r):
            return Iff(_to_logic(l), _to_logic(r))
        case SetIncl(l, r):
            return Implies(_to_logic(l), _to_logic(r))
    raise PreconditionError("set_to_logic expects a set equality or inclusion")


def _to_sets(p):
    match p:
        case Atom(name, ()):
            return Var(set_name(name))
        case Atom(name, indices):
            return FamVar(set_name(name), indices)
        case Top():
            return UNIVERSE
        case Bottom():
            return EMPTY
        case Or(l, r):
            return Union(_to_sets(l), _to_sets(r))
        case And(l, r):
            return Inter(_to_sets(l), _to_sets(r))
        case Not(x):
            return Complement(_to_sets(x))
        case Implies(l, r):
            return Union(Complement(_to_sets(l)), _to_sets(r))
        case Iff(l, r):
            return Complement(SymDiff(_to_sets(l), _to_sets(r)))
        case Forall(i, S, body):
            return FamInter(i, S, _to_sets(body))
        case Exists(i, S, body):
            return FamUnion(i, S, _to_sets(body))
    raise TypeError(f"not a formula: {p!r}")


def logic_to_set(p):
    """Set statement equivalent to ``p`` being a tautology.

    A top-level ``<->`` becomes an equality of its two sides; any other formula
    must translate to the universe.  Statements (Taut, PropEquiv) are accepted too.
    """
    match p:
        case Taut(inner):
            return logic_to_set(inner)
        case PropEquiv(l, r) | Iff(l, r):
            return SetEq(_to_sets(l), _to_sets(r))
    return SetEq(_to_sets(p), UNIVERSE)


def _rename_witness(w: Witness) -> Witness:
    rename = lambda key: (atom_name(key[0]), key[1])  # noqa: E731
    assignment = None if w.assignment is None else {rename(k): v for k, v in w.assignment.items()}
    return Witness(
        universe=w.universe,
        extents={rename(k): v for k, v in w.extents.items()},
        index_sizes=w.index_sizes,
        assignment=assignment,
        note="the formula is false under this valuation",
    )


def decide_taut(p, dyadic_bound: int = DEFAULT_DYADIC_BOUND, allow_empty_index: bool = False) -> Verdict:
    """Decide whether ``p`` is a tautology by reducing it to a set identity."""
    s = logic_to_set(p)
    if has_families(s.l) or has_families(s.r):
        verdict = decide_indexed(s, dyadic_bound, allow_empty_index)
    else:
        verdict = decide_flat(s)
    if verdict.witness is None:
        return verdict
    return Verdict.invalid(_rename_witness(verdict.witness), verdict.method, verdict.cases)
