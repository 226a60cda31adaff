"""Equalities between sets of pairs.

A pair ``(a, b)`` lies in ``C * D`` exactly when ``a`` lies in ``C`` and ``b``
lies in ``D``.  Following one generic pair through both sides therefore turns
a product equality into a formula over the atoms "a in V" and "b in V".
Every valuation of those atoms is realised by some two-point universe, so
checking all valuations decides the equality exactly.  This is
``decide_product``.

``reduce_product`` is the shortcut available when no variable appears in both
coordinates: then ``*`` may simply be read as ``&`` and the result handed to
the one-point extremes engine.
"""
from __future__ import annotations

from .engine import tabulate
from .errors import CoordinateDependenceError, UnsupportedError
from .parser import render_set
from .syntax import (
    Diff, Empty, Inter, Product, SetEq, SetIncl, SymDiff, Union, Var,
    Violation, desugar, free_symbols, has_families, has_product, walk,
)
from .verdict import Method, Verdict, Witness

_OP_NAMES = {Union: "union", Inter: "intersection", Diff: "difference"}


def _rank2_violations(e, out: list[Violation]):
    match e:
        case Product(l, r):
            for operand in (l, r):
                if has_product(operand):
                    out.append(Violation("nested-product", f"product operand {render_set(operand)} contains a product", True))
                elif has_families(operand):
                    out.append(Violation("family-in-product", f"product operand {render_set(operand)} uses indexed families", True))
        case Empty():
            pass
        case Union(l, r) | Inter(l, r) | Diff(l, r):
            point_side = [x for x in (l, r) if not has_product(x) and not isinstance(x, Empty)]
            if point_side:
                out.append(Violation(
                    "mixed-rank",
                    f"mixed-rank {_OP_NAMES[type(e)]}: {render_set(e)} combines pairs with points",
                    True,
                ))
                return
            _rank2_violations(l, out)
            _rank2_violations(r, out)
        case _:
            out.append(Violation("mixed-rank", f"{render_set(e)} is not a set of pairs", True))


def product_flat(s) -> list[Violation]:
    """Violations of the product normal form; an empty list means ``s`` is product-flat.

    Both sides must be unions, intersections and differences of binary
    products whose operands contain no products or families (0 may stand for
    the empty set of pairs).
    """
    d = desugar(s)
    if not isinstance(d, SetEq):
        return [Violation("statement", "only set equalities and inclusions compare products")]
    if not (has_product(d.l) or has_product(d.r)):
        return [Violation("no-product", "the statement contains no cartesian product")]
    out: list[Violation] = []
    for side in (d.l, d.r):
        if not has_product(side) and not isinstance(side, Empty):
            out.append(Violation("mixed-rank", f"mixed-rank equality: {render_set(side)} is a set of points", True))
        else:
            _rank2_violations(side, out)
    return out


def _coordinates(s) -> tuple[set[str], set[str]]:
    first: set[str] = set()
    second: set[str] = set()
    for side in (desugar(s).l, desugar(s).r):
        for node in walk(side):
            if isinstance(node, Product):
                first |= {n.name for n in walk(node.l) if isinstance(n, Var)}
                second |= {n.name for n in walk(node.r) if isinstance(n, Var)}
    return first, second


def independence_check(s) -> bool:
    """True when no variable occurs in both a first and a second coordinate."""
    first, second = _coordinates(s)
    return not (first & second)


def _require_flat(s):
    problems = product_flat(s)
    if problems:
        raise UnsupportedError("; ".join(str(v) for v in problems), problems)


def _replace_products(e):
    match e:
        case Product(l, r):
            return Inter(l, r)
        case Union(l, r) | Inter(l, r) | Diff(l, r) | SymDiff(l, r):
            return type(e)(_replace_products(l), _replace_products(r))
    return e


def reduce_product(s):
    """Read every ``*`` as ``&``; valid only when the coordinates are independent."""
    _require_flat(s)
    if not independence_check(s):
        first, second = _coordinates(s)
        shared = ", ".join(sorted(first & second))
        raise CoordinateDependenceError(
            f"reading * as & is unsound here: {shared} occur in both coordinates"
        )
    return type(s)(_replace_products(s.l), _replace_products(s.r))


def _tag(e, point: str):
    match e:
        case Var(name):
            return Var(f"{name}#{point}")
        case Union(l, r) | Inter(l, r) | Diff(l, r):
            return type(e)(_tag(l, point), _tag(r, point))
    return e


def pointwise(e):
    """Membership of the generic pair (a, b) in a product-flat side, as a one-point expression."""
    match e:
        case Product(l, r):
            return Inter(_tag(l, "a"), _tag(r, "b"))
        case Union(l, r) | Inter(l, r) | Diff(l, r):
            return type(e)(pointwise(l), pointwise(r))
    return e


def decide_product(s) -> Verdict:
    """Decide a product-flat equality by following a generic pair (a, b) through both sides."""
    _require_flat(s)
    d = desugar(s)
    variables = free_symbols(d).variables
    # "#" sorts before every identifier character, so this is variable-major order
    atoms = sorted(f"{v}#{p}" for v in variables for p in "ab")
    table = tabulate(pointwise(d.l), pointwise(d.r), atoms)
    i = table.first_failure
    if i is None:
        return Verdict.valid(Method.TWO_POINT, table.cases)
    members: dict[tuple, tuple[str, ...]] = {(v, ()): () for v in variables}
    for j, atom in enumerate(atoms):
        if i >> (len(atoms) - 1 - j) & 1:
            name, point = atom.split("#")
            members[(name, ())] += (point,)
    left, _ = table.bits(i)
    side, other = ("left", "right") if left else ("right", "left")
    witness = Witness(
        universe=("a", "b"),
        extents=members,
        note=f"(a,b) lies in the {side} side but not the {other}",
    )
    return Verdict.invalid(witness, Method.TWO_POINT, table.cases)


def is_product_statement(s) -> bool:
    return isinstance(s, (SetEq, SetIncl)) and (has_product(s.l) or has_product(s.r))


__all__ = [
    "decide_product", "independence_check", "is_product_statement", "pointwise",
    "product_flat", "reduce_product",
]
