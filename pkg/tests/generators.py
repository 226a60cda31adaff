"""Seeded random statements and hypothesis strategies for the test suite."""
from __future__ import annotations

import random

from hypothesis import strategies as st

from extremes.syntax import (
    EMPTY, FALSE, TRUE, UNIVERSE, And, Atom, Complement, Diff, Exists, FamInter, FamUnion,
    FamVar, Forall, Iff, Implies, Inter, Not, Or, Product, PropEquiv, SetEq, SetIncl,
    SymDiff, Taut, Union, Var, well_formed,
)

SET_NAMES = ["A", "B", "C", "D", "E"]
ATOM_NAMES = ["p", "q", "r", "s1", "t"]
FLAT_BINARY = [Union, Inter, Diff, SymDiff]
POINT_BINARY = [Union, Inter, Diff]


def flat_expr(rng: random.Random, depth: int, names=SET_NAMES[:4]):
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.08:
            return EMPTY
        if roll < 0.16:
            return UNIVERSE
        return Var(rng.choice(names))
    if rng.random() < 0.15:
        return Complement(flat_expr(rng, depth - 1, names))
    op = rng.choice(FLAT_BINARY)
    return op(flat_expr(rng, depth - 1, names), flat_expr(rng, depth - 1, names))


def flat_statement(rng: random.Random, depth: int = 5, variables: int = 4):
    names = SET_NAMES[:variables]
    kind = SetIncl if rng.random() < 0.2 else SetEq
    left = flat_expr(rng, depth, names)
    # about a third of the time derive the right side from the left so valid cases show up
    if rng.random() < 0.35:
        right = _perturb(rng, left)
    else:
        right = flat_expr(rng, depth, names)
    return kind(left, right)


def _perturb(rng, e):
    rewrites = [
        lambda x: Union(x, EMPTY),
        lambda x: Inter(x, x),
        lambda x: Complement(Complement(x)),
        lambda x: Diff(x, Diff(x, x)),
        lambda x: SymDiff(x, EMPTY),
    ]
    match e:
        case Union(l, r) if rng.random() < 0.5:
            return Union(r, l)
        case Inter(l, r) if rng.random() < 0.5:
            return Inter(r, l)
        case Diff(l, r) if rng.random() < 0.3:
            return Diff(r, l)  # usually breaks the identity
    return rng.choice(rewrites)(e)


def _point_operand(rng, names, depth=2):
    if depth <= 0 or rng.random() < 0.5:
        return Var(rng.choice(names))
    return rng.choice(POINT_BINARY)(_point_operand(rng, names, depth - 1), _point_operand(rng, names, depth - 1))


def product_side(rng: random.Random, depth: int = 2, names=SET_NAMES[:3]):
    if depth <= 0 or rng.random() < 0.4:
        return Product(_point_operand(rng, names), _point_operand(rng, names))
    return rng.choice(POINT_BINARY)(product_side(rng, depth - 1, names), product_side(rng, depth - 1, names))


def product_statement(rng: random.Random, variables: int = 3):
    names = SET_NAMES[:variables]
    left = product_side(rng, 2, names)
    if rng.random() < 0.3:
        # swapping coordinates or adding an empty product; only the latter is always harmless
        x = Var(names[0])
        right = _swap_products(left) if rng.random() < 0.5 else Union(left, Product(Diff(x, x), x))
    else:
        right = product_side(rng, 2, names)
    return SetEq(left, right)


def _swap_products(e):
    match e:
        case Product(l, r):
            return Product(r, l)
        case Union(l, r) | Inter(l, r) | Diff(l, r):
            return type(e)(_swap_products(l), _swap_products(r))
    return e


def monadic_expr(rng: random.Random, depth: int, families, plain, scope=()):
    """Flat operators plus Union/Inter binders over S; families are read at the bound index."""
    if depth <= 0 or rng.random() < 0.2:
        if scope and families and rng.random() < 0.7:
            return FamVar(rng.choice(families), (rng.choice(scope),))
        return Var(rng.choice(plain))
    roll = rng.random()
    if roll < 0.35 and len(scope) < 1:
        binder = FamUnion if rng.random() < 0.5 else FamInter
        return binder("s", "S", monadic_expr(rng, depth - 1, families, plain, scope + ("s",)))
    if roll < 0.45:
        return Complement(monadic_expr(rng, depth - 1, families, plain, scope))
    op = rng.choice(FLAT_BINARY)
    return op(monadic_expr(rng, depth - 1, families, plain, scope), monadic_expr(rng, depth - 1, families, plain, scope))


def monadic_statement(rng: random.Random, depth: int = 3):
    families = ["A", "B"][: rng.choice([1, 1, 2])]
    plain = ["C", "D"][: rng.choice([0, 1]) + 1]
    while True:
        left = monadic_expr(rng, depth, families, plain)
        right = _perturb(rng, left) if rng.random() < 0.4 else monadic_expr(rng, depth, families, plain)
        s = SetEq(left, right)
        if not well_formed(s):
            return s


def prop_expr(rng: random.Random, depth: int, names=ATOM_NAMES[:3]):
    if depth <= 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.05:
            return TRUE
        if roll < 0.1:
            return FALSE
        return Atom(rng.choice(names))
    if rng.random() < 0.2:
        return Not(prop_expr(rng, depth - 1, names))
    op = rng.choice([And, Or, Implies, Iff])
    return op(prop_expr(rng, depth - 1, names), prop_expr(rng, depth - 1, names))


def prop_statement(rng: random.Random, depth: int = 4):
    return Taut(prop_expr(rng, depth))


def _general_set(rng, depth, scope, fams):
    if depth <= 0 or rng.random() < 0.2:
        if scope and rng.random() < 0.5:
            name = rng.choice(fams)
            arity = 2 if name == "P" and len(scope) >= 2 else 1
            idx = tuple(rng.sample(list(scope), arity)) if arity == 2 else (scope[-1],)
            if name == "P" and arity == 1:
                name = "A"
            return FamVar(name, idx if name != "A" else (scope[-1],))
        return rng.choice([EMPTY, UNIVERSE, Var(rng.choice(["X", "Y", "Z1"]))])
    roll = rng.random()
    if roll < 0.2 and len(scope) < 2:
        index, index_set = ("s", "S") if not scope else ("t", "T")
        binder = FamUnion if rng.random() < 0.5 else FamInter
        return binder(index, index_set, _general_set(rng, depth - 1, scope + (index,), fams))
    if roll < 0.3:
        return Complement(_general_set(rng, depth - 1, scope, fams))
    op = rng.choice(FLAT_BINARY)
    return op(_general_set(rng, depth - 1, scope, fams), _general_set(rng, depth - 1, scope, fams))


def _general_prop(rng, depth, scope):
    if depth <= 0 or rng.random() < 0.2:
        if scope and rng.random() < 0.5:
            if len(scope) == 2 and rng.random() < 0.5:
                return Atom("r", tuple(scope))
            return Atom("q", (scope[-1],))
        return rng.choice([TRUE, FALSE, Atom(rng.choice(["p", "p2", "x"]))])
    roll = rng.random()
    if roll < 0.2 and len(scope) < 2:
        index, index_set = ("s", "S") if not scope else ("t", "T")
        binder = Forall if rng.random() < 0.5 else Exists
        return binder(index, index_set, _general_prop(rng, depth - 1, scope + (index,)))
    if roll < 0.35:
        return Not(_general_prop(rng, depth - 1, scope))
    op = rng.choice([And, Or, Implies, Iff])
    return op(_general_prop(rng, depth - 1, scope), _general_prop(rng, depth - 1, scope))


def general_statement(rng: random.Random, depth: int = 6):
    """Any well-formed statement: flat, indexed, product-flat or logical."""
    while True:
        roll = rng.random()
        if roll < 0.3:
            s = flat_statement(rng, depth, 5)
        elif roll < 0.5:
            kind = SetIncl if rng.random() < 0.3 else SetEq
            s = kind(_general_set(rng, depth, (), ["A", "P"]), _general_set(rng, depth, (), ["A", "P"]))
        elif roll < 0.6:
            s = product_statement(rng)
        elif roll < 0.9:
            s = Taut(_general_prop(rng, depth, ()))
        else:
            l, r = _general_prop(rng, depth - 1, ()), _general_prop(rng, depth - 1, ())
            s = PropEquiv(l, r)
        if not well_formed(s):
            return s


def seeds(name: str, count: int):
    """Deterministic generators, one per case."""
    base = random.Random(name)
    return [random.Random(base.getrandbits(64)) for _ in range(count)]


# hypothesis wrappers: draw a seed and build from it so shrinking stays cheap
flat_statements = st.integers(0, 2**32).map(lambda n: flat_statement(random.Random(n)))
small_flat = st.integers(0, 2**32).map(lambda n: flat_statement(random.Random(n), depth=3, variables=3))
product_statements = st.integers(0, 2**32).map(lambda n: product_statement(random.Random(n)))
monadic_statements = st.integers(0, 2**32).map(lambda n: monadic_statement(random.Random(n)))
prop_statements = st.integers(0, 2**32).map(lambda n: prop_statement(random.Random(n)))
general_statements = st.integers(0, 2**32).map(lambda n: general_statement(random.Random(n)))
