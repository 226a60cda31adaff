"""Decision by extreme cases.

An identity built from union, intersection and difference holds in every
universe exactly when it holds whenever each variable is empty or the whole
universe: a point lying in one side only never interacts with other points, so
shrinking the universe to that point loses nothing.  ``decide_flat`` checks
all ``2**n`` extreme assignments at once by packing them into the bits of one
integer.  ``decide_indexed`` extends this to indexed families by instantiating
each index set at every size up to a bound.

Enumeration order is fixed: symbols sorted, assignments counted in binary
with the first symbol as the most significant bit and empty (0) before
universe (1).  Reported witnesses are therefore the first failures in that
order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import BudgetExceeded, PreconditionError, UnsupportedError
from .semantics import eval_extreme, instances, size_combinations
from .syntax import (
    EMPTY, UNIVERSE, Diff, FamInter, FamUnion, FamVar, Instance, Inter, Product, SetEq,
    Union, Var, desugar, free_symbols, has_families, has_product, statement_has,
)
from .verdict import Method, Verdict, Witness

DEFAULT_DYADIC_BOUND = 4
# 2**24 assignments per integer keeps every column under 2 MiB.
MAX_SYMBOLS = 24


def columns(count: int) -> list[int]:
    """Packed truth-table columns for ``count`` symbols, first symbol most significant.

    Bit ``i`` of column ``j`` is bit ``count - 1 - j`` of ``i``.
    """
    total = 1 << count
    out = []
    for j in range(count):
        block = 1 << (count - 1 - j)
        unit = ((1 << block) - 1) << block
        out.append(unit * (((1 << total) - 1) // ((1 << (2 * block)) - 1)))
    return out


@dataclass(frozen=True)
class _Table:
    left: int
    right: int
    count: int  # number of symbols

    @property
    def cases(self) -> int:
        return 1 << self.count

    @property
    def first_failure(self) -> int | None:
        diff = self.left ^ self.right
        return (diff & -diff).bit_length() - 1 if diff else None

    def bits(self, i: int) -> tuple[int, int]:
        return self.left >> i & 1, self.right >> i & 1


def tabulate(left, right, names: list[str]) -> _Table:
    """Evaluate both sides on every extreme assignment of ``names`` simultaneously."""
    if len(names) > MAX_SYMBOLS:
        raise BudgetExceeded(f"{len(names)} symbols exceed the {MAX_SYMBOLS}-symbol enumeration ceiling")
    cols = columns(len(names))
    top = (1 << (1 << len(names))) - 1
    env = dict(zip(names, cols))
    return _Table(eval_extreme(left, env, top), eval_extreme(right, env, top), len(names))


def assignment_at(i: int, count: int) -> list[bool]:
    return [bool(i >> (count - 1 - j) & 1) for j in range(count)]


def _one_point_witness(keys: list[Instance], i: int, table: _Table, index_sizes=None) -> Witness:
    values = dict(zip(keys, assignment_at(i, len(keys))))
    left, right = table.bits(i)
    side, other = ("left", "right") if left else ("right", "left")
    return Witness(
        universe=("x",),
        extents={k: ("x",) if v else () for k, v in values.items()},
        index_sizes=dict(index_sizes or {}),
        assignment=values,
        note=f"x lies in the {side} side but not the {other}",
    )


def _flat_sides(s):
    d = desugar(s)
    if not isinstance(d, SetEq):
        raise PreconditionError("decide_flat handles set equalities and inclusions only")
    if statement_has(d, has_product):
        raise PreconditionError("statement contains a cartesian product; use decide_product")
    if statement_has(d, has_families):
        raise PreconditionError("statement contains indexed families; use decide_indexed")
    return d


def decide_flat(s) -> Verdict:
    """Decide a product-free, family-free set statement on its extreme assignments."""
    d = _flat_sides(s)
    names = list(free_symbols(d).variables)
    table = tabulate(d.l, d.r, names)
    i = table.first_failure
    if i is None:
        return Verdict.valid(Method.EXTREMES, table.cases)
    witness = _one_point_witness([(n, ()) for n in names], i, table)
    return Verdict.invalid(witness, Method.EXTREMES, table.cases)


@dataclass(frozen=True)
class CaseRow:
    assignment: dict[str, bool]
    left: int
    right: int

    @property
    def agrees(self) -> bool:
        return self.left == self.right


def explain(s) -> list[CaseRow]:
    """Full extreme-case table: one row per assignment, in enumeration order."""
    d = _flat_sides(s)
    names = list(free_symbols(d).variables)
    table = tabulate(d.l, d.r, names)
    return [
        CaseRow(dict(zip(names, assignment_at(i, len(names)))), *table.bits(i))
        for i in range(table.cases)
    ]


# ---------------------------------------------------------------------------
# indexed families


def _instance_var(key: Instance) -> str:
    # Internal names never parse as user variables, so they cannot collide.
    name, positions = key
    if not positions:
        return name
    return f"{name}[{','.join(f'{S}:{k}' for S, k in positions)}]"


def instantiate(e, sizes: dict[str, int], env=None):
    """Expand indexed unions and intersections over concrete index sets.

    Family members become plain variables; an empty index set gives the empty
    union and the universe as the empty intersection.
    """
    env = env or {}
    match e:
        case FamVar(name, indices):
            return Var(_instance_var((name, tuple(env[i] for i in indices))))
        case FamUnion(i, S, body) | FamInter(i, S, body):
            parts = [instantiate(body, sizes, {**env, i: (S, k)}) for k in range(1, sizes[S] + 1)]
            if isinstance(e, FamUnion):
                return reduce(Union, parts) if parts else EMPTY
            return reduce(Inter, parts) if parts else UNIVERSE
        case Union(l, r) | Inter(l, r) | Diff(l, r):
            return type(e)(instantiate(l, sizes, env), instantiate(r, sizes, env))
    return e


def monadic_bound(s) -> int:
    """Index-set size that suffices when every family is unary: 2**(number of families).

    Pointwise, each family is a unary predicate on its index set and there is
    no equality between indices, so any counterexample survives collapsing
    index elements with identical membership patterns; at most 2**k patterns
    exist.
    """
    return 2 ** len(free_symbols(s).families)


def decide_indexed(s, dyadic_bound: int = DEFAULT_DYADIC_BOUND, allow_empty_index: bool = False) -> Verdict:
    """Decide a product-free statement over indexed families of arity 1 or 2.

    With unary families only, every index-set size up to ``monadic_bound`` is
    checked and the verdict is complete.  With a binary family the sizes stop
    at ``dyadic_bound`` and a passing statement is only valid up to that bound.
    Index sets are nonempty unless ``allow_empty_index``.
    """
    d = desugar(s)
    if not isinstance(d, SetEq):
        raise PreconditionError("decide_indexed handles set equalities and inclusions only")
    if statement_has(d, has_product):
        raise PreconditionError("statement contains a cartesian product; use decide_product")
    syms = free_symbols(d)
    arities = {f.arity for f in syms.families}
    if any(a > 2 for a in arities):
        raise UnsupportedError("families of arity above 2 are not supported")
    dyadic = 2 in arities
    bound = dyadic_bound if dyadic else monadic_bound(d)
    low = 0 if allow_empty_index else 1
    cases = 0
    for sizes in size_combinations(syms.index_sets, low, bound):
        keys = instances(d, sizes)
        table = tabulate(instantiate(d.l, sizes), instantiate(d.r, sizes), [_instance_var(k) for k in keys])
        cases += table.cases
        i = table.first_failure
        if i is not None:
            witness = _one_point_witness(keys, i, table, sizes)
            return Verdict.invalid(witness, Method.EXTREMES if dyadic else Method.MONADIC_BOUND, cases)
    if dyadic:
        return Verdict.up_to_bound(bound, Method.EXTREMES, cases)
    return Verdict.valid(Method.MONADIC_BOUND, cases)


__all__ = [
    "CaseRow", "DEFAULT_DYADIC_BOUND", "columns", "decide_flat", "decide_indexed", "explain",
    "instantiate", "monadic_bound", "tabulate",
]
