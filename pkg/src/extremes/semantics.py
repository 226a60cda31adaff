"""Ground-truth evaluators and the brute-force model-checking oracle.

Three evaluators live here:

* ``eval_extreme`` computes a set expression when every variable is either the
  empty set (0) or the universe (1), using the two-element table for union,
  intersection and difference.  Bits are combined with ``| & ^`` only, so the
  same function evaluates one assignment (``top=1``) or many assignments packed
  side by side into one integer (``top=2**N - 1``).
* ``eval_model`` evaluates pointwise in a finite model whose sets are bitmasks
  over points ``x1..xn``.  Product nodes yield bitmasks over point pairs.
  Extensions may be Python ints or numpy integer arrays; the oracle relies on
  the latter to evaluate a whole batch of models at once.
* ``eval_prop`` is the truth-functional evaluator for formulas.

``check_by_model`` enumerates every model up to a size and is deliberately
independent of the extremes engine: it never consults ``eval_extreme``.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import OracleBudgetExceeded, PreconditionError
from .syntax import (
    And, Atom, Bottom, Complement, Diff, Empty, Exists, FamInter, FamUnion, FamVar, Forall,
    Iff, Implies, Instance, Inter, Not, Or, Product, PropEquiv, SetEq, SetIncl, SymDiff, Taut,
    Top, Union, Universe, Var, free_symbols, is_set_statement, rank, sides,
)
from .verdict import Method, Verdict, Witness

DEFAULT_MAX_UNIVERSE = 3
DEFAULT_MAX_INDEX = 3
DEFAULT_BUDGET = 10**7
_CHUNK = 1 << 16


class MissingExtension(KeyError):
    pass


class UnsupportedNode(PreconditionError):
    """eval_extreme met a node outside union/intersection/difference."""


# ---------------------------------------------------------------------------
# extreme evaluation


def eval_extreme(e, assignment: Mapping[str, int], top: int = 1) -> int:
    """Value of ``e`` when each variable is 0 (empty) or ``top`` (universe).

    ``e`` must be desugared, product-free and family-free.
    """
    match e:
        case Var(name):
            try:
                return assignment[name]
            except KeyError:
                raise MissingExtension(name) from None
        case Empty():
            return 0
        case Universe():
            return top
        case Union(l, r):
            return eval_extreme(l, assignment, top) | eval_extreme(r, assignment, top)
        case Inter(l, r):
            return eval_extreme(l, assignment, top) & eval_extreme(r, assignment, top)
        case Diff(l, r):
            return eval_extreme(l, assignment, top) & (top ^ eval_extreme(r, assignment, top))
    raise UnsupportedNode(
        f"{type(e).__name__} is not evaluated on extreme assignments; desugar it or use another decider"
    )


# ---------------------------------------------------------------------------
# finite models


@dataclass
class FiniteModel:
    """A universe of ``size`` points with an extension for every symbol instance.

    Extensions are bitmasks: bit ``i`` stands for point ``i + 1``.
    """

    size: int
    extents: dict[Instance, object]
    index_sizes: dict[str, int] = field(default_factory=dict)
    points: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("the universe is never empty")
        if self.points is None:
            self.points = tuple(f"x{i}" for i in range(1, self.size + 1))
        if len(self.points) != self.size:
            raise ValueError("one name per point")
        for key, mask in self.extents.items():
            if isinstance(mask, int) and not 0 <= mask <= self.full:
                raise ValueError(f"extension of {key} leaves the universe")

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def members(self, mask: int) -> tuple[str, ...]:
        return tuple(p for i, p in enumerate(self.points) if mask >> i & 1)

    def pairs(self, mask: int) -> tuple[tuple[str, str], ...]:
        n = self.size
        return tuple(
            (self.points[k // n], self.points[k % n]) for k in range(n * n) if mask >> k & 1
        )


def eval_model(e, m: FiniteModel):
    """Pointwise value of ``e`` in ``m``: a point bitmask, or a pair bitmask for products."""
    return _eval(e, m, {}, m.full)


def _lookup(m: FiniteModel, key: Instance):
    try:
        return m.extents[key]
    except KeyError:
        raise MissingExtension(key) from None


def _eval(e, m, env, full):
    match e:
        case Var(name):
            return _lookup(m, (name, ()))
        case FamVar(name, indices):
            return _lookup(m, (name, tuple(env[i] for i in indices)))
        case Empty():
            return 0
        case Universe():
            return full
        case Union(l, r):
            return _eval(l, m, env, full) | _eval(r, m, env, full)
        case Inter(l, r):
            return _eval(l, m, env, full) & _eval(r, m, env, full)
        case Diff(l, r):
            # l ^ (l & r) needs no mask, so it works for points and pairs alike
            left = _eval(l, m, env, full)
            return left ^ (left & _eval(r, m, env, full))
        case SymDiff(l, r):
            return _eval(l, m, env, full) ^ _eval(r, m, env, full)
        case Complement(x):
            return full ^ _eval(x, m, env, full)
        case Product(l, r):
            left, right = _eval(l, m, env, full), _eval(r, m, env, full)
            n = m.size
            out = 0
            for i in range(n):
                out = out | ((left >> i) & 1) * (right << (i * n))
            return out
        case FamUnion(i, S, body):
            out = 0
            for k in range(1, _index_size(m, S) + 1):
                out = out | _eval(body, m, {**env, i: (S, k)}, full)
            return out
        case FamInter(i, S, body):
            out = full
            for k in range(1, _index_size(m, S) + 1):
                out = out & _eval(body, m, {**env, i: (S, k)}, full)
            return out
    raise TypeError(f"not a set expression: {e!r}")


def _index_size(m: FiniteModel, S: str) -> int:
    try:
        return m.index_sizes[S]
    except KeyError:
        raise MissingExtension(S) from None


# ---------------------------------------------------------------------------
# formulas


def eval_prop(p, truth: Mapping[Instance, object], index_sizes: Mapping[str, int] | None = None, env=None):
    """Truth value of ``p``; quantifiers range over ``1..index_sizes[S]``.

    Values may be bools or numpy boolean arrays (one entry per valuation).
    """
    sizes = index_sizes or {}
    env = env or {}
    match p:
        case Atom(name, indices):
            key = (name, tuple(env[i] for i in indices))
            try:
                return truth[key]
            except KeyError:
                raise MissingExtension(key) from None
        case Top():
            return True
        case Bottom():
            return False
        case Or(l, r):
            return eval_prop(l, truth, sizes, env) | eval_prop(r, truth, sizes, env)
        case And(l, r):
            return eval_prop(l, truth, sizes, env) & eval_prop(r, truth, sizes, env)
        case Not(x):
            return eval_prop(x, truth, sizes, env) ^ True
        case Implies(l, r):
            return (eval_prop(l, truth, sizes, env) ^ True) | eval_prop(r, truth, sizes, env)
        case Iff(l, r):
            return (eval_prop(l, truth, sizes, env) ^ eval_prop(r, truth, sizes, env)) ^ True
        case Forall(i, S, body):
            out = True
            for k in range(1, sizes.get(S, 0) + 1):
                out = out & eval_prop(body, truth, sizes, {**env, i: (S, k)})
            return out
        case Exists(i, S, body):
            out = False
            for k in range(1, sizes.get(S, 0) + 1):
                out = out | eval_prop(body, truth, sizes, {**env, i: (S, k)})
            return out
    raise TypeError(f"not a formula: {p!r}")


# ---------------------------------------------------------------------------
# symbol instances


def instances(s, index_sizes: Mapping[str, int]) -> list[Instance]:
    """Every plain symbol and family instance of ``s`` under the given index-set sizes, sorted."""
    syms = free_symbols(s)
    out: list[Instance] = [(v, ()) for v in syms.variables]
    for fam in syms.families:
        ranges = [[(S, k) for k in range(1, index_sizes[S] + 1)] for S in fam.index_sets]
        out.extend((fam.name, combo) for combo in itertools.product(*ranges))
    return sorted(out)


def size_combinations(index_sets, low: int, high: int) -> list[dict[str, int]]:
    """All size assignments for ``index_sets``, smallest total first."""
    combos = itertools.product(range(low, high + 1), repeat=len(index_sets))
    ordered = sorted(combos, key=lambda c: (sum(c), c))
    return [dict(zip(index_sets, c)) for c in ordered]


# ---------------------------------------------------------------------------
# the oracle


def _holds(s, values):
    """Per-model truth of the statement given the evaluated sides."""
    match s:
        case SetEq() | PropEquiv():
            return values[0] == values[1]
        case SetIncl():
            return (values[0] & values[1]) == values[0]
        case Taut():
            return values[0] == True  # noqa: E712 -- elementwise on arrays
    raise TypeError(s)


@dataclass(frozen=True)
class _Block:
    universe: int
    sizes: dict
    symbols: list
    count: int


def _blocks(s, max_universe, max_index, min_index) -> list[_Block]:
    syms = free_symbols(s)
    combos = size_combinations(syms.index_sets, min_index, max_index)
    universes = range(1, max_universe + 1) if is_set_statement(s) else (1,)
    out = []
    for n in universes:
        for sizes in combos:
            symbols = instances(s, sizes)
            out.append(_Block(n, sizes, symbols, 2 ** (n * len(symbols))))
    return out


def _failure_in(s, block: _Block, start: int, stop: int) -> int | None:
    n, symbols = block.universe, block.symbols
    full = (1 << n) - 1
    idx = np.arange(start, stop, dtype=np.uint64)
    count = len(symbols)
    if is_set_statement(s):
        extents = {
            sym: (idx >> np.uint64(n * (count - 1 - j))) & np.uint64(full)
            for j, sym in enumerate(symbols)
        }
        model = FiniteModel(n, extents, block.sizes)
        values = [eval_model(side, model) for side in sides(s)]
    else:
        truth = {
            sym: ((idx >> np.uint64(count - 1 - j)) & np.uint64(1)).astype(bool)
            for j, sym in enumerate(symbols)
        }
        values = [eval_prop(side, truth, block.sizes) for side in sides(s)]
    ok = np.broadcast_to(np.asarray(_holds(s, values)), idx.shape)
    bad = np.flatnonzero(~ok)
    return int(start + bad[0]) if bad.size else None


def _decode(block: _Block, code: int) -> dict[Instance, int]:
    n, count = block.universe, len(block.symbols)
    full = (1 << n) - 1
    return {sym: (code >> (n * (count - 1 - j))) & full for j, sym in enumerate(block.symbols)}


def _witness(s, block: _Block, code: int) -> Witness:
    masks = _decode(block, code)
    if not is_set_statement(s):
        truth = {k: bool(v) for k, v in masks.items()}
        return Witness(
            universe=("x",),
            extents={k: ("x",) if v else () for k, v in truth.items()},
            index_sizes=dict(block.sizes),
            assignment=truth,
            note="the formula is false under this valuation",
        )
    model = FiniteModel(block.universe, masks, dict(block.sizes))
    left, right = (int(v) for v in (eval_model(side, model) for side in sides(s)))
    assignment = {k: bool(v) for k, v in masks.items()} if block.universe == 1 else None
    return Witness(
        universe=model.points,
        extents={k: model.members(v) for k, v in masks.items()},
        index_sizes=dict(block.sizes),
        assignment=assignment,
        note=_difference_note(s, model, left, right),
    )


def _difference_note(s, model: FiniteModel, left: int, right: int) -> str:
    pair = max(rank(side) for side in sides(s)) == 2
    extra = left & ~right
    if isinstance(s, SetEq) and not extra:
        extra, where = right & ~left, "right"
    else:
        where = "left"
    other = "right" if where == "left" else "left"
    if pair:
        member = "(" + ",".join(model.pairs(extra & -extra)[0]) + ")"
    else:
        member = model.members(extra & -extra)[0]
    return f"{member} lies in the {where} side but not the {other}"


def check_by_model(
    s,
    max_universe: int = DEFAULT_MAX_UNIVERSE,
    max_index: int = DEFAULT_MAX_INDEX,
    budget: int = DEFAULT_BUDGET,
    min_index: int = 1,
    jobs: int = 1,
) -> Verdict:
    """Decide ``s`` by enumerating every model up to the given sizes.

    Universes have 1..max_universe points and index sets min_index..max_index
    elements; formulas are checked by full truth tables.  The first falsifying
    model in enumeration order is reported, whatever ``jobs`` is.  Raises
    OracleBudgetExceeded before doing any work if the model count would pass
    ``budget``.
    """
    if is_set_statement(s) and len({rank(side) for side in sides(s)} - {0}) > 1:
        raise PreconditionError("the two sides compare point sets with pair sets")
    blocks = _blocks(s, max_universe, max_index, min_index)
    total = sum(b.count for b in blocks)
    if total > budget:
        raise OracleBudgetExceeded(f"oracle budget exceeded: {total} models > {budget}")
    pool = ThreadPoolExecutor(jobs) if jobs > 1 else None
    try:
        for block in blocks:
            spans = [(a, min(a + _CHUNK, block.count)) for a in range(0, block.count, _CHUNK)]
            if pool is None:
                hits = (_failure_in(s, block, a, b) for a, b in spans)
            else:
                hits = pool.map(lambda ab: _failure_in(s, block, *ab), spans)
            for hit in hits:
                if hit is not None:
                    return Verdict.invalid(_witness(s, block, hit), Method.TRUTH_TABLE, total)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return Verdict.valid(Method.TRUTH_TABLE, total)


# ---------------------------------------------------------------------------
# witness replay


def witness_model(w: Witness) -> FiniteModel:
    pos = {p: i for i, p in enumerate(w.universe)}
    extents = {k: sum(1 << pos[p] for p in pts) for k, pts in w.extents.items()}
    return FiniteModel(len(w.universe), extents, dict(w.index_sizes), tuple(w.universe))


def refutes(s, w: Witness) -> bool:
    """True when re-evaluating ``s`` on the witness really falsifies it."""
    if is_set_statement(s):
        model = witness_model(w)
        values = [int(eval_model(side, model)) for side in sides(s)]
    else:
        if w.assignment is None:
            return False
        values = [bool(eval_prop(side, w.assignment, w.index_sizes)) for side in sides(s)]
    return not bool(_holds(s, values))
