"""Term languages: set expressions, propositional formulas and statements.

All nodes are frozen dataclasses, so structural equality and hashing come for
free and values can be shared freely between threads.  Set expressions support
operator sugar (``A | B``, ``A & B``, ``A - B``, ``A ^ B``, ``A * B``, ``~A``)
which is handy in tests and interactive use.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

# (family name, ((index set, position), ...)) -- plain variables have ().
Instance = tuple[str, tuple[tuple[str, int], ...]]

SET_NAME = re.compile(r"[A-Z][A-Za-z0-9]*\Z")
LOWER_NAME = re.compile(r"[a-z][A-Za-z0-9]*\Z")
SET_KEYWORDS = frozenset({"Union", "Inter"})
LOGIC_KEYWORDS = frozenset({"forall", "exists", "in", "true", "false"})

MAX_ARITY = 2
MAX_INDEX_VARIABLES = 2


class SetExpr:
    __slots__ = ()

    def __or__(self, other):
        return Union(self, other)

    def __and__(self, other):
        return Inter(self, other)

    def __sub__(self, other):
        return Diff(self, other)

    def __xor__(self, other):
        return SymDiff(self, other)

    def __mul__(self, other):
        return Product(self, other)

    def __invert__(self):
        return Complement(self)


@dataclass(frozen=True, slots=True)
class Var(SetExpr):
    name: str


@dataclass(frozen=True, slots=True)
class Empty(SetExpr):
    pass


@dataclass(frozen=True, slots=True)
class Universe(SetExpr):
    pass


@dataclass(frozen=True, slots=True)
class Union(SetExpr):
    l: SetExpr
    r: SetExpr


@dataclass(frozen=True, slots=True)
class Inter(SetExpr):
    l: SetExpr
    r: SetExpr


@dataclass(frozen=True, slots=True)
class Diff(SetExpr):
    l: SetExpr
    r: SetExpr


@dataclass(frozen=True, slots=True)
class SymDiff(SetExpr):
    l: SetExpr
    r: SetExpr


@dataclass(frozen=True, slots=True)
class Complement(SetExpr):
    e: SetExpr


@dataclass(frozen=True, slots=True)
class Product(SetExpr):
    l: SetExpr
    r: SetExpr


@dataclass(frozen=True, slots=True)
class FamUnion(SetExpr):
    index: str
    index_set: str
    body: SetExpr


@dataclass(frozen=True, slots=True)
class FamInter(SetExpr):
    index: str
    index_set: str
    body: SetExpr


@dataclass(frozen=True, slots=True)
class FamVar(SetExpr):
    name: str
    indices: tuple[str, ...]


EMPTY = Empty()
UNIVERSE = Universe()

SET_BINARY = (Union, Inter, Diff, SymDiff, Product)
SET_BINDERS = (FamUnion, FamInter)


class PropExpr:
    __slots__ = ()

    def __or__(self, other):
        return Or(self, other)

    def __and__(self, other):
        return And(self, other)

    def __invert__(self):
        return Not(self)

    def __rshift__(self, other):
        return Implies(self, other)


@dataclass(frozen=True, slots=True)
class Atom(PropExpr):
    name: str
    indices: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class Top(PropExpr):
    pass


@dataclass(frozen=True, slots=True)
class Bottom(PropExpr):
    pass


@dataclass(frozen=True, slots=True)
class Or(PropExpr):
    l: PropExpr
    r: PropExpr


@dataclass(frozen=True, slots=True)
class And(PropExpr):
    l: PropExpr
    r: PropExpr


@dataclass(frozen=True, slots=True)
class Not(PropExpr):
    e: PropExpr


@dataclass(frozen=True, slots=True)
class Implies(PropExpr):
    l: PropExpr
    r: PropExpr


@dataclass(frozen=True, slots=True)
class Iff(PropExpr):
    l: PropExpr
    r: PropExpr


@dataclass(frozen=True, slots=True)
class Forall(PropExpr):
    index: str
    index_set: str
    body: PropExpr


@dataclass(frozen=True, slots=True)
class Exists(PropExpr):
    index: str
    index_set: str
    body: PropExpr


TRUE = Top()
FALSE = Bottom()

PROP_BINARY = (Or, And, Implies, Iff)
PROP_BINDERS = (Forall, Exists)


@dataclass(frozen=True, slots=True)
class SetEq:
    l: SetExpr
    r: SetExpr


@dataclass(frozen=True, slots=True)
class SetIncl:
    l: SetExpr
    r: SetExpr


@dataclass(frozen=True, slots=True)
class Taut:
    p: PropExpr


@dataclass(frozen=True, slots=True)
class PropEquiv:
    l: PropExpr
    r: PropExpr


Statement = SetEq | SetIncl | Taut | PropEquiv
Expr = SetExpr | PropExpr


def is_set_statement(s) -> bool:
    return isinstance(s, (SetEq, SetIncl))


def sides(s) -> tuple:
    """The expressions making up a statement, left to right."""
    if isinstance(s, Taut):
        return (s.p,)
    return (s.l, s.r)


def children(e) -> tuple:
    if isinstance(e, SET_BINARY + PROP_BINARY):
        return (e.l, e.r)
    if isinstance(e, (Complement, Not)):
        return (e.e,)
    if isinstance(e, SET_BINDERS + PROP_BINDERS):
        return (e.body,)
    return ()


def walk(e) -> Iterator:
    """Pre-order traversal of an expression tree."""
    stack = [e]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(children(node)))


def size(e) -> int:
    return sum(1 for _ in walk(e))


def is_binder(e) -> bool:
    return isinstance(e, SET_BINDERS + PROP_BINDERS)


def indexed_leaves(e, env=None) -> Iterator[tuple[object, dict[str, str]]]:
    """Yield every leaf together with the index-variable -> index-set scope it sits in."""
    env = {} if env is None else env
    if is_binder(e):
        yield from indexed_leaves(e.body, {**env, e.index: e.index_set})
        return
    kids = children(e)
    if not kids:
        yield e, env
    for kid in kids:
        yield from indexed_leaves(kid, env)


def has_product(e) -> bool:
    return any(isinstance(n, Product) for n in walk(e))


def has_families(e) -> bool:
    return any(isinstance(n, (FamVar,) + SET_BINDERS) for n in walk(e))


def statement_has(s, predicate) -> bool:
    return any(predicate(side) for side in sides(s))


def rank(e: SetExpr) -> int:
    """1 for point sets, 2 for pair sets; Empty is rank-polymorphic (reported as 0)."""
    if isinstance(e, Product):
        return 2
    if isinstance(e, Empty):
        return 0
    if isinstance(e, (Union, Inter, Diff, SymDiff)):
        return max(rank(e.l), rank(e.r))
    return 1


def point_name(index_set: str, position: int) -> str:
    """Name of the ``position``-th element of an index set: S -> s1, s2, ..."""
    base = index_set.lower()
    return f"{base}_{position}" if base[-1].isdigit() else f"{base}{position}"


def render_instance(inst: Instance) -> str:
    name, positions = inst
    if not positions:
        return name
    return f"{name}[{','.join(point_name(S, k) for S, k in positions)}]"


# ---------------------------------------------------------------------------
# symbols


@dataclass(frozen=True)
class Family:
    name: str
    arity: int
    index_sets: tuple[str, ...]

    def __str__(self):
        return f"{self.name}/{self.arity} over {' x '.join(self.index_sets)}"


@dataclass(frozen=True)
class Symbols:
    variables: tuple[str, ...]
    families: tuple[Family, ...]
    index_sets: tuple[str, ...]

    def __iter__(self):
        yield from self.variables
        yield from self.families
        yield from self.index_sets


def free_symbols(s) -> Symbols:
    """Variables, families and index sets of a well-formed statement, each once, sorted."""
    variables: set[str] = set()
    families: dict[str, Family] = {}
    index_sets: set[str] = set()
    for side in sides(s):
        for node in walk(side):
            if is_binder(node):
                index_sets.add(node.index_set)
        for leaf, env in indexed_leaves(side):
            if isinstance(leaf, (Var, Atom)) and not getattr(leaf, "indices", ()):
                variables.add(leaf.name)
            elif isinstance(leaf, (FamVar, Atom)):
                if leaf.name not in families:
                    sets = tuple(env.get(i, "?") for i in leaf.indices)
                    families[leaf.name] = Family(leaf.name, len(leaf.indices), sets)
    return Symbols(
        tuple(sorted(variables)),
        tuple(families[k] for k in sorted(families)),
        tuple(sorted(index_sets)),
    )


# ---------------------------------------------------------------------------
# well-formedness


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    # False for scoping/naming faults, True for constructs outside the decidable fragment.
    unsupported: bool = False

    def __str__(self):
        return f"{self.kind}: {self.message}"


def well_formed(s) -> list[Violation]:
    """Return every violation found in ``s``; an empty list means well-formed."""
    out: list[Violation] = []
    set_mode = is_set_statement(s)
    leaf_name = SET_NAME if set_mode else LOWER_NAME
    reserved = SET_KEYWORDS if set_mode else LOGIC_KEYWORDS
    index_vars: set[str] = set()
    signature: dict[str, tuple[str, ...]] = {}
    plain: set[str] = set()

    def check_name(name, pattern, what, keywords):
        if not name or not pattern.match(name) or name in keywords:
            out.append(Violation("bad-identifier", f"{what} name {name!r} is not allowed"))

    for side in sides(s):
        for node in walk(side):
            if is_binder(node):
                index_vars.add(node.index)
                check_name(node.index, LOWER_NAME, "index variable", LOGIC_KEYWORDS)
                check_name(node.index_set, SET_NAME, "index set", SET_KEYWORDS)
            if isinstance(node, Product) and (has_product(node.l) or has_product(node.r)):
                out.append(Violation("nested-product", "a cartesian product operand contains another product", True))
        for leaf, env in indexed_leaves(side):
            if not isinstance(leaf, (Var, FamVar, Atom)):
                continue
            check_name(leaf.name, leaf_name, "variable" if set_mode else "atom", reserved)
            indices = getattr(leaf, "indices", ())
            if isinstance(leaf, FamVar) and not indices:
                out.append(Violation("arity", f"family {leaf.name} has no indices"))
            if len(indices) > MAX_ARITY:
                out.append(Violation("arity", f"{leaf.name} has arity {len(indices)} (at most {MAX_ARITY} supported)", True))
            unbound = [i for i in indices if i not in env]
            for i in unbound:
                out.append(Violation("unbound-index", f"index {i!r} of {leaf.name} is not bound by any binder"))
            if not indices:
                plain.add(leaf.name)
                if leaf.name in signature:
                    out.append(Violation("inconsistent-symbol", f"{leaf.name} is used both as a plain symbol and as a family"))
                continue
            if leaf.name in plain:
                out.append(Violation("inconsistent-symbol", f"{leaf.name} is used both as a plain symbol and as a family"))
            if unbound:
                continue
            sig = tuple(env[i] for i in indices)
            seen = signature.setdefault(leaf.name, sig)
            if seen != sig:
                out.append(Violation(
                    "inconsistent-symbol",
                    f"{leaf.name} is indexed over {', '.join(seen)} in one place and {', '.join(sig)} in another",
                ))
    if len(index_vars) > MAX_INDEX_VARIABLES:
        out.append(Violation(
            "too-many-index-variables",
            f"{len(index_vars)} distinct index variables ({', '.join(sorted(index_vars))}); at most {MAX_INDEX_VARIABLES} supported",
            True,
        ))
    # keep the first report of each distinct message, in discovery order
    return list(dict.fromkeys(out))


# ---------------------------------------------------------------------------
# desugaring


def desugar_expr(e: SetExpr) -> SetExpr:
    match e:
        case SymDiff(l, r):
            l, r = desugar_expr(l), desugar_expr(r)
            return Union(Diff(l, r), Diff(r, l))
        case Complement(x):
            return Diff(UNIVERSE, desugar_expr(x))
        case Union(l, r) | Inter(l, r) | Diff(l, r) | Product(l, r):
            return type(e)(desugar_expr(l), desugar_expr(r))
        case FamUnion(i, S, body) | FamInter(i, S, body):
            return type(e)(i, S, desugar_expr(body))
    return e


def desugar(s):
    """Rewrite symmetric difference, complement and inclusion into union, intersection, difference and equality."""
    match s:
        case SetEq(l, r):
            return SetEq(desugar_expr(l), desugar_expr(r))
        case SetIncl(l, r):
            l, r = desugar_expr(l), desugar_expr(r)
            return SetEq(Union(l, r), r)
    return s
