"""Transformations of sets: ``i_A(X) = A & X``, ``u_A(X) = A | X``, ``c(X) = X'``,
the identity, and composition.

Two transformations are equal when they agree on every set, i.e. when applying
both to a fresh variable gives an identity.  That identity is decided by the
extremes engine.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .engine import decide_flat
from .parser import render_set
from .syntax import Complement, Inter, SetEq, SetExpr, Union, Var, walk
from .verdict import Verdict


class TransformExpr:
    __slots__ = ()

    def __matmul__(self, inner):
        """``t @ s`` is the composition t after s."""
        return Compose(self, inner)


@dataclass(frozen=True, slots=True)
class Id(TransformExpr):
    def __str__(self):
        return "id"


@dataclass(frozen=True, slots=True)
class IntersectWith(TransformExpr):
    a: SetExpr

    def __str__(self):
        return f"i_({render_set(self.a)})"


@dataclass(frozen=True, slots=True)
class UnionWith(TransformExpr):
    a: SetExpr

    def __str__(self):
        return f"u_({render_set(self.a)})"


@dataclass(frozen=True, slots=True)
class Comp(TransformExpr):
    def __str__(self):
        return "c"


@dataclass(frozen=True, slots=True)
class Compose(TransformExpr):
    outer: TransformExpr
    inner: TransformExpr

    def __str__(self):
        return f"{self.outer} o {self.inner}"


ID = Id()
C = Comp()


def power(t: TransformExpr, n: int) -> TransformExpr:
    if n < 1:
        return ID
    out = t
    for _ in range(n - 1):
        out = Compose(t, out)
    return out


def apply(t: TransformExpr, x: SetExpr) -> SetExpr:
    match t:
        case Id():
            return x
        case IntersectWith(a):
            return Inter(a, x)
        case UnionWith(a):
            return Union(a, x)
        case Comp():
            return Complement(x)
        case Compose(outer, inner):
            return apply(outer, apply(inner, x))
    raise TypeError(f"not a transformation: {t!r}")


def parameters(t: TransformExpr) -> set[str]:
    match t:
        case IntersectWith(a) | UnionWith(a):
            return {n.name for n in walk(a) if isinstance(n, Var)}
        case Compose(outer, inner):
            return parameters(outer) | parameters(inner)
    return set()


def fresh(taken: set[str], base: str = "X") -> str:
    if base not in taken:
        return base
    k = 1
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def transform_equal(t: TransformExpr, s: TransformExpr) -> Verdict:
    """Decide t(X) = s(X) for a fresh variable X."""
    x = Var(fresh(parameters(t) | parameters(s)))
    return decide_flat(SetEq(apply(t, x), apply(s, x)))


class Law(str, Enum):
    UNION = "union"
    INTER = "inter"


def _combine(law: Law, l, r):
    return Union(l, r) if law is Law.UNION else Inter(l, r)


def maps_to(t: TransformExpr, source: Law, target: Law) -> Verdict:
    """Decide t(X o Y) = t(X) o' t(Y) with o the source law and o' the target law."""
    taken = parameters(t)
    x = Var(fresh(taken, "X"))
    y = Var(fresh(taken | {x.name}, "Y"))
    return decide_flat(SetEq(apply(t, _combine(source, x, y)), _combine(target, apply(t, x), apply(t, y))))


def preserves(t: TransformExpr, law: Law) -> Verdict:
    return maps_to(t, law, law)
