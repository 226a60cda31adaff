"""Route a statement to the decider that covers it."""
from __future__ import annotations

from .bridge import decide_taut
from .engine import DEFAULT_DYADIC_BOUND, decide_flat, decide_indexed
from .errors import ParseError, SourceSpan, UnsupportedError
from .products import decide_product
from .syntax import (
    Iff, PropEquiv, Taut, desugar, has_families, has_product, statement_has, well_formed,
)
from .verdict import Verdict


def classify(s) -> str:
    """One of ``flat``, ``indexed``, ``product`` or ``logic``."""
    if isinstance(s, (Taut, PropEquiv)):
        return "logic"
    if statement_has(s, has_product):
        return "product"
    if statement_has(s, has_families):
        return "indexed"
    return "flat"


def check_well_formed(s) -> None:
    problems = well_formed(s)
    if not problems:
        return
    if all(p.unsupported for p in problems):
        raise UnsupportedError("; ".join(map(str, problems)), problems)
    fault = next(p for p in problems if not p.unsupported)
    raise ParseError(SourceSpan(0, 0), str(fault), ["a well-formed statement"])


def decide(s, dyadic_bound: int = DEFAULT_DYADIC_BOUND, allow_empty_index: bool = False) -> Verdict:
    check_well_formed(s)
    kind = classify(s)
    if kind == "logic":
        p = Iff(s.l, s.r) if isinstance(s, PropEquiv) else s.p
        return decide_taut(p, dyadic_bound, allow_empty_index)
    if kind == "product":
        if statement_has(s, has_families):
            raise UnsupportedError("products of indexed families are not supported")
        return decide_product(s)
    if kind == "indexed":
        return decide_indexed(s, dyadic_bound, allow_empty_index)
    return decide_flat(desugar(s))
