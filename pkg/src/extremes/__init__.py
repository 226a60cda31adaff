"""Decide set identities, cartesian-product identities and propositional
tautologies by checking only the extreme assignments of empty and full sets."""
from .bridge import decide_taut, logic_to_set, set_to_logic
from .dispatch import classify, decide
from .engine import decide_flat, decide_indexed, explain, monadic_bound
from .errors import (
    BudgetExceeded, CoordinateDependenceError, ExtremesError, OracleBudgetExceeded,
    ParseError, PreconditionError, SourceSpan, UnsupportedError,
)
from .parser import parse_prop, parse_set_expr, parse_statement, render
from .products import decide_product, independence_check, product_flat, reduce_product
from .semantics import check_by_model, refutes
from .syntax import desugar, free_symbols, well_formed
from .transforms import Law, maps_to, preserves, transform_equal
from .verdict import Method, Status, Verdict, Witness

__all__ = [
    "BudgetExceeded", "CoordinateDependenceError", "ExtremesError", "Law", "Method",
    "OracleBudgetExceeded", "ParseError", "PreconditionError", "SourceSpan", "Status",
    "UnsupportedError", "Verdict", "Witness", "check_by_model", "classify", "decide",
    "decide_flat", "decide_indexed", "decide_product", "decide_taut", "desugar",
    "explain", "free_symbols", "independence_check", "logic_to_set", "maps_to",
    "monadic_bound", "parse_prop", "parse_set_expr", "parse_statement", "preserves",
    "product_flat", "reduce_product", "refutes", "render", "set_to_logic",
    "transform_equal", "well_formed",
]
