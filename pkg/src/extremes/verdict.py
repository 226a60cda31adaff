"""Verdicts and witnesses returned by every decision procedure."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .syntax import Instance, render_instance


class Method(str, Enum):
    EXTREMES = "extremes"
    TWO_POINT = "two-point"
    MONADIC_BOUND = "monadic-bound"
    TRUTH_TABLE = "truth-table"


class Status(str, Enum):
    VALID = "valid"
    VALID_UP_TO_BOUND = "valid-up-to-bound"
    INVALID = "invalid"


@dataclass(frozen=True)
class Witness:
    """A concrete finite model on which the two sides of a statement differ.

    ``extents`` maps every symbol instance to the points it contains.
    ``assignment`` is the extreme (empty/universe, or false/true) assignment the
    model was read off, when there is one; brute-force models over several
    points have none.
    """

    universe: tuple[str, ...]
    extents: Mapping[Instance, tuple[str, ...]]
    index_sizes: Mapping[str, int] = field(default_factory=dict)
    assignment: Mapping[Instance, bool] | None = None
    note: str = ""

    def describe(self) -> str:
        parts = []
        if self.index_sizes:
            parts.append(", ".join(f"|{S}|={n}" for S, n in sorted(self.index_sizes.items())))
        if self.assignment is not None:
            parts.append(", ".join(f"{render_instance(k)}={int(v)}" for k, v in sorted(self.assignment.items())))
        ext = ", ".join(
            f"{render_instance(k)}={{{','.join(v)}}}" for k, v in sorted(self.extents.items())
        )
        parts.append(f"universe {{{','.join(self.universe)}}}: {ext}" if ext else f"universe {{{','.join(self.universe)}}}")
        return "; ".join(parts)

    def to_json(self) -> dict:
        return {
            "universe": list(self.universe),
            "extents": {render_instance(k): sorted(v) for k, v in sorted(self.extents.items())},
            "index_sizes": dict(sorted(self.index_sizes.items())),
            "assignment": None if self.assignment is None else {
                render_instance(k): bool(v) for k, v in sorted(self.assignment.items())
            },
            "note": self.note,
        }


@dataclass(frozen=True)
class Verdict:
    status: Status
    method: Method
    cases: int
    bound: int | None = None
    witness: Witness | None = None

    def __post_init__(self):
        if (self.status is Status.INVALID) != (self.witness is not None):
            raise ValueError("a witness accompanies exactly the invalid verdicts")
        if (self.status is Status.VALID_UP_TO_BOUND) != (self.bound is not None):
            raise ValueError("a bound accompanies exactly the bounded verdicts")

    @classmethod
    def valid(cls, method: Method, cases: int) -> "Verdict":
        return cls(Status.VALID, method, cases)

    @classmethod
    def up_to_bound(cls, bound: int, method: Method, cases: int) -> "Verdict":
        return cls(Status.VALID_UP_TO_BOUND, method, cases, bound=bound)

    @classmethod
    def invalid(cls, witness: Witness, method: Method, cases: int) -> "Verdict":
        return cls(Status.INVALID, method, cases, witness=witness)

    @property
    def holds(self) -> bool:
        """True unless a counterexample was found."""
        return self.status is not Status.INVALID

    def __str__(self):
        if self.status is Status.VALID_UP_TO_BOUND:
            return f"valid up to bound {self.bound} ({self.method.value}, {self.cases} cases)"
        return f"{self.status.value} ({self.method.value}, {self.cases} cases)"
