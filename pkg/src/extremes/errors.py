"""Exception hierarchy shared by the parser, engines and CLI."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SourceSpan:
    """Half-open byte range ``[start, end)`` into the UTF-8 encoded input."""

    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start <= self.end:
            raise ValueError(f"bad span {self.start}..{self.end}")


class ExtremesError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ExtremesError, ValueError):
    def __init__(self, span: SourceSpan, message: str, expected: list[str]):
        if not message:
            raise ValueError("ParseError needs a message")
        self.span = span
        self.message = message
        self.expected = list(expected) or ["a valid token"]
        super().__init__(f"{message} at byte {span.start}")

    def describe(self, text: str) -> str:
        """Two-line caret diagnostic for terminal output."""
        data = text.encode("utf-8")
        prefix = data[: self.span.start].decode("utf-8", errors="replace")
        line_start = prefix.rfind("\n") + 1
        line_end = text.find("\n", len(prefix))
        line = text[line_start : None if line_end < 0 else line_end]
        col = len(prefix) - line_start
        width = max(1, len(data[self.span.start : self.span.end].decode("utf-8", errors="replace")))
        caret = " " * col + "^" * width
        return (
            f"parse error at byte {self.span.start}: {self.message} "
            f"(expected {', '.join(self.expected)})\n  {line}\n  {caret}"
        )


class UnsupportedError(ExtremesError, ValueError):
    """A well-parsed statement uses a construct no decision procedure covers."""

    def __init__(self, message: str, violations=()):
        self.violations = list(violations)
        super().__init__(message)


class PreconditionError(ExtremesError, ValueError):
    """The statement is outside the class a particular decider handles."""


class CoordinateDependenceError(PreconditionError):
    pass


class BudgetExceeded(ExtremesError, RuntimeError):
    """An enumeration would exceed its configured ceiling."""


class OracleBudgetExceeded(BudgetExceeded):
    pass
