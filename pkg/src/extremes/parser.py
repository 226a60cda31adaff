"""ASCII statement language: tokenizer, recursive-descent parser and renderer.

Set statements use uppercase variables and ``| & \\ ^ ' *``; logical formulas
use lowercase atoms and ``~ /\\ \\/ -> <->``.  The kind of statement is inferred
from the text: a top-level ``=`` or ``<=`` makes it a set statement, anything
else is read as a tautology claim.  See docs/grammar.md for the full grammar.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, SourceSpan, UnsupportedError
from .syntax import (
    EMPTY, FALSE, TRUE, UNIVERSE, And, Atom, Bottom, Complement, Diff, Empty, Exists,
    FamInter, FamUnion, FamVar, Forall, Iff, Implies, Inter, Not, Or, Product, PropEquiv,
    PropExpr, SetEq, SetExpr, SetIncl, SymDiff, Taut, Top, Union, Universe, Var, well_formed,
)

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<upper>[A-Z][A-Za-z0-9]*)
  | (?P<lower>[a-z][A-Za-z0-9]*)
  | (?P<number>[0-9]+)
  | (?P<op><->|->|<=|\\/|/\\|[=|&\\^'*~()\[\],.])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"Union", "Inter", "forall", "exists", "in", "true", "false"}

_DESCRIBE = {
    "upper": "set variable",
    "lower": "atom",
    "number": "0 or 1",
    "eof": "end of input",
}


@dataclass(frozen=True)
class Token:
    kind: str  # upper, lower, number, op, keyword, eof
    text: str
    start: int  # character offsets
    end: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(_span(text, pos, pos + 1), f"unexpected character {text[pos]!r}", ["operator", "identifier"])
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            word = m.group()
            if word in _KEYWORDS:
                kind = "keyword"
            tokens.append(Token(kind, word, m.start(), m.end()))
        pos = m.end()
    tokens.append(Token("eof", "", len(text), len(text)))
    return tokens


def _span(text: str, start: int, end: int) -> SourceSpan:
    b0 = len(text[:start].encode("utf-8"))
    return SourceSpan(b0, b0 + len(text[start:end].encode("utf-8")))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.scope: list[str] = []

    # -- token plumbing ----------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def at(self, *texts: str) -> bool:
        return self.tok.kind in ("op", "keyword") and self.tok.text in texts

    def advance(self) -> Token:
        tok = self.tok
        self.pos += 1
        return tok

    def error(self, message: str, expected: list[str], tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(_span(self.text, tok.start, tok.end), message, expected)

    def unexpected(self, expected: list[str]) -> ParseError:
        tok = self.tok
        shown = _DESCRIBE["eof"] if tok.kind == "eof" else repr(tok.text)
        return self.error(f"unexpected {shown}", expected)

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.unexpected([repr(text)])
        return self.advance()

    def expect_kind(self, kind: str, what: str) -> Token:
        if self.tok.kind != kind:
            raise self.unexpected([what])
        return self.advance()

    def binder_head(self):
        index = self.expect_kind("lower", "index variable").text
        self.expect("in")
        index_set = self.expect_kind("upper", "index set").text
        self.expect(".")
        return index, index_set

    def indices(self) -> tuple[str, ...]:
        self.expect("[")
        out = []
        while True:
            tok = self.expect_kind("lower", "index variable")
            if tok.text not in self.scope:
                raise self.error(f"unbound index {tok.text!r}", ["an index bound by an enclosing binder"], tok)
            out.append(tok.text)
            if self.at("]"):
                self.advance()
                return tuple(out)
            if not self.at(","):
                raise self.unexpected(["','", "']'"])
            self.advance()

    # -- set expressions ---------------------------------------------------
    # precedence, loosest first: |  then  \ ^  then  &  then  *  then postfix '
    def set_expr(self):
        left = self.set_diff()
        while self.at("|"):
            self.advance()
            left = Union(left, self.set_diff())
        return left

    def set_diff(self):
        left = self.set_inter()
        while self.at("\\", "^"):
            op = self.advance().text
            right = self.set_inter()
            left = Diff(left, right) if op == "\\" else SymDiff(left, right)
        return left

    def set_inter(self):
        left = self.set_product()
        while self.at("&"):
            self.advance()
            left = Inter(left, self.set_product())
        return left

    def set_product(self):
        left = self.set_postfix()
        while self.at("*"):
            self.advance()
            left = Product(left, self.set_postfix())
        return left

    def set_postfix(self):
        e = self.set_primary()
        while self.at("'"):
            self.advance()
            e = Complement(e)
        return e

    def set_primary(self):
        tok = self.tok
        if tok.kind == "upper":
            self.advance()
            if self.at("["):
                return FamVar(tok.text, self.indices())
            return Var(tok.text)
        if tok.kind == "number":
            self.advance()
            if tok.text == "0":
                return EMPTY
            if tok.text == "1":
                return UNIVERSE
            raise self.error(f"unknown constant {tok.text!r}", ["0", "1"], tok)
        if self.at("("):
            self.advance()
            e = self.set_expr()
            self.expect(")")
            return e
        if self.at("Union", "Inter"):
            kind = FamUnion if self.advance().text == "Union" else FamInter
            index, index_set = self.binder_head()
            self.scope.append(index)
            body = self.set_expr()
            self.scope.pop()
            return kind(index, index_set, body)
        raise self.unexpected(["set variable", "0", "1", "'('", "Union", "Inter"])

    # -- logical formulas --------------------------------------------------
    # precedence, loosest first: quantifiers, <->, ->, \/, /\, ~
    def prop(self):
        left = self.prop_imp()
        if self.at("<->"):
            self.advance()
            left = Iff(left, self.prop_imp())
            if self.at("<->"):
                raise self.error("chained '<->' needs parentheses", ["')'", "end of input"])
        return left

    def prop_imp(self):
        left = self.prop_or()
        if self.at("->"):
            self.advance()
            return Implies(left, self.prop_imp())
        return left

    def prop_or(self):
        left = self.prop_and()
        while self.at("\\/"):
            self.advance()
            left = Or(left, self.prop_and())
        return left

    def prop_and(self):
        left = self.prop_unary()
        while self.at("/\\"):
            self.advance()
            left = And(left, self.prop_unary())
        return left

    def prop_unary(self):
        if self.at("~"):
            self.advance()
            return Not(self.prop_unary())
        return self.prop_primary()

    def prop_primary(self):
        tok = self.tok
        if tok.kind == "lower":
            self.advance()
            if self.at("["):
                return Atom(tok.text, self.indices())
            return Atom(tok.text)
        if self.at("true"):
            self.advance()
            return TRUE
        if self.at("false"):
            self.advance()
            return FALSE
        if self.at("("):
            self.advance()
            p = self.prop()
            self.expect(")")
            return p
        if self.at("forall", "exists"):
            kind = Forall if self.advance().text == "forall" else Exists
            index, index_set = self.binder_head()
            self.scope.append(index)
            body = self.prop()
            self.scope.pop()
            return kind(index, index_set, body)
        raise self.unexpected(["atom", "true", "false", "'~'", "'('", "forall", "exists"])

    # -- statements --------------------------------------------------------
    def is_set_statement(self) -> bool:
        depth = 0
        for tok in self.tokens:
            if tok.kind != "op":
                continue
            if tok.text in "([":
                depth += 1
            elif tok.text in ")]":
                depth -= 1
            elif depth == 0 and tok.text in ("=", "<="):
                return True
        # no relation symbol: still treat it as a (broken) set statement when it
        # starts like one, so the error names the missing '='
        first = next(t for t in self.tokens if t.text != "(")
        return first.kind in ("upper", "number") or first.text in ("Union", "Inter")

    def statement(self, equiv: bool):
        if self.tok.kind == "eof":
            raise self.unexpected(["a statement"])
        if self.is_set_statement():
            left = self.set_expr()
            if not self.at("=", "<="):
                raise self.unexpected(["'='", "'<='", "set operator"])
            op = self.advance().text
            right = self.set_expr()
            stmt = SetEq(left, right) if op == "=" else SetIncl(left, right)
        else:
            p = self.prop()
            stmt = PropEquiv(p.l, p.r) if equiv and isinstance(p, Iff) else Taut(p)
        if self.tok.kind != "eof":
            raise self.unexpected(["end of input"])
        return stmt


def parse_statement(text: str, equiv: bool = False):
    """Parse one statement.

    Raises ParseError for lexical, grammatical and scoping faults, and
    UnsupportedError when the statement parses but leaves the decidable
    fragment (nested products, arity above 2, too many index variables).
    With ``equiv=True`` a formula whose top connective is ``<->`` becomes a
    PropEquiv rather than a Taut.
    """
    stmt = _Parser(text).statement(equiv)
    problems = well_formed(stmt)
    if problems:
        raise UnsupportedError("; ".join(str(v) for v in problems), problems)
    return stmt


def parse_set_expr(text: str):
    p = _Parser(text)
    e = p.set_expr()
    if p.tok.kind != "eof":
        raise p.unexpected(["end of input"])
    return e


def parse_prop(text: str):
    p = _Parser(text)
    e = p.prop()
    if p.tok.kind != "eof":
        raise p.unexpected(["end of input"])
    return e


# ---------------------------------------------------------------------------
# rendering

_SET_LEVEL = {Union: 1, Diff: 2, SymDiff: 2, Inter: 3, Product: 4, Complement: 5}
_SET_OP = {Union: "|", Diff: "\\", SymDiff: "^", Inter: "&", Product: "*"}
# Mixing any two of these without parentheses is legal but hard to read, so
# the renderer always brackets them.
_SET_TIER = (Union, Diff, SymDiff, Inter)

_PROP_LEVEL = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}
_PROP_OP = {Iff: "<->", Implies: "->", Or: "\\/", And: "/\\"}
_PROP_TIERS = ((Or, And), (Implies, Iff))


def _set_level(e) -> int:
    if isinstance(e, (FamUnion, FamInter)):
        return 0
    return _SET_LEVEL.get(type(e), 6)


def _prop_level(e) -> int:
    if isinstance(e, (Forall, Exists)):
        return 0
    return _PROP_LEVEL.get(type(e), 6)


def _index_suffix(indices) -> str:
    return f"[{','.join(indices)}]"


def render_set(e) -> str:
    match e:
        case Var(name):
            return name
        case FamVar(name, indices):
            return name + _index_suffix(indices)
        case Empty():
            return "0"
        case Universe():
            return "1"
        case Complement(x):
            inner = render_set(x)
            return (inner if _set_level(x) == 6 else f"({inner})") + "'"
        case FamUnion(i, S, body):
            return f"Union {i} in {S}. {render_set(body)}"
        case FamInter(i, S, body):
            return f"Inter {i} in {S}. {render_set(body)}"
    kind = type(e)
    level = _SET_LEVEL[kind]
    return f"{_set_operand(e.l, kind, level, False)} {_SET_OP[kind]} {_set_operand(e.r, kind, level, True)}"


def _set_operand(child, parent, level, right) -> str:
    text = render_set(child)
    clevel = _set_level(child)
    if clevel == 0 or clevel < level:
        return f"({text})"
    if clevel == level and (right or type(child) is not parent):
        return f"({text})"
    if parent in _SET_TIER and type(child) in _SET_TIER and type(child) is not parent:
        return f"({text})"
    return text


def render_prop(p) -> str:
    match p:
        case Atom(name, indices):
            return name + (_index_suffix(indices) if indices else "")
        case Top():
            return "true"
        case Bottom():
            return "false"
        case Not(x):
            inner = render_prop(x)
            return "~" + (inner if _prop_level(x) >= 5 else f"({inner})")
        case Forall(i, S, body):
            return f"forall {i} in {S}. {render_prop(body)}"
        case Exists(i, S, body):
            return f"exists {i} in {S}. {render_prop(body)}"
    kind = type(p)
    level = _PROP_LEVEL[kind]
    return f"{_prop_operand(p.l, kind, level, False)} {_PROP_OP[kind]} {_prop_operand(p.r, kind, level, True)}"


def _prop_operand(child, parent, level, right) -> str:
    text = render_prop(child)
    clevel = _prop_level(child)
    if clevel == 0 or clevel < level:
        return f"({text})"
    if clevel == level:
        # -> associates to the right, \/ and /\ to the left, <-> not at all
        if parent is Iff or right != (parent is Implies):
            return f"({text})"
        return text
    for tier in _PROP_TIERS:
        if parent in tier and type(child) in tier:
            return f"({text})"
    return text


def render(s) -> str:
    """Canonical ASCII form of a statement or bare expression."""
    match s:
        case SetEq(l, r):
            return f"{render_set(l)} = {render_set(r)}"
        case SetIncl(l, r):
            return f"{render_set(l)} <= {render_set(r)}"
        case Taut(p):
            return render_prop(p)
        case PropEquiv(l, r):
            return render_prop(Iff(l, r))
    if isinstance(s, SetExpr):
        return render_set(s)
    if isinstance(s, PropExpr):
        return render_prop(s)
    raise TypeError(f"cannot render {s!r}")
