"""Command-line front end.

    extremes check "A & B = B & A"
    extremes check -f catalog/identities.txt --json
    extremes translate --to-sets "(p -> q) <-> (~q -> ~p)"
    extremes explain "A | 1 = 1"
    extremes oracle "A & B = B & A" --max-universe 3

Exit codes: 0 every statement holds, 1 some statement is invalid, 2 parse
error, 3 unsupported construct, 4 enumeration budget exceeded, 5 the oracle
disagrees with the engine.  In batch mode the highest code wins.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from .bridge import logic_to_set, set_to_logic
from .dispatch import check_well_formed, classify, decide
from .engine import DEFAULT_DYADIC_BOUND, explain
from .errors import BudgetExceeded, ParseError, PreconditionError, UnsupportedError
from .parser import parse_statement, render, render_prop
from .semantics import DEFAULT_BUDGET, check_by_model
from .syntax import PropEquiv, Taut, desugar, is_set_statement
from .verdict import Status, Verdict

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_BUDGET, EXIT_DISAGREE = range(6)


@dataclass
class RunReport:
    input: str
    kind: str | None = None
    verdict: Verdict | None = None
    elapsed: float = 0.0
    error: str | None = None
    code: int = EXIT_OK
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"input": self.input, "kind": self.kind, "elapsed_ms": round(self.elapsed * 1000, 3)}
        if self.verdict is None:
            out.update(verdict="error", error=self.error, exit=self.code)
            return out
        v = self.verdict
        out.update(verdict=v.status.value, method=v.method.value, cases=v.cases)
        if v.bound is not None:
            out["bound"] = v.bound
        if v.witness is not None:
            out["witness"] = v.witness.to_json()
        out.update(self.extra)
        return out


def _error_code(exc: Exception) -> int:
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, BudgetExceeded):
        return EXIT_BUDGET
    return EXIT_UNSUPPORTED


def _parse(text: str, args) -> object:
    return parse_statement(text, equiv=getattr(args, "equiv", False))


def _fail(report: RunReport, text: str, exc: Exception) -> RunReport:
    report.code = _error_code(exc)
    report.error = exc.describe(text) if isinstance(exc, ParseError) else str(exc)
    return report


def run_one(text: str, args) -> RunReport:
    report = RunReport(text)
    start = time.perf_counter()
    try:
        stmt = _parse(text, args)
        report.kind = classify(stmt)
        report.verdict = decide(stmt, args.bound, args.allow_empty_index)
    except (ParseError, UnsupportedError, PreconditionError, BudgetExceeded) as exc:
        return _fail(report, text, exc)
    finally:
        report.elapsed = time.perf_counter() - start
    report.code = EXIT_OK if report.verdict.holds else EXIT_INVALID
    return report


def _print_text(report: RunReport, quiet: bool, out) -> None:
    if report.verdict is None:
        print(report.error, file=sys.stderr)
        return
    v = report.verdict
    if quiet:
        print(v.status.value, file=out)
        return
    print(f"{report.input}  =>  {v}", file=out)
    if v.witness is not None:
        print(f"    witness: {v.witness.describe()}", file=out)
        print(f"    {v.witness.note}", file=out)


def _emit(report: RunReport, args, out) -> None:
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True), file=out)
        if report.verdict is None:
            print(report.error, file=sys.stderr)
    else:
        _print_text(report, args.quiet, out)


def read_statements(path: str) -> list[str]:
    """Non-blank lines of a statement file with trailing comments removed."""
    with open(path, encoding="utf-8") as fh:
        lines = [line.split("#", 1)[0].strip() for line in fh]
    return [line for line in lines if line]


def cmd_check(args, out) -> int:
    if (args.file is None) == (args.statement is None):
        print("check: give exactly one of a statement or -f FILE", file=sys.stderr)
        return EXIT_PARSE
    texts = read_statements(args.file) if args.file else [args.statement]
    code = EXIT_OK
    for text in texts:
        report = run_one(text, args)
        _emit(report, args, out)
        code = max(code, report.code)
    return code


def cmd_translate(args, out) -> int:
    text = args.statement
    try:
        stmt = _parse(text, args)
        if args.to_logic:
            if not is_set_statement(stmt):
                raise PreconditionError("--to-logic expects a set statement")
            formula = set_to_logic(stmt)
            print(render_prop(formula), file=out)
            target = Taut(formula)
        else:
            if is_set_statement(stmt):
                raise PreconditionError("--to-sets expects a logical formula")
            target = logic_to_set(stmt)
            print(render(target), file=out)
        if not args.check:
            return EXIT_OK
        verdict = decide(target, args.bound, args.allow_empty_index)
    except (ParseError, UnsupportedError, PreconditionError, BudgetExceeded) as exc:
        report = _fail(RunReport(text), text, exc)
        print(report.error, file=sys.stderr)
        return report.code
    print(verdict, file=out)
    if verdict.witness is not None:
        print(f"    witness: {verdict.witness.describe()}", file=out)
    return EXIT_OK if verdict.holds else EXIT_INVALID


def cmd_explain(args, out) -> int:
    text = args.statement
    try:
        stmt = _parse(text, args)
        if not is_set_statement(stmt) or classify(stmt) != "flat":
            raise UnsupportedError("explain needs a set statement without products or families")
        rows = explain(desugar(stmt))
    except (ParseError, UnsupportedError, PreconditionError, BudgetExceeded) as exc:
        report = _fail(RunReport(text), text, exc)
        print(report.error, file=sys.stderr)
        return report.code
    names = list(rows[0].assignment)
    widths = [max(1, len(n)) for n in names]
    head = " ".join(n.rjust(w) for n, w in zip(names, widths))
    print(f"{head} | L R", file=out)
    for row in rows:
        cells = " ".join(str(int(v)).rjust(w) for v, w in zip(row.assignment.values(), widths))
        mark = "ok" if row.agrees else "DIFFER"
        print(f"{cells} | {row.left} {row.right}  {mark}", file=out)
    agree = sum(r.agrees for r in rows)
    print(f"{agree}/{len(rows)} extreme cases agree", file=out)
    return EXIT_OK if agree == len(rows) else EXIT_INVALID


def cmd_oracle(args, out) -> int:
    text = args.statement
    try:
        stmt = _parse(text, args)
        check_well_formed(stmt)
        fast = decide(stmt, args.bound, args.allow_empty_index)
        target = stmt if isinstance(stmt, (Taut, PropEquiv)) else desugar(stmt)
        slow = check_by_model(
            target,
            max_universe=args.max_universe,
            max_index=args.max_index,
            budget=args.budget,
            min_index=0 if args.allow_empty_index else 1,
            jobs=args.jobs,
        )
    except (ParseError, UnsupportedError, PreconditionError, BudgetExceeded) as exc:
        report = _fail(RunReport(text), text, exc)
        print(report.error, file=sys.stderr)
        return report.code
    agree = fast.holds == slow.holds
    if args.json:
        print(json.dumps({
            "input": text,
            "engine": fast.status.value,
            "oracle": slow.status.value,
            "agree": agree,
        }, sort_keys=True), file=out)
    else:
        print(f"engine: {fast}", file=out)
        print(f"oracle: {slow}", file=out)
        for label, v in (("engine", fast), ("oracle", slow)):
            if v.witness is not None:
                print(f"    {label} witness: {v.witness.describe()}", file=out)
        print("agreement" if agree else "DISAGREEMENT", file=out)
    return EXIT_OK if agree else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per statement")
    common.add_argument("--bound", type=int, default=DEFAULT_DYADIC_BOUND,
                        help="index-set size bound for binary families (default %(default)s)")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for the oracle")
    common.add_argument("--quiet", action="store_true", help="print the verdict only")
    common.add_argument("--equiv", action="store_true", help="read a top-level <-> as an equivalence claim")
    common.add_argument("--allow-empty-index", action="store_true", help="let index sets be empty")

    parser = argparse.ArgumentParser(prog="extremes", description="Decide set identities and tautologies by extreme cases.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", parents=[common], help="decide statements")
    check.add_argument("statement", nargs="?")
    check.add_argument("-f", "--file", help="file with one statement per line")
    check.set_defaults(func=cmd_check)

    translate = sub.add_parser("translate", parents=[common], help="translate between sets and logic")
    direction = translate.add_mutually_exclusive_group(required=True)
    direction.add_argument("--to-logic", action="store_true")
    direction.add_argument("--to-sets", action="store_true")
    translate.add_argument("--check", action="store_true", help="also decide the translation")
    translate.add_argument("statement")
    translate.set_defaults(func=cmd_translate)

    expl = sub.add_parser("explain", parents=[common], help="print the extreme-case table")
    expl.add_argument("statement")
    expl.set_defaults(func=cmd_explain)

    oracle = sub.add_parser("oracle", parents=[common], help="cross-check the engine against brute force")
    oracle.add_argument("statement")
    oracle.add_argument("--max-universe", type=int, default=3)
    oracle.add_argument("--max-index", type=int, default=3)
    oracle.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    oracle.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
