import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from extremes.cli import main

CATALOG = Path(__file__).resolve().parent.parent / "catalog"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_valid_exit_zero():
    code, out = run("check", "A & B = B & A")
    assert code == 0
    assert out == "A & B = B & A  =>  valid (extremes, 4 cases)\n"


def test_invalid_prints_witness():
    code, out = run("check", "A ^ (B | C) = (A | C) ^ (B | C)")
    assert code == 1
    assert "witness: A=0, B=0, C=1" in out


def test_quiet():
    assert run("check", "--quiet", "A = B") == (1, "invalid\n")


@pytest.mark.parametrize("text,code", [("(A & B", 2), ("(A * B) * C = A", 3), ("A[s] = B", 2)])
def test_error_codes(text, code, capsys):
    assert run("check", text)[0] == code
    assert capsys.readouterr().err


def test_json_fields():
    code, out = run("check", "--json", "A = B")
    record = json.loads(out)
    assert code == 1
    assert {"input", "kind", "verdict", "method", "cases", "witness", "elapsed_ms"} <= set(record)
    assert record["witness"]["extents"] == {"A": [], "B": ["x"]}


def test_json_bound():
    text = "(exists t in T. forall s in S. p[s,t]) -> (forall s in S. exists t in T. p[s,t])"
    record = json.loads(run("check", "--json", "--bound", "2", text)[1])
    assert record["verdict"] == "valid-up-to-bound" and record["bound"] == 2


def test_batch_takes_highest_code(tmp_path, capsys):
    f = tmp_path / "batch.txt"
    f.write_text("A | B = B | A\n\n# comment only\nA = B   # wrong\n(A & B\n")
    code, out = run("check", "-f", str(f))
    assert code == 2
    assert len(out.strip().splitlines()) >= 2


@pytest.mark.parametrize("name", ["identities", "subsets", "tautologies", "quantifiers", "products", "families"])
def test_catalog_files(name):
    code, out = run("check", "--json", "-f", str(CATALOG / f"{name}.txt"))
    lines = (CATALOG / f"{name}.txt").read_text().splitlines()
    expected = [line.split("#")[1].split()[0] for line in lines if line.strip()]
    got = [json.loads(r)["verdict"] for r in out.splitlines()]
    names = {"valid": "valid", "invalid": "invalid", "bounded": "valid-up-to-bound"}
    assert got == [names[w] for w in expected]
    assert code == (1 if "invalid" in expected else 0)


def test_text_output_is_deterministic():
    path = str(CATALOG / "identities.txt")
    assert run("check", "-f", path) == run("check", "-f", path)


def test_translate_to_sets():
    assert run("translate", "--to-sets", "(p -> q) <-> (~q -> ~p)") == (0, "P' | Q = (Q')' | P'\n")


def test_translate_to_logic_and_check():
    code, out = run("translate", "--to-logic", "--check", "A \\ B = A & B")
    assert code == 1
    assert out.splitlines()[0] == "a /\\ ~b <-> a /\\ b"


def test_explain():
    code, out = run("explain", "A \\ B = A & B")
    assert code == 1
    assert out.splitlines()[0] == "A B | L R"
    assert "2/4 extreme cases agree" in out


def test_explain_refuses_products(capsys):
    assert run("explain", "X * Y = Y * X")[0] == 3


def test_oracle_agreement():
    code, out = run("oracle", "A & B = B & A", "--max-universe", "2")
    assert code == 0 and out.endswith("agreement\n")


def test_oracle_budget(capsys):
    assert run("oracle", "A | B | C | D = A", "--budget", "10")[0] == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "extremes", "check", "--quiet", "A | 1 = 1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "valid\n"
