import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from csai import cli

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


def run_case(name):
    case = CASES[name]
    cmd, rest = case["args"][0], case["args"][1:]
    out = io.StringIO()
    code = cli.run([cmd, str(GOLDEN / "inputs" / f"{name}.json")] + rest, stdout=out)
    return code, out.getvalue().encode("utf-8")


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    expected = (GOLDEN / "outputs" / f"{name}.json").read_bytes()
    first, second = run_case(name), run_case(name)
    assert first == second
    assert first == (CASES[name]["exit"], expected)


def test_every_command_has_a_golden_case():
    assert {c["args"][0] for c in CASES.values()} == set(cli.COMMANDS)


def test_stdin_and_console_script():
    doc = (GOLDEN / "inputs" / "similar_inequiv.json").read_text()
    p = subprocess.run([sys.executable, "-m", "csai.cli", "similar", "-", "--threads", "3"],
                       input=doc, capture_output=True, text=True)
    assert p.returncode == 1
    assert p.stdout.encode() == (GOLDEN / "outputs" / "similar_inequiv.json").read_bytes()


def test_max_len_flag_limits_the_scan():
    out = io.StringIO()
    code = cli.run(["similar", str(GOLDEN / "inputs" / "similar_inequiv.json"), "--max-len", "1"],
                   stdout=out)
    # x1 and s1 have trace 0 on both sides
    assert code == 0 and json.loads(out.getvalue()) == {"outcome": "equivalent"}


@pytest.mark.parametrize("cmd,doc", [
    ("trd", {"kind": "octonion", "n": 1, "entries": [["1"]]}),
    ("similar", {"X": [], "Y": []}),
    ("solve-scaling", {"sigma": {"kind": "real", "n": 2}}),
    ("invo-classify", {"kind": "real", "n": 2,
                       "scale": {"kind": "real", "n": 2, "entries": [["0", "1"], ["0", "0"]]}}),
    ("csa-check", {"m": 2, "constants": [[["1"]]], "unit": ["1", "0"]}),
    ("psd", [1, 2]),
    ("psd", {"kind": "real", "n": 2, "entries": [["1", "2"], ["3", "4"]]}),
])
def test_input_errors(cmd, doc):
    out = io.StringIO()
    assert cli.run([cmd, "-"], stdin=io.StringIO(json.dumps(doc)), stdout=out) == 2
    assert set(json.loads(out.getvalue())) == {"error"}


def test_missing_file():
    out = io.StringIO()
    assert cli.run(["trd", "/nonexistent/input.json"], stdout=out) == 2


def test_inconclusive_exit_code(monkeypatch):
    from csai import structure
    monkeypatch.setattr(structure, "CENTER_TRIALS", 0)
    k = 5
    alg = {"m": k, "unit": ["1"] * k,
           "constants": [[[str(int(u == v == w)) for w in range(k)] for v in range(k)]
                         for u in range(k)]}
    out = io.StringIO()
    assert cli.run(["csa-check", "-"], stdin=io.StringIO(json.dumps(alg)), stdout=out) == 3
    assert json.loads(out.getvalue())["status"] == "inconclusive"
