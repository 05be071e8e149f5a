"""Command-line surface: subcommands, exit codes, reports."""

import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from boolelab.cli import run
from boolelab.counterexamples import cx_trace
from boolelab.derivation import format_trace
from helpers import strip_timing

PKG_ROOT = Path(__file__).resolve().parents[1]
BARBARA = str(PKG_ROOT / "problems" / "barbara.prob")
COMMUTATIVE = str(PKG_ROOT / "problems" / "commutative.thy")
HAILPERIN_THY = str(PKG_ROOT / "problems" / "hailperin.thy")


def invoke(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def invoke_json(capsys, argv):
    code = run(["--json"] + argv)
    doc = json.loads(capsys.readouterr().out)
    schema = json.loads(
        resources.files("boolelab").joinpath("report.schema.json").read_text()
    )
    jsonschema.validate(doc, schema)
    assert doc["schema"] == "boolelab/1"
    assert doc["exit_code"] == code
    return code, doc


def test_normalize_text(capsys):
    code, out = invoke(capsys, ["normalize", "x*x - x"])
    assert code == 0
    assert strip_timing(out) == "term: x*x - x\nnormal form: 0"
    assert out.splitlines()[-1].startswith("time: ")


def test_normalize_product_of_complements(capsys):
    code, out = invoke(capsys, ["normalize", "(1-x)*(1-y)"])
    assert code == 0
    assert "normal form: 1 - x - y + x*y" in out


def test_normalize_json(capsys):
    code, doc = invoke_json(capsys, ["normalize", "x*x - x"])
    assert code == 0
    assert doc["command"] == "normalize"
    assert doc["data"] == {
        "term": "x*x - x",
        "normal_form": "0",
        "vars": ["x"],
        "records": [],
    }


def test_expand_text(capsys):
    code, out = invoke(capsys, ["expand", "x + y"])
    assert code == 0
    assert strip_timing(out) == (
        "term: x + y\nvars: x y\n00: 0\n01: 1\n10: 1\n11: 2"
    )


def test_expand_json(capsys):
    code, doc = invoke_json(capsys, ["expand", "x - y"])
    assert code == 0
    assert doc["data"]["coefficients"] == [
        {"vertex": [0, 0], "coeff": 0},
        {"vertex": [0, 1], "coeff": -1},
        {"vertex": [1, 0], "coeff": 1},
        {"vertex": [1, 1], "coeff": 0},
    ]


def test_interpret_verdicts(capsys):
    code, out = invoke(capsys, ["interpret", "x*y"])
    assert code == 0
    assert "verdict: interpretable" in out
    code, out = invoke(capsys, ["interpret", "x + y"])
    assert code == 1
    assert "verdict: conditionally-interpretable" in out
    assert "bad constituent 11: coefficient 2" in out


def test_interpret_json(capsys):
    code, doc = invoke_json(capsys, ["interpret", "x + y"])
    assert code == 1
    assert doc["status"] == "ok"
    assert doc["data"]["bad_vertices"] == [[1, 1]]


def test_check_barbara_all_modes(capsys):
    code, out = invoke(capsys, ["check", BARBARA, "--mode", "all"])
    assert code == 0
    assert "oracle: valid" in out
    assert "certificate: verified (n=1)" in out
    assert "cofactor 1: x - x*y - x*z + x*y*z" in out
    assert "cofactor 2: x*y - x*y*z" in out
    assert "semantic: valid (universe sizes 1..3)" in out
    assert "note:" not in out


def test_check_single_mode(capsys):
    code, out = invoke(capsys, ["check", BARBARA, "--mode", "semantic"])
    assert code == 0
    assert "oracle" not in out
    assert "semantic: valid" in out


def test_check_json_verdicts(capsys):
    code, doc = invoke_json(capsys, ["check", BARBARA, "--mode", "all"])
    assert code == 0
    verdicts = doc["data"]["verdicts"]
    assert verdicts["oracle"] == {"valid": True, "witness": None}
    assert verdicts["certificate"]["verified"] is True
    assert verdicts["certificate"]["n"] == 1
    assert verdicts["semantic"]["valid"] is True
    assert "disagreement" not in doc["data"]


def test_check_trace_disagreement(capsys, tmp_path):
    problem = tmp_path / "collapse.prob"
    problem.write_text("vars: x\nconclude: x = 0\nmode: sigma1\nmax_n: 1\n")
    tracefile = tmp_path / "collapse.trace"
    tracefile.write_text(format_trace(cx_trace()))
    code, out = invoke(
        capsys,
        ["check", str(problem), "--mode", "all", "--trace", str(tracefile)],
    )
    assert code == 1
    assert "oracle: invalid at x -> 1" in out
    assert "certificate: none (oracle rejects)" in out
    assert "semantic: invalid at n=1 with x -> {0}" in out
    assert "trace (sigma1): accepted" in out
    assert "note: the symbolic and the class-algebra verdicts disagree" in out


def test_check_trace_rejected_in_hailperin_mode(capsys, tmp_path):
    problem = tmp_path / "collapse.prob"
    problem.write_text("vars: x\nconclude: x = 0\nmode: hailperin\nmax_n: 1\n")
    tracefile = tmp_path / "collapse.trace"
    tracefile.write_text(format_trace(cx_trace()))
    code, out = invoke(
        capsys, ["check", str(problem), "--mode", "oracle", "--trace", str(tracefile)]
    )
    assert code == 1
    assert "trace (hailperin): rejected at step 1" in out


def test_embed_verified(capsys):
    code, out = invoke(capsys, ["embed", "--boole", "1"])
    assert code == 0
    assert "indicator embedding: verified (12 entries)" in out


def test_embed_cap_exceeded(capsys):
    code = run(["embed", "--boole", "9"])
    assert code == 3


def test_model_search_found(capsys):
    code, out = invoke(capsys, ["model-search", COMMUTATIVE, "--size", "2"])
    assert code == 0
    assert "carrier: e0 e1" in out
    assert "e1 e1 -> e0" in out


def test_model_search_none(capsys):
    code, out = invoke(capsys, ["model-search", HAILPERIN_THY, "--size", "3"])
    assert code == 1
    assert "no total model of this size" in out


def test_model_search_cap(capsys):
    code = run(["model-search", COMMUTATIVE, "--size", "9"])
    assert code == 3


def test_cap_env_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("BOOLELAB_MAX_MODEL_SIZE", "2")
    assert run(["model-search", COMMUTATIVE, "--size", "3"]) == 3
    capsys.readouterr()
    code, out = invoke(
        capsys,
        ["--max-model-size", "3", "model-search", COMMUTATIVE, "--size", "3"],
    )
    assert code == 0


def test_counterexample_intro(capsys):
    code, out = invoke(capsys, ["counterexample", "intro"])
    assert code == 0
    assert "law -> x + y = x: holds" in out
    assert "law -> x + y = y: holds" in out
    assert "law -> x = y: fails at x -> 0, y -> 1" in out


def test_counterexample_cx(capsys):
    code, out = invoke(capsys, ["counterexample", "cx"])
    assert code == 0
    assert "sigma1 check: accepted" in out
    assert (
        "hailperin check: rejected at step 1:"
        " idempotence target 2*x is not a class symbol" in out
    )
    assert "semantic check: invalid at n=1 with x -> {0}" in out


def test_counterexample_cx_json(capsys):
    code, doc = invoke_json(capsys, ["counterexample", "cx"])
    assert code == 0
    data = doc["data"]
    assert data["sigma1"] == {"accepted": True}
    assert data["hailperin"]["step"] == 1
    assert data["semantic"]["witness"] == {"x": "{0}"}


def test_theorem_demo(capsys):
    code, out = invoke(capsys, ["theorem-demo"])
    assert code == 0
    assert "indicator embedding n=3: verified (120 entries)" in out
    assert "embedding search: none up to size 4" in out
    assert "x = y fails at x -> 0, y -> 1" in out


def test_usage_errors_exit_two(capsys):
    # argparse would exit the process; run() catches and maps to 2
    assert run(["normalize", "x +"]) == 2
    capsys.readouterr()
    assert run(["check", str(PKG_ROOT / "problems" / "missing.prob")]) == 2
    capsys.readouterr()
    assert run(["frobnicate"]) == 2
    capsys.readouterr()
    assert run(["check", BARBARA, "--mode", "sideways"]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert run(["--help"]) == 0
    capsys.readouterr()


def test_text_output_is_deterministic(capsys):
    _, first = invoke(capsys, ["check", BARBARA, "--mode", "all"])
    _, second = invoke(capsys, ["check", BARBARA, "--mode", "all"])
    assert strip_timing(first) == strip_timing(second)


def test_json_output_is_deterministic(capsys):
    _, first = invoke_json(capsys, ["counterexample", "cx"])
    _, second = invoke_json(capsys, ["counterexample", "cx"])
    first.pop("timing_ms")
    second.pop("timing_ms")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "boolelab", "normalize", "x*x - x"],
        capture_output=True,
        text=True,
        cwd=str(PKG_ROOT),
    )
    assert proc.returncode == 0
    assert "normal form: 0" in proc.stdout
