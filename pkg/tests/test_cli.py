import json
import subprocess
import sys

import pytest

from mhopf.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,expected", [
    (["--op", "antipode", "b"], "-1*a^-1*b"),
    (["--op", "counit", "a^5"], "1"),
    (["--op", "product", "b", "a"], "-1*a^1*b"),
    (["--op", "coproduct-cov", "b", "1"], "1*b (x) 1 + 1*a^1 (x) b"),
    (["--instance", "ore-dual", "--op", "product", "w[3,0]", "w[3,1]"], "0"),
    (["--instance", "ore-dual", "--op", "coproduct-cov", "w[5,0]", "w[2,0]"], "1*w[3,0] (x) w[2,0]"),
    (["--instance", "ore-dual", "--op", "antipode", "w[3,1]"], "-1*w[-4,1]"),
    (["--op", "pairing", "w[2,1]", "a^2*b"], "1"),
    (["--instance", "group-algebra", "--group", "Z4", "--op", "pairing", "u[1]", "d[1]"], "1"),
])
def test_eval_examples(capsys, argv, expected):
    code, out, _ = _run(capsys, "eval", *argv)
    assert code == 0 and out.strip() == expected


def test_eval_twist_in_double(capsys):
    code, out, _ = _run(capsys, "eval", "--instance", "group-double", "--group", "S3", "--op", "twist", "d[123]",
                        "u[213]")
    assert code == 0 and out.strip() == "1*u[213] (x) d[123]"


@pytest.mark.parametrize("argv", [
    ["eval", "--op", "antipode", "w[1,2]"],
    ["eval", "--op", "antipode", "a", "b"],
    ["eval", "--op", "twist", "a", "b"],
    ["eval", "--instance", "group-functions", "--group", "Q8", "--op", "counit", "d[1]"],
    ["verify", "--instance", "ore", "--suite", "relations"],
    ["verify", "--instance", "ore", "--corrupt", "nope"],
])
def test_errors_exit_2(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 2 and err.startswith("error: ")


@pytest.mark.parametrize("argv", [
    ["--instance", "ore-dual", "--suite", "qt-axioms,inner-s2", "--radius", "3"],
    ["--instance", "group-double", "--group", "Z4", "--suite", "u-tilde,grouplike-tilde"],
    ["--instance", "ore", "--radius", "3"],
])
def test_verify_ok(capsys, argv):
    code, out, _ = _run(capsys, "verify", *argv)
    assert code == 0 and "-> OK" in out


def test_verify_examples(capsys):
    code, _, _ = _run(capsys, "verify", "--instance", "ore-dual", "--suite", "qt-axioms,yang-baxter,prop-2-9",
                      "--radius", "4")
    assert code == 0
    code, out, _ = _run(capsys, "verify", "--instance", "ore-double", "--suite", "inner-s4")
    assert code == 0 and "fixture g = sum (-1)^p w[p,0] a^-1 = delta_hat >< delta_A: pass" in out
    code, out, _ = _run(capsys, "verify", "--instance", "group-double", "--group", "S3", "--suite",
                        "thm-3-11-1,grouplike-tilde")
    assert code == 0 and "fixture u~ S(u~)^-1 = 1: pass" in out


def test_verify_failure_exit_1(capsys):
    code, out, _ = _run(capsys, "verify", "--instance", "ore-dual", "--suite", "qt-axioms", "--radius", "3",
                        "--corrupt", "r-sign")
    assert code == 1 and "FAIL" in out


def test_gate_block_exit_1(capsys):
    code, out, _ = _run(capsys, "verify", "--instance", "ore", "--radius", "3", "--corrupt", "product-sign")
    assert code == 1 and "suites not run" in out


def test_json_report_is_deterministic(tmp_path, capsys):
    args = ["verify", "--instance", "ore-dual", "--suite", "inner-s2", "--radius", "3", "--format", "json"]
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--out", str(p1)]) == 0
    assert main(args + ["--out", str(p2)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
    doc = json.loads(p1.read_text())
    assert doc["config"]["radius"] == 3 and doc["oracle_gate"] == "pass"
    assert doc["suites"][0]["status"] == "pass"
    assert doc["summary"]["fail"] == 0


def test_listing_commands(capsys):
    code, out, _ = _run(capsys, "list-suites")
    assert code == 0 and "thm-3-11-1" in out and "negative control" in out
    code, out, _ = _run(capsys, "list-instances")
    assert code == 0 and "group-double" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mhopf.cli", "eval", "--op", "counit", "a^5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
