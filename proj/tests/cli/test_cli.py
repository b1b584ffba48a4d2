"""End-to-end tests for the grasscoh CLI binary (path in $GRASSCOH_CLI)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("GRASSCOH_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="GRASSCOH_CLI not set")


def run(*args, check=True):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"{args} failed rc={proc.returncode}: {proc.stderr}")
    return proc


def test_ring_text():
    out = run("ring", "Gr", "--field", "C", "--p", "2", "--q", "3").stdout
    assert "Gr_2(C^5)" in out
    assert "U(5)/U(2)xU(3)" in out
    assert "t^12 + t^10 + 2*t^8 + 2*t^6 + 2*t^4 + t^2 + 1" in out
    assert out.count("r1*r2^2") == 1


def test_ring_accepts_gk_names():
    a = run("ring", "Gr_2(C^5)").stdout
    b = run("ring", "U(5)/U(2)xU(3)").stdout
    assert a == b


def test_ring_exterior():
    out = run("ring", "LGr", "--field", "R", "--n", "3").stdout
    assert "generator degrees: 1 5" in out
    assert "euler char:       0" in out


def test_ring_usage_error_exit_2():
    proc = run("ring", "Gr", "--field", "C", "--p", "0", "--q", "3", check=False)
    assert proc.returncode == 2
    assert "error" in proc.stderr


def test_unknown_space_suggestion():
    proc = run("ring", "Gr_2(C5)", check=False)
    assert proc.returncode == 2
    assert "nearest known name" in proc.stderr


def test_table_clifford_entry():
    out = run("table", "Gr_1(C^2)", "--mode", "clifford").stdout
    assert "1/4" in out


def test_table_json_roundtrip_structure():
    out = run("table", "Gr_1(C^3)", "--format", "json").stdout
    data = json.loads(out)
    assert data["descriptor"]["family"] == "hpq"
    n = len(data["basis"])
    assert len(data["table"]) == n
    assert all(len(row) == n for row in data["table"])
    assert all(len(cell) == n for row in data["table"] for cell in row)


def test_table_deterministic_and_out_flag(tmp_path):
    p1 = tmp_path / "a.csv"
    p2 = tmp_path / "b.csv"
    run("table", "LGr(C^6)", "--format", "csv", "--out", str(p1))
    run("table", "LGr(C^6)", "--format", "csv", "--out", str(p2))
    assert p1.read_bytes() == p2.read_bytes()
    assert b"." not in p1.read_bytes()  # rationals never print as decimals


def test_schur_expand_multiply_convert():
    assert run("schur", "--p", "2", "--q", "3", "expand", "(2,0)").stdout.strip() == \
        "s(2) = r1^2 - r2"
    assert "s(1,1) + s(2)" in run("schur", "--p", "2", "--q", "3", "multiply",
                                  "(1,0)", "(1,0)").stdout
    assert "s(1,1) + s(2)" in run("schur", "--p", "2", "--q", "3", "convert", "r1^2").stdout
    proc = run("schur", "--p", "2", "--q", "3", "expand", "(4,0)", check=False)
    assert proc.returncode == 2


def test_verify_suites():
    out = run("verify", "--suite", "dims", "--max-size", "3").stdout
    assert "PASS" in out and "FAIL" not in out
    out = run("verify", "--suite", "termination", "--max-size", "3", "--trials", "50").stdout
    assert "FAIL" not in out
    data = json.loads(
        run("verify", "--suite", "schur", "--max-size", "2", "--format", "json").stdout)
    assert data["pass"] is True


def test_list_spaces():
    out = run("list-spaces").stdout
    assert "Gr_p(C^{p+q})" in out
    data = json.loads(run("list-spaces", "--format", "json").stdout)
    assert len(data) == 10


def test_threads_env_does_not_change_output():
    env1 = dict(os.environ, GRASSCOH_THREADS="1")
    env2 = dict(os.environ, GRASSCOH_THREADS="4")
    a = subprocess.run([CLI, "table", "Gr_2(C^5)"], capture_output=True, text=True, env=env1)
    b = subprocess.run([CLI, "table", "Gr_2(C^5)"], capture_output=True, text=True, env=env2)
    assert a.stdout == b.stdout
