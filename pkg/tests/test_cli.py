"""Command line behavior: formats, evaluation, exit codes."""

import json
import subprocess
import sys

import pytest

from parklc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pf_poly_human(capsys):
    code, out, err = run_cli(capsys, "pf-poly", "3")
    assert code == 0 and err == ""
    assert out.strip() == "x^3 + 3x^4 + 6x^5 + 6x^6"


def test_pf_poly_json(capsys):
    code, out, _ = run_cli(capsys, "pf-poly", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "coeffs": {"4": "1", "5": "4", "6": "10", "7": "20",
                   "8": "30", "9": "36", "10": "24"}
    }


def test_pf_poly_csv(capsys):
    code, out, _ = run_cli(capsys, "pf-poly", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["2,1", "3,2"]


def test_inv_poly(capsys):
    code, out, _ = run_cli(capsys, "inv-poly", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["0,6", "1,6", "2,3", "3,1"]


def test_connected_poly(capsys):
    code, out, _ = run_cli(capsys, "connected-poly", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "coeffs": {"3": "16", "4": "15", "5": "6", "6": "1"}
    }


def test_gpf_named_graph(capsys):
    code, out, _ = run_cli(capsys, "gpf", "--graph", "banana", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["1,1", "2,1"]


def test_tutte_json_and_csv(capsys):
    code, out, _ = run_cli(capsys, "tutte", "--graph", "complete:3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"coeffs": {"0,1": "1", "1,0": "1", "2,0": "1"}}
    code, out, _ = run_cli(capsys, "tutte", "--graph", "complete:3", "--format", "csv")
    assert code == 0
    assert sorted(out.splitlines()) == ["0,1,1", "1,0,1", "2,0,1"]


def test_tutte_at_point(capsys):
    code, out, _ = run_cli(capsys, "tutte", "--graph", "complete:5", "--at", "1", "1")
    assert code == 0
    assert out.strip() == "125"
    code, out, _ = run_cli(capsys, "tutte", "--graph", "cycle:4", "--at", "2", "2")
    assert code == 0
    assert out.strip() == str(2 ** 4)


def test_dual_tutte_swaps_point(capsys):
    code, a, _ = run_cli(capsys, "tutte", "--graph", "complete:4", "--at", "3", "2")
    code2, b, _ = run_cli(capsys, "dual-tutte", "--graph", "complete:4", "--at", "2", "3")
    assert code == 0 and code2 == 0
    assert a == b


def test_graph_file_input(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(
        {"vertices": 2, "edges": [[0, 1], [0, 1]]}
    ))
    code, out, _ = run_cli(capsys, "tutte", "--graph", str(path))
    assert code == 0
    assert out.strip() == "x + y"


def test_verify_human_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-n", "3", "--format", "json")
    assert code == 0
    parsed = json.loads(out)
    assert parsed and all(d["passed"] for d in parsed)


def test_diagnostics_roundtrips_big_coefficients(tmp_path, capsys):
    coeffs = {"0": "1", "1": str(10 ** 30), "2": str(10 ** 59)}
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"coeffs": coeffs}))
    code, out, _ = run_cli(capsys, "diagnostics", "--poly", str(path), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["is_log_concave"] is True
    assert report["first_violation"] is None


def test_diagnostics_reports_violation(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"coeffs": {"0": "1", "1": "1", "2": "5"}}))
    code, out, _ = run_cli(capsys, "diagnostics", "--poly", str(path))
    assert code == 0
    assert "False" in out
    assert "exponent 1" in out


def test_usage_errors_exit_two(tmp_path, capsys):
    code, _, err = run_cli(capsys, "tutte", "--graph", "hypercube:3")
    assert code == 2 and err.startswith("error:")
    code, _, err = run_cli(capsys, "pf-poly", "99")
    assert code == 2 and err.startswith("error:")
    code, _, err = run_cli(capsys, "verify", "--suite", "nonsense")
    assert code == 2 and err.startswith("error:")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "tutte", "--graph", str(bad))
    assert code == 2 and err.startswith("error:")
    missing = tmp_path / "missing.json"
    code, _, err = run_cli(capsys, "tutte", "--graph", str(missing))
    assert code == 2 and err.startswith("error:")


def test_threads_validation(capsys):
    code, _, err = run_cli(capsys, "pf-poly", "3", "--threads", "0")
    assert code == 2 and err.startswith("error:")
    code, out, _ = run_cli(capsys, "pf-poly", "3", "--threads", "2")
    assert code == 0
    assert out.strip() == "x^3 + 3x^4 + 6x^5 + 6x^6"


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "parklc.cli", "inv-poly", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2 + x"


def test_verify_failure_exit_code(monkeypatch, capsys):
    # force one red result to confirm the nonzero exit path
    import parklc.cli as cli
    import parklc.verify as verify
    from parklc.polyalg import IntPolynomial

    def fake_suite(*, max_n=None, threads=1):
        return [verify.identity_check(
            "demo", "x", IntPolynomial({0: 1}), IntPolynomial({0: 2})
        )]

    monkeypatch.setattr(cli, "run_default_suite", fake_suite)
    code, out, _ = run_cli(capsys, "verify")
    assert code == 1
    assert "FAIL" in out
