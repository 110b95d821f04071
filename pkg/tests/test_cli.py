"""Command-line surface: outputs, exit codes, determinism."""

import json

import pytest

from cyclofourier.cli import main
from cyclofourier.report import VerifyReport
from cyclofourier.cli import _emit_report


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_phi_text(capsys):
    code, out, _ = run_cli(capsys, "phi", "--n", "1")
    assert code == 0 and out.strip() == "X - 1"
    code, out, _ = run_cli(capsys, "phi", "--n", "12")
    assert code == 0 and out.strip() == "X^4 - X^2 + 1"


def test_phi_json(capsys):
    code, out, _ = run_cli(capsys, "phi", "--n", "4", "--format", "json")
    assert code == 0
    assert json.loads(out) == ["1", "0", "1"]


def test_verify_fourier_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "fourier", "--p", "2",
                           "--max-order", "8", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "verify-fourier"
    assert payload["failed"] == 0
    assert payload["passed"] == len(payload["checks"]) > 0


def test_verify_gauss_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "gauss", "--p", "3", "--max-r", "2",
                           "--format", "text")
    assert code == 0
    assert out.strip().endswith("failed=0")


def test_verify_iso_with_dump(capsys):
    code, out, _ = run_cli(capsys, "verify", "iso", "--p", "2", "--max-order", "4",
                           "--natural-max-order", "4", "--dump-matrix")
    assert code == 0
    payload = json.loads(out)
    iso_checks = [c for c in payload["checks"] if c["id"].startswith("iso-")]
    assert len(iso_checks) == 4
    assert all("matrix" in c["witness"] for c in iso_checks)


def test_verify_criterion_oracle_deterministic(capsys):
    args = ("verify", "criterion-oracle", "--p", "2", "--r", "2",
            "--samples", "12", "--seed", "42")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["params"]["seed"] == 42
    assert payload["failed"] == 0


def test_jobs_do_not_change_output(capsys):
    base = ("verify", "iso", "--p", "2", "--max-order", "8",
            "--natural-max-order", "4")
    code1, out1, _ = run_cli(capsys, *base, "--jobs", "1")
    code2, out2, _ = run_cli(capsys, *base, "--jobs", "4")
    assert code1 == code2 == 0
    assert out1 == out2


def test_verify_naturality(capsys):
    code, out, _ = run_cli(capsys, "verify", "naturality", "--p", "2",
                           "--max-order", "8")
    assert code == 0
    assert json.loads(out)["failed"] == 0


def test_diag_outputs(capsys):
    code, out, _ = run_cli(capsys, "diag", "--modulus", "5", "--n", "4")
    assert code == 0
    assert json.loads(out) == {"decision": True, "witness": 2}
    code, out, _ = run_cli(capsys, "diag", "--modulus", "7", "--n", "4")
    assert code == 0
    assert json.loads(out) == {"decision": False, "reason": "no-cyclotomic-root"}
    code, out, _ = run_cli(capsys, "diag", "--modulus", "6", "--group", "2,2")
    assert code == 0
    assert json.loads(out) == {"decision": False, "reason": "n-not-invertible"}


def test_diag_emit_iso(capsys):
    code, out, _ = run_cli(capsys, "diag", "--modulus", "5", "--n", "4", "--emit-iso")
    assert code == 0
    payload = json.loads(out)
    assert payload["decision"] is True
    assert payload["points"] == [1, 2, 4, 3]
    assert payload["matrix"][0] == [1, 1, 1, 1]


def test_gauss_table_csv(capsys):
    code, out, _ = run_cli(capsys, "gauss-table", "--p", "3", "--max-r", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].rstrip("\r") == "N,chi_exponents,u,sum_coeffs,is_unit"
    assert len(lines) == 1 + 2 * 3  # two characters, three shifts


def test_gauss_table_json(capsys):
    code, out, _ = run_cli(capsys, "gauss-table", "--p", "2", "--max-r", "2",
                           "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert {row["N"] for row in rows} == {2, 4}
    assert all(set(row) == {"N", "chi_exponents", "u", "sum_coeffs", "is_unit"}
               for row in rows)


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "diag", "--modulus", "5", "--n", "4",
                           "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text()) == {"decision": True, "witness": 2}


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["phi"])  # missing required --n
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_budget_exceeded_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("CYCLO_BUDGET", "10")
    code, _, err = run_cli(capsys, "diag", "--modulus", "1001", "--n", "4")
    assert code == 3
    assert "budget" in err


def test_failing_report_maps_to_exit_one(capsys):
    report = VerifyReport("demo", {})
    report.add("a", "always fails", False)
    assert _emit_report(report, "text", None) == 1
    capsys.readouterr()
