import json
import math

import numpy as np
import pytest

from fpint import cli


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEvalHilbert:
    def test_full_line_exp_osc_row(self, capsys):
        code, out, _ = run(capsys, [
            "eval-hilbert", "--variant", "full-line", "--function", "exp_osc:a=1",
            "--omega", "0.5", "--hash-mode"])
        assert code == 0
        payload = json.loads(out)
        row = payload["results"][0]
        want = -1j * math.pi * np.exp(1j * 0.5)
        got = complex(row["value"]["re"], row["value"]["im"])
        assert abs(got - want) < 1e-9 * abs(want)

    def test_omega_grid(self, capsys):
        code, out, _ = run(capsys, [
            "eval-hilbert", "--variant", "one-sided", "--function", "exp_decay:a=1",
            "--omega", "0.1:0.5:5", "--hash-mode"])
        assert code == 0
        payload = json.loads(out)
        assert len(payload["results"]) == 5
        assert payload["results"][0]["omega"] == 0.1

    def test_json_roundtrip_bit_identical(self, capsys):
        from fpint import funcmodel as fm
        from fpint import hilbert as hb
        code, out, _ = run(capsys, [
            "eval-hilbert", "--variant", "sym-omega", "--function", "exp_decay:a=1",
            "--nu", "0.25", "--omega", "0.3", "--hash-mode"])
        assert code == 0
        row = json.loads(out)["results"][0]
        rep = hb.sym_omega(fm.builtin("exp_decay", a=1.0), 0.25, 0.3)
        assert row["value"]["re"] == rep.value.real
        assert row["value"]["im"] == rep.value.imag


class TestEvalFp:
    def test_d1_value(self, capsys):
        code, out, _ = run(capsys, [
            "eval-fp", "--function", "exp_decay:a=1", "--k", "1", "--nu", "0.5",
            "--upper", "inf", "--hash-mode"])
        assert code == 0
        row = json.loads(out)["results"][0]
        assert abs(row["value"]["re"] + 2.0 * math.sqrt(math.pi)) < 1e-10

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, [
            "eval-fp", "--function", "exp_decay:a=1", "--k", "1", "--nu", "0.5",
            "--upper", "inf", "--format", "csv", "--hash-mode"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split(",")[:3] == ["function", "k", "nu"]
        assert float(lines[1].split(",")[4]) == pytest.approx(-2.0 * math.sqrt(math.pi))


class TestAsym:
    def test_one_sided_log(self, capsys):
        code, out, _ = run(capsys, [
            "asym", "--variant", "one-sided", "--function", "exp_decay:a=1",
            "--hash-mode"])
        assert code == 0
        row = json.loads(out)["results"][0]
        assert row["leading_kind"] == "log"
        assert row["coefficient"]["re"] == pytest.approx(1.0)


class TestVerify:
    def test_single_item(self, capsys, tmp_path):
        path = tmp_path / "rep.json"
        code, _, err = run(capsys, [
            "verify", "--items", "D.13", "--hash-mode", "--out", str(path)])
        assert code == 0
        payload = json.loads(path.read_text())
        assert payload["reports"][0]["passed"] is True
        assert "timestamp" not in payload

    def test_all_c_items(self, capsys, tmp_path):
        path = tmp_path / "c.json"
        code, _, err = run(capsys, [
            "verify", "--items", "C.*", "--hash-mode", "--out", str(path)])
        assert code == 0
        payload = json.loads(path.read_text())
        assert len(payload["reports"]) == 32
        assert all(r["passed"] for r in payload["reports"])

    def test_deterministic_bytes(self, capsys, tmp_path):
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        for p in (p1, p2):
            code, _, _ = run(capsys, [
                "verify", "--items", "D.1", "--hash-mode", "--out", str(p)])
            assert code == 0
        assert p1.read_bytes() == p2.read_bytes()


class TestList:
    def test_all_57(self, capsys):
        code, out, _ = run(capsys, ["list", "--hash-mode"])
        assert code == 0
        assert len(json.loads(out)["results"]) == 57

    def test_kernel_filter(self, capsys):
        code, out, _ = run(capsys, ["list", "--kernel", "sym_omega", "--hash-mode"])
        assert code == 0
        ids = {r["id"] for r in json.loads(out)["results"]}
        assert {"C.10", "C.20"} <= ids


class TestExitCodes:
    def test_schema_error_bad_omega(self, capsys):
        code, _, err = run(capsys, [
            "eval-hilbert", "--variant", "one-sided", "--function",
            "exp_decay:a=1", "--omega", "abc"])
        assert code == 2
        assert "schema" in err

    def test_schema_error_unknown_builtin(self, capsys):
        code, _, _ = run(capsys, [
            "eval-hilbert", "--variant", "one-sided", "--function", "nope:a=1",
            "--omega", "0.5"])
        assert code == 2

    def test_schema_error_missing_field(self, capsys):
        code, _, _ = run(capsys, ["eval-hilbert", "--variant", "one-sided"])
        assert code == 2

    def test_numerical_failure(self, capsys):
        # omega at the convergence boundary: named numerical failure, exit 3
        code, _, err = run(capsys, [
            "eval-hilbert", "--variant", "one-sided", "--function",
            "inv_linear:c=1", "--omega", "0.999"])
        assert code == 3
        assert "ConvergenceDomain" in err


def test_console_entry_point_subprocess(tmp_path):
    import subprocess, sys
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    for out in (out1, out2):
        proc = subprocess.run(
            [sys.executable, "-m", "fpint.cli", "verify", "--items", "D.19",
             "--hash-mode", "--out", str(out)],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
    # cross-process byte determinism
    assert out1.read_bytes() == out2.read_bytes()


def test_env_precision_override(monkeypatch):
    from fpint.precision import default_precision
    monkeypatch.setenv("FPINT_PRECISION", "1e-9")
    assert default_precision().rel_tol == 1e-9
    monkeypatch.setenv("FPINT_PRECISION", "garbage")
    with pytest.raises(ValueError):
        default_precision()


class TestJobFile:
    def test_job_file_merge_and_flag_override(self, capsys, tmp_path):
        job = tmp_path / "job.json"
        job.write_text(json.dumps({
            "variant": "one-sided", "function": "exp_decay:a=1",
            "omega": "0.2", "hash-mode": True}))
        code, out, _ = run(capsys, ["eval-hilbert", "--job", str(job)])
        assert code == 0
        assert json.loads(out)["results"][0]["omega"] == 0.2
        # flag overrides the job file
        code, out, _ = run(capsys, [
            "eval-hilbert", "--job", str(job), "--omega", "0.4"])
        assert json.loads(out)["results"][0]["omega"] == 0.4

    def test_unknown_job_field(self, capsys, tmp_path):
        job = tmp_path / "job.json"
        job.write_text(json.dumps({"variant": "one-sided", "bogus": 1}))
        code, _, _ = run(capsys, ["eval-hilbert", "--job", str(job)])
        assert code == 2
