"""CLI surface: subcommands, exit codes, artifact determinism."""

import subprocess
import sys

import pytest

from projseq.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_find_poly_micro(capsys):
    code, out, _ = run_cli(capsys, "find-poly", "1")
    assert code == 0
    assert "a=1" in out and "b=1" in out and "modulus=3" in out


def test_find_poly_q4(capsys):
    code, out, _ = run_cli(capsys, "find-poly", "2")
    assert code == 0
    assert "a=1" in out and "b=2" in out


def test_generate_csv_micro(capsys, tmp_path):
    out_path = tmp_path / "fam1.csv"
    code, _, _ = run_cli(capsys, "generate", "1", "--format", "csv", "--out", str(out_path))
    assert code == 0
    rows = [l for l in out_path.read_text().splitlines() if not l.startswith("#")]
    assert rows == ["-1,-1,1"]


def test_generate_json_n5(capsys, tmp_path):
    out_path = tmp_path / "fam5.json"
    code, _, _ = run_cli(capsys, "generate", "5", "--out", str(out_path))
    assert code == 0
    import json

    doc = json.loads(out_path.read_text())
    assert doc["family_size"] == 31
    assert all(len(row) == 33 for row in doc["sequences"])


def test_generate_deterministic_bytes(capsys, tmp_path):
    a = tmp_path / "a.seqbin"
    b = tmp_path / "b.seqbin"
    assert run_cli(capsys, "generate", "4", "--format", "seqbin", "--out", str(a))[0] == 0
    assert run_cli(capsys, "generate", "4", "--format", "seqbin", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_generate_invalid_override_exits_1(capsys):
    code, _, err = run_cli(capsys, "generate", "2", "--a", "0", "--b", "2")
    assert code == 1
    assert "error:" in err
    code, _, err = run_cli(capsys, "generate", "2", "--a", "1")
    assert code == 1


def test_analyze_inline_n5(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--n", "5")
    assert code == 0
    assert '"cor": 11' in out and '"bound": 11' in out


def test_analyze_file_and_thread_determinism(capsys, tmp_path):
    fam = tmp_path / "fam.seqbin"
    assert run_cli(capsys, "generate", "5", "--format", "seqbin", "--out", str(fam))[0] == 0
    r1 = tmp_path / "r1.json"
    r2 = tmp_path / "r2.json"
    code, out1, _ = run_cli(capsys, "analyze", str(fam), "--threads", "1", "--out", str(r1))
    assert code == 0
    code, out2, _ = run_cli(capsys, "analyze", str(fam), "--threads", "4", "--out", str(r2))
    assert code == 0
    assert out1 == out2
    assert r1.read_bytes() == r2.read_bytes()


def test_analyze_corrupted_file_exits_1(capsys, tmp_path):
    bad = tmp_path / "bad.seqbin"
    bad.write_bytes(b"LCS1\x01garbage")
    code, _, err = run_cli(capsys, "analyze", str(bad))
    assert code == 1
    assert "error:" in err


def test_analyze_requires_exactly_one_source(capsys, tmp_path):
    code, _, err = run_cli(capsys, "analyze")
    assert code == 1
    fam = tmp_path / "f.json"
    run_cli(capsys, "generate", "2", "--out", str(fam))
    code, _, err = run_cli(capsys, "analyze", str(fam), "--n", "2")
    assert code == 1


def test_analyze_large_needs_override(capsys):
    code, _, err = run_cli(capsys, "analyze", "--n", "11")
    assert code == 1
    assert "force-large" in err


def test_table2_range(capsys, tmp_path):
    csv_path = tmp_path / "rows.csv"
    code, out, _ = run_cli(capsys, "table2", "1", "5", "--csv", str(csv_path))
    assert code == 0
    assert "balanced_count" in out
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("field_size,")
    row32 = lines[-1].split(",")
    assert row32[:5] == ["32", "33", "31", "11", "11"]


def test_table2_validates_range(capsys):
    assert run_cli(capsys, "table2", "5", "3")[0] == 1
    assert run_cli(capsys, "table2", "1", "11")[0] == 1


def test_gold_command(capsys):
    code, out, _ = run_cli(capsys, "gold", "3")
    assert code == 0
    assert "max_correlation=5" in out
    code, _, err = run_cli(capsys, "gold", "4")
    assert code == 1


def test_verify_command(capsys):
    code, out, _ = run_cli(capsys, "verify", "2")
    assert code == 0
    assert "all checks passed" in out
    assert out.count("ok") >= 7


def test_verify_failure_exits_2(capsys, monkeypatch):
    from projseq import cli
    from projseq.verify import CheckResult

    monkeypatch.setattr(
        cli, "run_checks", lambda n, threads=1: [CheckResult("stub", False, "boom")]
    )
    code, out, err = run_cli(capsys, "verify", "2")
    assert code == 2
    assert "FAIL" in out and "failed" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "projseq", "find-poly", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "b=2" in proc.stdout
