"""CLI behavior: exit codes, artifacts, reports, determinism."""

import json
import subprocess
import sys

import pytest

from braidforge.cli import main
from braidforge.factorization import Factorization, frame_factorization


def test_usage_error_exits_2():
    assert main(["definitely-not-a-command"]) == 2
    assert main([]) == 2


def test_degen_audit(capsys):
    assert main(["degen", "phi8", "--audit"]) == 0
    out = capsys.readouterr().out
    assert "totals: parasitic 432, vertex 270, total 702" in out
    assert "[pass" in out


def test_degen_out_and_report(tmp_path):
    out = tmp_path / "phi8.json"
    report = tmp_path / "report.json"
    assert main(["degen", "phi8", "--audit", "--out", str(out),
                 "--report", str(report)]) == 0
    fz = Factorization.loads(out.read_text())
    assert fz.strands == 27 and fz.degree == 702
    rep = json.loads(report.read_text())
    assert rep["passed"]
    assert rep["manifest"]["outputs"]
    assert rep["manifest"]["command"] == "degen"


def test_degen_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["degen", "phi8", "--out", str(a)]) == 0
    assert main(["degen", "phi8", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_passes_trivially_on_frame_square(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(frame_factorization(2).dumps())
    assert main(["verify", str(path)]) == 0


def test_verify_fails_with_witness(tmp_path, capsys):
    fz = frame_factorization(3)
    broken = Factorization(3, fz.factors[:-1])
    path = tmp_path / "broken.json"
    path.write_text(broken.dumps())
    assert main(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert "fail" in out and "deficit" in out


def test_table_command(capsys):
    assert main(["table", "v1_conic_a"]) == 0
    out = capsys.readouterr().out
    assert out.count("ok  ") == 6


def test_relations_command(tmp_path):
    src = tmp_path / "frame.json"
    src.write_text(frame_factorization(3).dumps())
    dst = tmp_path / "rels.json"
    assert main(["relations", str(src), "--out", str(dst)]) == 0
    rels = json.loads(dst.read_text())
    assert len(rels) == 6


def test_regen_rejects_mismatched_input(tmp_path, capsys):
    path = tmp_path / "wrong.json"
    path.write_text(frame_factorization(27).dumps())
    assert main(["regen", "run", "--in", str(path)]) == 1


def test_regen_audit(tmp_path, capsys):
    out = tmp_path / "phi0.json"
    assert main(["regen", "run", "--audit", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "2862" in text
    fz = Factorization.loads(out.read_text())
    assert fz.strands == 54 and fz.degree == 2862


def test_goldens_replay():
    assert main(["goldens"]) == 0


def test_module_entry_point(tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(frame_factorization(2).dumps())
    proc = subprocess.run([sys.executable, "-m", "braidforge.cli",
                           "verify", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[pass" in proc.stdout
