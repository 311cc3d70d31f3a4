"""CLI harness: suites run, reports serialize, seeds reproduce."""

import csv
import json
import subprocess
import sys

import pytest

from eisenspec.cli import (RunConfig, build_parser, config_from_args,
                           emit_csv, run)


def test_run_combinatorics_suite(tmp_path):
    cfg = RunConfig(command="combinatorics",
                    json_path=str(tmp_path / "report.json"))
    report = run(cfg)
    assert report.all_passed
    blob = json.loads((tmp_path / "report.json").read_text())
    assert blob["schema"] == "eisenspec.verification_report/1"
    assert blob["summary"]["failed"] == 0
    assert all("anchor" in c for c in blob["checks"])


def test_run_volume_suite():
    cfg = RunConfig(command="volume", group="gl4")
    report = run(cfg)
    assert report.all_passed
    names = [r.name for r in report.records]
    assert "volume-gl4" in names


def test_seed_determinism(tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    run(RunConfig(command="su3", seed=7, json_path=str(p1)))
    run(RunConfig(command="su3", seed=7, json_path=str(p2)))
    a = json.loads(p1.read_text())
    b = json.loads(p2.read_text())
    a.pop("timestamp")
    b.pop("timestamp")
    assert a == b


def test_nmatrix_suite_csv(tmp_path):
    csv_path = tmp_path / "nmatrix.csv"
    cfg = RunConfig(command="nmatrix", csv_path=str(csv_path))
    report = run(cfg)
    assert report.all_passed
    with open(csv_path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0][0] == "z_imag"
    assert rows[0][-1] == "minor_residual"
    assert len(rows) == 122
    assert all(float(r[-1]) < 1e-9 for r in rows[1:])


def test_emit_csv_roundtrip(tmp_path):
    path = tmp_path / "series.csv"
    emit_csv({"t": [0.0, 1.0], "value": [0.5235987755982988, 2.0]}, str(path))
    text = path.read_text()
    lines = text.split("\n")
    assert lines[0] == "t,value"
    assert "0.52359877559829882" in lines[1]


def test_emit_csv_empty_and_inconsistent(tmp_path):
    path = tmp_path / "empty.csv"
    emit_csv({"a": [], "b": []}, str(path))
    assert path.read_text() == "a,b\n"
    with pytest.raises(ValueError):
        emit_csv({"a": [1.0], "b": []}, str(path))


def test_parser_tolerance_flags():
    parser = build_parser()
    args = parser.parse_args(["--command", "zeta",
                              "--tol-functional-equation", "1e-9",
                              "--lambda0", "1.4,1.6"])
    cfg = config_from_args(args)
    assert cfg.tolerances["functional-equation"] == 1e-9
    assert cfg.lambda0 == (1.4, 1.6)


def test_cli_exit_code_zero():
    proc = subprocess.run(
        [sys.executable, "-m", "eisenspec.cli", "--command", "lfn"],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "all checks passed" in proc.stdout


def test_cli_gln_parse():
    assert RunConfig(group="gl4").gln() == 4
    assert RunConfig(group="gln5").gln() == 5


def test_failing_tolerance_reported():
    cfg = RunConfig(command="volume")
    cfg.tolerances["volume"] = -1.0  # unmeetable on purpose
    report = run(cfg)
    assert not report.all_passed
    blob = report.to_json_dict()
    assert blob["summary"]["failed"] > 0


def test_cli_exit_code_nonzero_on_failure():
    proc = subprocess.run(
        [sys.executable, "-m", "eisenspec.cli", "--command", "volume",
         "--tol-volume", "-1"],
        capture_output=True, text=True)
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout
