"""Command line behavior: config handling, outputs, exit codes."""

import json
import subprocess
import sys

import numpy as np
import pytest

from maxsurf.cli import main


def write_config(path, **fields):
    path.write_text(json.dumps(fields))
    return str(path)


def test_families_lists_every_id(capsys):
    assert main(["families"]) == 0
    out = capsys.readouterr().out
    for fam in ("bending-timelike", "bending-spacelike",
                "lightlike-rotational", "helicoidal-timelike",
                "helicoidal-spacelike-i", "helicoidal-spacelike-ii",
                "elliptic-catenoid", "hyperbolic-catenoid",
                "helicoidal-timelike-constant", "enneper-second-kind"):
        assert fam in out


def test_no_command_prints_help(capsys):
    assert main([]) == 2
    assert "sample" in capsys.readouterr().out


def test_sample_writes_obj_and_csv(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="elliptic-catenoid",
                       a=1.0,
                       grid={"u_min": -3.0, "u_max": 3.0, "v_min": -0.5,
                             "v_max": 0.5, "nu": 64, "nv": 16},
                       out=str(tmp_path / "mesh"), formats=["obj", "csv"])
    assert main(["sample", "--config", cfg]) == 0
    obj = (tmp_path / "mesh.obj").read_text().splitlines()
    assert obj[0] == "# maxsurf mesh"
    v_lines = [l for l in obj if l.startswith("v ")]
    f_lines = [l for l in obj if l.startswith("f ")]
    assert len(v_lines) == 64 * 16 == 1024
    assert len(f_lines) == 63 * 15
    csv = (tmp_path / "mesh.csv").read_text().splitlines()
    assert csv[0] == "u,v,x,y,z,spacelike"
    assert len(csv) == 1 + 1024
    # 17 significant digits survive a float round trip exactly
    for row in csv[1:16]:
        parts = row.split(",")
        for token in parts[:5]:
            assert f"{float(token):.17g}" == token


def test_sample_defaults_grid_from_family(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="bending-timelike",
                       out=str(tmp_path / "m"))
    assert main(["sample", "--config", cfg]) == 0
    out = capsys.readouterr().out
    assert "1024 vertices" in out


def test_sample_marks_nonspacelike_vertices(tmp_path):
    cfg = write_config(tmp_path / "c.json", family="lightlike-rotational",
                       a=0.0,
                       grid={"u_min": -1.0, "u_max": 1.0, "v_min": 0.0,
                             "v_max": 1.0, "nu": 5, "nv": 5},
                       out=str(tmp_path / "m"))
    assert main(["sample", "--config", cfg]) == 0
    obj = (tmp_path / "m.obj").read_text()
    assert "# nonspacelike" in obj


def test_sample_is_deterministic(tmp_path):
    cfg = write_config(tmp_path / "c.json", family="bending-spacelike",
                       a=1.0, formats=["obj", "csv"])
    for name in ("a", "b"):
        assert main(["sample", "--config", cfg,
                     "--out", str(tmp_path / name)]) == 0
    assert (tmp_path / "a.obj").read_bytes() == (tmp_path / "b.obj").read_bytes()
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_thread_env_does_not_change_output(tmp_path, monkeypatch):
    cfg = write_config(tmp_path / "c.json", family="hyperbolic-catenoid",
                       a=1.0)
    monkeypatch.setenv("MAXSURF_THREADS", "1")
    assert main(["sample", "--config", cfg, "--out", str(tmp_path / "t1")]) == 0
    monkeypatch.setenv("MAXSURF_THREADS", "7")
    assert main(["sample", "--config", cfg, "--out", str(tmp_path / "t7")]) == 0
    assert (tmp_path / "t1.obj").read_bytes() == (tmp_path / "t7.obj").read_bytes()


def test_thread_env_validation(tmp_path, monkeypatch, capsys):
    cfg = write_config(tmp_path / "c.json", family="bending-timelike")
    monkeypatch.setenv("MAXSURF_THREADS", "zero")
    assert main(["sample", "--config", cfg, "--out", str(tmp_path / "x")]) == 2
    monkeypatch.setenv("MAXSURF_THREADS", "0")
    assert main(["sample", "--config", cfg, "--out", str(tmp_path / "x")]) == 2


def test_verify_report_schema_and_status(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="bending-spacelike", a=1.0)
    report_path = tmp_path / "report.json"
    assert main(["verify", "--config", cfg,
                 "--report", str(report_path)]) == 0
    report = json.loads(report_path.read_text())
    assert report["schema"] == "maxsurf-report/1"
    assert report["passed"] is True
    assert report["surface"]["family"] == "bending-spacelike"
    names = {c["name"] for c in report["checks"]}
    assert {"oracle-agreement", "mean-curvature", "conformality",
            "core-curve", "normal-field", "null-condition",
            "forms-match-data", "pair-reconstruction", "period-phi1",
            "period-phi2", "period-phi3", "total-curvature"} <= names
    out = capsys.readouterr().out
    assert "PASS oracle-agreement" in out
    assert out.strip().endswith("ok")


def test_verify_report_is_deterministic(tmp_path):
    cfg = write_config(tmp_path / "c.json", family="elliptic-catenoid", a=1.0)
    for name in ("r1.json", "r2.json"):
        assert main(["verify", "--config", cfg,
                     "--report", str(tmp_path / name)]) == 0
    assert (tmp_path / "r1.json").read_bytes() \
        == (tmp_path / "r2.json").read_bytes()


def test_verify_suite_filtering(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="bending-spacelike", a=2.0)
    assert main(["verify", "--config", cfg, "--suite", "periods"]) == 0
    report = json.loads(capsys.readouterr().out.split("\nPASS")[0])
    names = [c["name"] for c in report["checks"]]
    assert names == ["period-phi1", "period-phi2", "period-phi3"]

    assert main(["verify", "--config", cfg, "--suite", "h"]) == 0
    report = json.loads(capsys.readouterr().out.split("\nPASS")[0])
    names = [c["name"] for c in report["checks"]]
    assert names == ["mean-curvature", "conformality"]


def test_verify_equivariance_suite(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="elliptic-catenoid", a=1.0,
                       suite="equivariance")
    assert main(["verify", "--config", cfg]) == 0
    out = capsys.readouterr().out
    assert "equivariance" in out
    assert "isometry:rotation-timelike-axis" in out


def test_verify_curvature_suite_skips_without_target(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="helicoidal-timelike",
                       a=1.0, suite="curvature")
    assert main(["verify", "--config", cfg]) == 0
    assert "SKIP total-curvature" in capsys.readouterr().out


def test_injected_failure_returns_one(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="bending-timelike", a=1.0,
                       perturb=0.05)
    assert main(["verify", "--config", cfg]) == 1
    out = capsys.readouterr().out
    assert "FAIL oracle-agreement" in out
    assert "FAIL core-curve" in out
    assert out.strip().endswith("FAILED")


def test_config_error_paths(tmp_path, capsys):
    bad_family = write_config(tmp_path / "a.json", family="moebius")
    assert main(["verify", "--config", bad_family]) == 2
    unknown_key = write_config(tmp_path / "b.json",
                               family="bending-timelike", shiny=True)
    assert main(["verify", "--config", unknown_key]) == 2
    assert "shiny" in capsys.readouterr().err
    bad_tol = write_config(tmp_path / "c.json", family="bending-timelike",
                           tolerances={"oracle": -1.0})
    assert main(["verify", "--config", bad_tol]) == 2
    bad_grid = write_config(tmp_path / "d.json", family="bending-timelike",
                            grid={"u_min": 0, "u_max": 1})
    assert main(["verify", "--config", bad_grid]) == 2
    not_json = tmp_path / "e.json"
    not_json.write_text("not json")
    assert main(["verify", "--config", str(not_json)]) == 2
    bad_lam = write_config(tmp_path / "f.json", family="helicoidal-timelike",
                           a=1.0)
    assert main(["verify", "--config", bad_lam, "--lambda", "3.0"]) == 2


def test_io_error_paths(tmp_path, capsys):
    assert main(["verify", "--config", str(tmp_path / "missing.json")]) == 3
    cfg = write_config(tmp_path / "c.json", family="bending-timelike")
    assert main(["sample", "--config", cfg,
                 "--out", str(tmp_path / "no" / "dir" / "mesh")]) == 3


def test_set_overrides_reach_nested_fields(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="bending-spacelike", a=1.0,
                       grid={"u_min": -1.0, "u_max": 1.0, "v_min": -0.4,
                             "v_max": 0.4, "nu": 21, "nv": 21})
    assert main(["sample", "--config", cfg, "--out", str(tmp_path / "m"),
                 "--set", "grid.nu=8", "--set", "grid.nv=6"]) == 0
    obj = (tmp_path / "m.obj").read_text().splitlines()
    assert sum(1 for l in obj if l.startswith("v ")) == 48


def test_set_override_rejects_bad_path(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="bending-spacelike")
    assert main(["verify", "--config", cfg, "--set", "a.b=1"]) == 2
    assert main(["verify", "--config", cfg, "--set", "noequals"]) == 2


def test_flags_override_config(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="bending-timelike", a=1.0)
    report = tmp_path / "r.json"
    assert main(["verify", "--config", cfg, "--family", "elliptic-catenoid",
                 "--suite", "h", "--report", str(report)]) == 0
    assert json.loads(report.read_text())["surface"]["family"] \
        == "elliptic-catenoid"


def test_enneper_verify_runs_orbit_checks(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", family="enneper-second-kind",
                       a=1.0, suite="h")
    assert main(["verify", "--config", cfg]) == 0
    out = capsys.readouterr().out
    assert "generating-curve-ode" in out
    assert "orbit-identification" in out


def test_console_entry_point_round_trip(tmp_path):
    cfg = write_config(tmp_path / "c.json", family="bending-timelike", a=1.0,
                       out=str(tmp_path / "m"))
    first = subprocess.run([sys.executable, "-m", "maxsurf.cli", "sample",
                            "--config", cfg], capture_output=True, text=True)
    assert first.returncode == 0, first.stderr
    listing = subprocess.run(["maxsurf", "families"], capture_output=True,
                             text=True)
    assert listing.returncode == 0
    assert "bending-timelike" in listing.stdout
