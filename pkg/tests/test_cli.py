import json

import pytest
from testfixtures import TempDirectory

from tracelift.cli import RunConfig, main
from tracelift.errors import ConfigError
from tracelift.lift import Check, verify


def run_json(capsys, *argv):
    code = main([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_cm_trace(capsys):
    code, rows = run_json(capsys, "trace", "--kind", "cm", "--disc", "-3")
    assert code == 0
    assert rows[0]["disc"] == -3 and abs(float(rows[0]["value"]) + 248) < 1e-6


def test_integral_at_i(capsys):
    code, rows = run_json(capsys, "integral", "--delta", "5", "--z", "i")
    assert code == 0
    assert abs(float(rows[0]["total"]["re"]) - 0.254647908947) < 1e-5


def test_forms(capsys):
    code, rows = run_json(capsys, "forms", "--disc", "5", "-20", "--period")
    assert code == 0
    assert all({"a", "b", "c", "disc"} <= set(r) for r in rows)
    assert [(r["a"], r["b"], r["c"]) for r in rows if r["set"] == "S-period"] == [(1, -1, -1), (1, 1, -1)]
    assert len([r for r in rows if r["disc"] == -20 and r["set"] == "class"]) == 2


def test_forms_containing_a_point(capsys):
    code, rows = run_json(capsys, "forms", "--disc", "5", "--z=-0.5+0.5i")
    assert code == 0
    assert rows == [{"a": 1, "b": 1, "c": -1, "disc": 5, "set": "containing"}]
    code, rows = run_json(capsys, "forms", "--disc", "12", "--z", "0.1+0.3i")
    assert [(r["a"], r["b"], r["c"]) for r in rows] == [(1, -2, -2), (1, 0, -3), (1, 2, -2), (2, -2, -1), (2, 2, -1), (3, 0, -1)]
    assert main(["forms", "--disc", "-4", "--z", "i"]) == 1


def test_faber(capsys):
    code, rows = run_json(capsys, "faber", "--m", "1", "--order", "2")
    assert code == 0
    assert rows == [{"m": 1, "coeffs": {"-1": 1, "0": 0, "1": 196884, "2": 21493760}}]
    code, rows = run_json(capsys, "faber", "--m", "2", "--order", "1", "--method", "elimination")
    assert rows[0]["coeffs"] == {"-2": 1, "-1": 0, "0": 0, "1": 42987520}


def test_usage_errors_exit_with_1(capsys):
    assert main(["lift", "--delta", "4", "--z", "i"]) == 1
    assert main(["integral", "--delta", "5", "--z", "1+x"]) == 1
    assert main(["nonsense"]) == 1
    assert main(["integral", "--delta", "5", "--z", "0.1-1i"]) == 1
    assert "tracelift:" in capsys.readouterr().err


def test_verify_traceid(capsys):
    code, rows = run_json(capsys, "verify", "--delta", "5", "--suite", "traceid")
    assert code == 0
    assert [r["check"] for r in rows] == ["traceid:m=2", "traceid:m=3"]
    assert all(r["pass"] for r in rows)


def test_failed_verification_exits_with_2(capsys, monkeypatch):
    monkeypatch.setitem(verify.SUITES, "cocycle", lambda *args: [Check("cocycle", "forced", 1.0, 0.5)])
    code, rows = run_json(capsys, "verify", "--delta", "5", "--suite", "cocycle")
    assert code == 2
    assert rows == [{"check": "cocycle:forced", "residual": 1.0, "tol": 0.5, "pass": False}]


def test_cache_round_trip(capsys):
    with TempDirectory() as tmp:
        path = tmp.path + "/traces.json"
        assert main(["trace", "--disc", "-3", "-4", "--cache", path]) == 0
        capsys.readouterr()
        code, rows = run_json(capsys, "cache", "show", "--cache", path)
        assert code == 0
        assert rows[0]["entries"] == 2
        assert [r["disc"] for r in rows[1:]] == [-4, -3]
        assert main(["cache", "export", "--cache", path, "--out", tmp.path + "/traces.csv"]) == 0
        assert tmp.read("traces.csv", encoding="utf-8").splitlines()[0] == "kind,F,disc,value,abs_err,provenance,id"


def test_grid_export(capsys):
    with TempDirectory() as tmp:
        out = tmp.path + "/F.csv"
        assert main(["integral", "--delta", "5", "--grid", "-0.5", "0.5", "1.5", "2", "2", "2", "--out", out]) == 0
        assert len(tmp.read("F.csv", encoding="utf-8").splitlines()) == 5


def test_flags_override_the_environment():
    cfg = RunConfig.from_env({"TRACELIFT_THREADS": "3", "TRACELIFT_DPS": "40"}, dps=50)
    assert (cfg.threads, cfg.dps) == (3, 50)
    with pytest.raises(ConfigError):
        RunConfig(threads=0).validate()
