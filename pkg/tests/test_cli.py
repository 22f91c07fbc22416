import json
import subprocess
import sys

import pytest

from jumploci.cli import main, run
from jumploci.scenarios import ex56_w2, scenario_names


def verdicts(report):
    return {v["query"]: v["value"] for v in report["verdicts"]}


@pytest.fixture
def rp2_flag_file(tmp_path):
    path = tmp_path / "rp2_flag.json"
    code, _ = run(["complex", "info", "--preset", "rp2", "--subdivide", "--output", str(path)])
    assert code == 0
    return path


def test_raag_sigma_on_subdivided_rp2(rp2_flag_file):
    n = len(json.loads(rp2_flag_file.read_text())["vertices"])
    assert n == 31
    chi = ",".join(["1"] * n)
    code, rep = run(["raag", "sigma", "--complex", str(rp2_flag_file), "--chi", chi,
                     "--degree", "2", "--coeffs", "Z"])
    assert code == 0
    (v,) = rep["verdicts"]
    assert v["value"] is False and v["certificate"] is not None
    code, rep = run(["raag", "sigma", "--complex", str(rp2_flag_file), "--chi", chi,
                     "--degree", "2", "--coeffs", "Q"])
    assert rep["verdicts"][0]["value"] is True


def test_variety_omega(tmp_path):
    path = tmp_path / "ex56.json"
    path.write_text(json.dumps(ex56_w2().to_json()))
    code, rep = run(["variety", "omega", "--variety", str(path), "--plane", "1,1,0;0,0,1"])
    assert code == 0 and rep["verdicts"][0]["value"] is True
    code, rep = run(["variety", "omega", "--variety", str(path), "--plane", "1,0,0;0,1,0"])
    assert rep["verdicts"][0]["value"] is False


def test_examples_reproduce_all():
    for name in scenario_names():
        code, rep = run(["examples", "reproduce", name])
        assert code == 0, name
        assert rep["golden"] == "reproduced"
    code, rep = run(["examples", "reproduce", "pencil", "--n", "4"])
    assert code == 0


def test_examples_list():
    code, rep = run(["examples", "list"])
    assert code == 0
    assert sorted(rep["verdicts"][0]["value"]) == sorted(scenario_names())


def test_fox_verbs():
    pres = "gens: x1 x2 ; rels: x1 x2 x1^-1 x2^-2"
    code, rep = run(["fox", "cv1", "--presentation", pres, "--rho", "2"])
    assert code == 0 and rep["verdicts"][0]["value"] is True
    code, rep = run(["fox", "cv1", "--presentation", pres, "--rho", "3"])
    assert rep["verdicts"][0]["value"] is False


def test_arr_and_resonance_verbs(tmp_path):
    code, rep = run(["arr", "points", "--preset", "braid"])
    assert code == 0
    code, rep = run(["arr", "os", "--poly", "x*y*(x-y)"])
    assert code == 0 and verdicts(rep)["dims"] == [1, 3, 2]
    path = tmp_path / "alg.json"
    path.write_text(json.dumps({"exterior": 2, "top": 2}))
    code, rep = run(["resonance", "dims", "--algebra", str(path), "--a", "1,0"])
    assert code == 0
    assert verdicts(rep) == {"dims": [1, 2, 1], "cohomology": [0, 0]}


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["raag", "cv", "--complex", str(bad)])[0] == 2
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["error"] and err["reason"]
    assert run(["fox", "cv1", "--presentation", "gens: a ; rels: b", "--rho", "2"])[0] == 2
    assert run(["examples", "reproduce", "nope"])[0] == 2
    assert run(["nonsense"])[0] == 2
    assert run(["fox", "cv1", "--presentation", "gens: a", "--rho", "0"])[0] == 2


def test_timing_is_opt_in():
    _, rep = run(["examples", "reproduce", "ex51"])
    assert "timing_seconds" not in rep
    _, rep = run(["--timing", "examples", "reproduce", "ex51"])
    assert rep["timing_seconds"] >= 0


def test_reports_are_byte_identical():
    cmd = [sys.executable, "-m", "jumploci", "examples", "reproduce", "deletedB3", "--seed", "0"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a)["schema"] == "jumploci.report/1"


def test_main_returns_exit_code(capsys):
    assert main(["examples", "reproduce", "ex53"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["command"] == ["examples", "reproduce", "ex53"]
