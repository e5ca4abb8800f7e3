import csv
import io
import json
import subprocess
import sys

import pytest

from gkit.claims import CLAIMS
from gkit.cli import main, run


def _json(argv):
    res = run(argv + ["--json", "--no-meta"])
    assert res.exit_code in (0, 1), res.text
    return res, json.loads(res.text)


def test_expand_text():
    res = run(["expand", "24", "3"])
    assert res.exit_code == 0 and res.text == "C(6,3)+C(3,2)+C(1,1)"


def test_eliminate_gorf():
    res, doc = _json(["eliminate", "--candidate", "1,39,29,29,39,1"])
    assert doc["output"]["verdict"] == "Eliminated" and doc["output"]["rule"] == "Gorf"
    assert res.exit_code == 0


def test_strict_exit_codes():
    assert run(["eliminate", "--candidate", "1,24,19,24,1", "--strict"]).exit_code == 1
    assert run(["eliminate", "--candidate", "1,13,12,13,1", "--strict"]).exit_code == 0
    assert run(["test", "shape", "--candidate", "1,3,7,3,1", "--strict"]).exit_code == 1
    assert run(["test", "shape", "--candidate", "1,3,7,3,1"]).exit_code == 0


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["expand", "3"], ["expand", "5", "0"], ["eliminate"],
    ["eliminate", "--candidate", "1,x,1"], ["delta", "--degree", "4", "--range", "9..3"],
    ["delta", "--degree", "6", "--range", "1..3"], ["apolar", "hf", "--poly", "/no/such/file"],
    ["eliminate", "--candidate", "1,5,3,4,1"], ["reproduce", "--only", "no-such-claim"],
])
def test_usage_errors_exit_two(argv):
    res = run(argv)
    assert res.exit_code == 2
    assert res.stream == "stderr" and "error" in res.text


def test_json_round_trip_and_determinism():
    for argv in (["expand", "40", "3"], ["bound", "gotzmann", "6", "2", "--s", "2"],
                 ["hf", "perazzo", "--m", "3", "--d", "5", "--extend", "2"],
                 ["test", "gors", "24", "19"], ["test", "tec", "3", "6"],
                 ["test", "compare", "1,13,11,13,1", "1,13,12,13,1"],
                 ["eliminate", "--candidate", "1,504,209,209,504,1"],
                 ["delta", "--degree", "4", "--range", "10..30"],
                 ["asymptotics", "--d", "4", "--k", "2", "--m", "100,1000", "--digits", "20"]):
        a, doc = _json(argv)
        b = run(argv + ["--json", "--no-meta"])
        assert a.text == b.text
        assert doc["output"] == a.output
        assert json.loads(json.dumps(a.output)) == a.output


def test_meta_block_only_without_flag():
    doc = json.loads(run(["expand", "24", "3", "--json"]).text)
    assert doc["meta"]["tool"] == "gkit" and "timestamp" in doc["meta"]
    assert "meta" not in json.loads(run(["expand", "24", "3", "--json", "--no-meta"]).text)


def test_hf_and_apolar_round_trip(tmp_path):
    path = tmp_path / "f.txt"
    res = run(["hf", "perazzo", "--m", "3", "--d", "4", "--poly-out", str(path)])
    assert res.text == "1,13,12,13,1"
    _, doc = _json(["apolar", "hf", "--poly", str(path), "--bigraded", "10,3"])
    out = doc["output"]
    assert out["hilbert"] == [1, 13, 12, 13, 1] and out["symmetric"] and out["o_sequence"]
    dims = {(c["i"], c["j"]): c["dim"] for c in out["bigraded"]}
    assert dims[(0, 2)] == 6 and dims[(1, 1)] == 6


def test_delta_csv():
    res = run(["delta", "--degree", "4", "--range", "12..14", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(res.text)))
    assert rows[0] == ["r", "lower", "upper", "status", "provenance"]
    assert [r[:4] for r in rows[1:]] == [["12", "0", "0", "Exact"], ["13", "1", "1", "Exact"],
                                         ["14", "1", "1", "Exact"]]
    doc = json.loads(run(["delta", "--degree", "4", "--range", "22..22", "--format", "json",
                          "--no-meta"]).text)
    assert doc["output"][0]["lower"] == 2 and doc["output"][0]["upper"] == 4


def test_asymptotics_csv():
    res = run(["asymptotics", "--d", "4", "--k", "2", "--m", "100,1000,10000", "--digits", "30", "--csv"])
    rows = list(csv.reader(io.StringIO(res.text)))
    assert rows[0] == ["m", "r", "lower_ratio", "perazzo_ratio", "gap"]
    gaps = [float(r[4]) for r in rows[1:]]
    assert gaps == sorted(gaps, reverse=True) and gaps[-1] < 0.02


def test_reproduce_subset_and_jobs(monkeypatch):
    names = ["expand-24", "gorf-39-29", "cli-eliminate"]
    res = run(["reproduce", "--only", *names])
    assert res.exit_code == 0
    assert [c["name"] for c in res.output["claims"]] == names
    monkeypatch.setenv("GKIT_JOBS", "2")
    par = run(["reproduce", "--only", *names])
    assert par.inputs["jobs"] == 2 and par.text == res.text


def test_claim_names_unique():
    names = [c.name for c in CLAIMS]
    assert len(names) == len(set(names))


def test_main_prints(capsys):
    assert main(["expand", "24", "3"]) == 0
    assert capsys.readouterr().out.strip() == "C(6,3)+C(3,2)+C(1,1)"
    assert main(["expand"]) == 2
    assert "usage" in capsys.readouterr().err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "gkit.cli", "bound", "green", "338", "4"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "212"
