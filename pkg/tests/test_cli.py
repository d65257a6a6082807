import io
import json
import subprocess
import sys

import pytest

from orschubert.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_mult_chow():
    code, out, _ = call("mult", "--ring", "chow", "--frame", "4x4", "2,2", "2,2")
    assert code == 0
    assert out.strip() == "4,4 + 4,3,1 + 4,2,2 + 3,3,1,1 + 3,2,2,1 + 2,2,2,2"


def test_mult_other_rings():
    assert call("mult", "--ring", "ch2", "--frame", "Gr(2,5)", "1", "1")[1].strip() == "2 + 1,1"
    code, out, _ = call("mult", "--ring", "w", "--frame", "5x5", "2,2", "2,2", "2,2", "2,2")
    assert out.strip() == "2*4,4,4,4"
    code, out, _ = call("mult", "--ring", "i", "--frame", "4x4", "2,2", "2,2")
    assert "free: 4,4 + 2,2,2,2" in out
    assert "torsion (reduction): 4,3,1 + 4,2,2 + 3,3,1,1 + 3,2,2,1" in out
    code, out, _ = call("mult", "--ring", "cw", "--frame", "4x4", "2,2:o", "2,2:o")
    assert code == 0 and "chow: 4,4 + 4,3,1" in out


def test_problem_p1power():
    code, out, _ = call("problem", "p1power", "3")
    assert code == 0 and out.splitlines()[0] == "75<1> + 70<-1>"


def test_sq2():
    assert call("sq2", "--twist", "det", "--frame", "3x6", "5,2")[1].strip() == "5,2,1"
    assert call("sq2", "--twist", "o", "--frame", "3x6", "5,2")[1].strip() == "6,2 + 5,3"
    code, out, _ = call("sq2", "--frame", "2x3", "--draw", "1")
    assert out.split("\n\n")[1:] == ["BW.\n...", "B..\nW..\n"]


def test_lift_failure_reports_obstruction():
    code, out, err = call("lift", "--frame", "Gr(2,5)", "2:o", "--format", "json")
    assert code == 1
    payload = json.loads(out)
    assert payload["error"]["type"] == "NotLiftableError"
    assert payload["error"]["obstruction"] == [{"coeff": "1 (mod 2)", "partition": [2, 1]}]
    assert "2,1" in err


def test_lift_success():
    code, out, _ = call("lift", "--frame", "Gr(2,5)", "1", "--draw", "--checkerboard")
    assert code == 0 and "twist det (torsion)" in out and "B.." in out


def test_degree():
    code, out, _ = call("degree", "--frame", "4x4", "2,2", "2,2", "2,2", "2,2")
    assert out.splitlines()[:3] == ["4<1> + 2<-1>", "rank: 6", "signature: 2"]
    code, out, _ = call("degree", "--frame", "Gr(2,5)", *(["1:det"] * 6))
    assert code == 0 and out.splitlines()[0] == "5"
    code, _, err = call("degree", "--frame", "4x4", "2,2")
    assert code == 1 and "dimension" in err


def test_even_basis():
    code, out, _ = call("even-basis", "--frame", "2x3")
    assert code == 0 and len(out.strip().splitlines()) == 4
    code, out, _ = call("even-basis", "--frame", "5x5", "--format", "json")
    assert len(json.loads(out)["basis"]) == 12


def test_problems():
    assert call("problem", "balanced", "1", "2")[1].startswith("4<1> + 2<-1>")
    out = call("problem", "plucker", "5", "--format", "json")[1]
    assert json.loads(out)["gw"] == {"neg": "7", "pos": "7"}
    code, _, err = call("problem", "p1power", "30")
    assert code == 1 and "limit" in err
    assert call("problem", "balanced", "1")[0] == 2


def test_usage_errors():
    assert call("mult", "--frame", "4x4", "a,b")[0] == 2
    assert call("mult", "--frame", "nonsense", "1")[0] == 2
    assert call("mult", "1")[0] == 2
    assert call("sq2", "--frame", "2x2", "--twist", "x", "1")[0] == 2
    assert call("lift", "--frame", "2x2", "1:q")[0] == 2
    code, _, err = call("mult", "--frame", "2x2", "3")
    assert code == 1 and "does not fit" in err


@pytest.mark.parametrize("argv", [
    ["mult", "--ring", "chow", "--frame", "4x4", "2,2", "2,2"],
    ["mult", "--ring", "cw", "--frame", "4x4", "2,2", "2,2"],
    ["mult", "--ring", "w", "--frame", "5x5", "5,3,3,1,1", "2,2"],
    ["problem", "p1power", "6"],
    ["even-basis", "--frame", "4x4"],
    ["lift", "--frame", "Gr(2,5)", "2"],
])
def test_json_round_trip(argv):
    code, out, _ = call(*argv, "--format", "json")
    reparsed = json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n"
    assert reparsed == out


def test_big_integers_are_strings():
    out = call("problem", "p1power", "8", "--format", "json")[1]
    payload = json.loads(out)
    assert payload["details"]["D"] == "2325250316950"
    assert payload["gw"] == {"neg": "1162625157760", "pos": "1162625159190"}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orschubert", "problem", "balanced", "1", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("4<1> + 2<-1>")
