import io
import json
import subprocess
import sys

import pytest

from spin_springer.cli import emit_dot, run
from spin_springer.orders import PosetEdges, dominance_leq, hasse_edges
from spin_springer.partitions import enumerate_Xn


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_map():
    code, out, _ = invoke("map", "9,5,3,1")
    assert code == 0
    assert out == "t=2 1,1/1\n"


def test_map_json():
    code, out, _ = invoke("map", "9,5,2,2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["t"] == 2 and data["bipartition"] == "1,1,1/" and data["beta_raw"] == [0]


def test_map_convention_flag():
    assert invoke("map", "2,2")[1] == "t=0 /1\n"
    assert invoke("--convention", "t0-keep", "map", "2,2")[1] == "t=0 1/\n"
    assert invoke("map", "2,2", "--convention", "t0-keep")[1] == "t=0 1/\n"


def test_verify_theorem_failure_json():
    code, out, _ = invoke("verify", "theorem", "--m", "3", "--t", "2", "--format", "json")
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_verify_passes():
    assert invoke("verify", "bijection", "--n", "12")[0] == 0
    assert invoke("verify", "lemma1", "--m", "2", "--t", "2")[0] == 0
    assert invoke("verify", "lemma2", "--m", "1", "--t", "1")[0] == 0
    code, out, _ = invoke("verify", "theorem", "--m", "2", "--t", "3")
    assert code == 0 and "PASS" in out


def test_enum():
    assert invoke("enum-xn", "4") == (0, "3,1\n2,2\n", "")
    code, out, _ = invoke("enum-bipartitions", "1", "--format", "json")
    assert json.loads(out) == ["1/", "/1"]


def test_invert():
    assert invoke("invert", "--t", "2", "1,1/1")[1] == "9,5,3,1\n"
    code, out, _ = invoke("invert", "--t", "3", "/2", "--format", "json")
    data = json.loads(out)
    assert data["partition"] == "9,5,4,4,1" and data["route"] == "closed-form"
    assert json.loads(invoke("invert", "--t", "0", "/1", "--format", "json")[1])["route"] == "scan"


def test_scan_and_counterexample():
    code, out, _ = invoke("scan-threshold", "--m", "3", "--t-min", "2", "--t-max", "5")
    assert code == 0
    assert out.splitlines() == ["t=2 violations=5", "t=3 violations=0", "t=4 violations=0", "t=5 violations=0"]
    assert invoke("counterexample", "--t", "2")[0] == 0


def test_hasse():
    code, out, _ = invoke("hasse", "xn", "--n", "4", "--format", "dot")
    assert code == 0
    assert 'n0 [label="3,1"]' in out and 'n1 [label="2,2"]' in out and "n1 -> n0;" in out
    assert invoke("hasse", "bipartitions", "--m", "1")[1] == "/1 < 1/\n"
    code, out, _ = invoke("hasse", "bipartitions", "--m", "3", "--induced", "--t", "5", "--format", "json")
    induced = json.loads(out)
    plain = json.loads(invoke("hasse", "bipartitions", "--m", "3", "--format", "json")[1])
    assert code == 0 and induced == plain


def test_emit_dot():
    edges = hasse_edges(list(enumerate_Xn(4)), dominance_leq)
    text = emit_dot(edges)
    assert text.count("->") == 1
    assert text.index('"3,1"') < text.index('"2,2"')
    empty = emit_dot(PosetEdges((), ()))
    assert empty == "digraph poset {\n  rankdir=BT;\n}\n"


@pytest.mark.parametrize("argv", [
    ["map", "3,x"],
    ["invert", "--t", "2", "1,1"],
    ["bogus"],
    ["map", "3", "--format", "dot"],
    ["enum-xn", "-1"],
    [],
])
def test_usage_errors(argv):
    assert invoke(*argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["map", "3,3"],
    ["enum-xn", "70"],
    ["--cap", "10", "enum-xn", "12"],
    ["verify", "lemma1", "--m", "3", "--t", "2"],
    ["verify", "theorem", "--m", "5", "--t", "4", "--cap", "40"],
    ["counterexample", "--t", "1"],
    ["invert", "--t", "1", "1,1/1", "--cap", "10"],
    ["hasse", "bipartitions", "--m", "2", "--induced"],
])
def test_precondition_errors(argv):
    code, out, err = invoke(*argv)
    assert code == 3
    assert out == "" and err


def test_json_stable():
    argv = ["verify", "theorem", "--m", "4", "--t", "3", "--format", "json"]
    assert invoke(*argv)[1] == invoke(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spin_springer", "map", "9,5,3,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "t=2 1,1/1\n"
    proc = subprocess.run([sys.executable, "-m", "spin_springer", "verify", "theorem",
                           "--m", "3", "--t", "2"], capture_output=True, text=True)
    assert proc.returncode == 1
