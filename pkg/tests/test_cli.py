import json
import subprocess
import sys

import pytest

from ringinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def doc(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_inverse_along_found(capsys):
    code, d = doc(capsys, "inverse-along", "--ring", "zmod:6", "5", "3")
    assert code == 0
    assert (d["result"], d["route"]) == ("3", "corner")
    assert "elapsed_ms" in d and d["witnesses"]["x"] == "3"


def test_inverse_along_missing(capsys):
    code, d = doc(capsys, "inverse-along", "--ring", "zmod:6", "2", "3")
    assert code == 1 and d["result"] is None


def test_non_regular_d_is_non_existence(capsys):
    code, d = doc(capsys, "inverse-along", "--ring", "zmod:4", "1", "2")
    assert code == 1 and d["result"] is None and "regular" in d["reason"]


@pytest.mark.parametrize("route", ["definitional", "corner", "unit", "dxd"])
@pytest.mark.parametrize("a, d", [("[[1,1],[1,1]]", "[[1,0],[0,0]]"), ("[[0,1],[0,0]]", "[[0,1],[0,0]]"), ("[[1,0],[1,1]]", "[[0,1],[0,1]]")])
def test_route_flag_agreement(capsys, route, a, d):
    base = doc(capsys, "inverse-along", "--ring", "mat:2:z2", "--route", "definitional", a, d)
    got = doc(capsys, "inverse-along", "--ring", "mat:2:z2", "--route", route, a, d)
    assert got[0] == base[0] and got[1]["result"] == base[1]["result"]


def test_dbar_override(capsys):
    code, d = doc(capsys, "inverse-along", "--ring", "zmod:6", "--dbar", "5", "5", "3")
    assert code == 0 and d["witnesses"]["dbar"] == "5" and d["result"] == "3"
    code, _, err = run(capsys, "inverse-along", "--ring", "zmod:6", "--dbar", "2", "5", "3")
    assert code == 2 and "inner inverse" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["inverse-along", "--ring", "zmod:1", "1", "1"],
        ["inverse-along", "--ring", "mat:2:zX", "1", "1"],
        ["inverse-along", "--ring", "zmod:6", "x", "3"],
        ["inverse-along", "--ring", "zmod:6", "--route", "magic", "1", "3"],
        ["inverse-along", "--ring", "zmod:6", "--bogus", "1", "3"],
        ["inverse-along", "--ring", "mat:2:q", "--route", "definitional", "[[1,0],[0,1]]", "[[1,0],[0,1]]"],
        ["verify", "--ring", "zmod:6", "--theorem", "THM999"],
        ["census", "--ring", "mat:2:q"],
        ["frobnicate", "--ring", "zmod:6"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err


def test_rational_unit_route(capsys):
    code, d = doc(capsys, "inverse-along", "--ring", "mat:2:q", "--route", "unit", "[[2,3],[5,7]]", "[[1,1],[1,1]]")
    assert code == 0 and d["result"] == "[[1/17,1/17],[1/17,1/17]]"


def test_classical_inverses(capsys):
    assert doc(capsys, "group", "--ring", "zmod:6", "2")[1]["spectral_idempotent"] == "3"
    assert doc(capsys, "group", "--ring", "mat:2:q", "[[0,1],[0,0]]")[0] == 1
    code, d = doc(capsys, "drazin", "--ring", "zmod:4", "2")
    assert (d["result"], d["index"]) == ("0", 2)
    assert doc(capsys, "gdrazin", "--ring", "zmod:6", "5")[1]["result"] == "5"
    code, d = doc(capsys, "mp", "--ring", "mat:2:q", "[[1,1],[0,0]]")
    assert d == {**d, "result": "[[1/2,0],[1/2,0]]", "ep": False}


def test_classify(capsys):
    code, d = doc(capsys, "classify", "--ring", "zmod:4", "2")
    assert code == 0
    assert d["quasinilpotent"] and not d["regular"] and d["drazin_index"] == 2


def test_verify_pass_and_fail(capsys):
    code, d = doc(capsys, "verify", "--ring", "zmod:6", "--theorem", "THM11")
    assert code == 0 and d["status"] == "pass" and d["failures"] == []
    code, d = doc(capsys, "verify", "--ring", "mat:2:z2", "--theorem", "THM15")
    assert code == 1 and d["status"] == "fail"


def test_verify_all_text(capsys):
    code, out, _ = run(capsys, "verify", "--ring", "zmod:6", "--format", "text")
    assert code == 0
    assert out.count("pass") == 27


def test_set_along_and_decompose(capsys):
    code, d = doc(capsys, "set-along", "--ring", "zmod:6", "3")
    assert d["result"] == ["1", "3", "5"]
    code, d = doc(capsys, "set-along", "--ring", "zmod:6", "--side", "idempotent", "--dbar", "3", "3")
    assert d["result"] == ["1", "3", "5"]
    code, d = doc(capsys, "decompose", "--ring", "zmod:6", "--dbar", "3", "5", "3")
    assert code == 0 and d["result"] == {"s": "3", "t": "2"}
    assert doc(capsys, "decompose", "--ring", "zmod:6", "2", "3")[0] == 1


def test_census(capsys):
    code, d = doc(capsys, "census", "--ring", "zmod:6")
    assert (d["units"], d["idempotents"], d["along_sizes"]["3"]) == (2, 4, 3)


def test_json_stable_apart_from_timing(capsys):
    argv = ["verify", "--ring", "mat:2:z2", "--theorem", "COR10"]
    _, d1 = doc(capsys, *argv)
    _, d2 = doc(capsys, *argv)
    d1.pop("elapsed_ms"), d2.pop("elapsed_ms")
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)


def test_module_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "ringinv", "inverse-along", "--ring", "zmod:6", "5", "3"],
        capture_output=True,
        text=True,
    )
    assert p.returncode == 0 and json.loads(p.stdout)["result"] == "3"
