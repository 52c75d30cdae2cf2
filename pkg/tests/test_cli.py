import json
from fractions import Fraction

import pytest

from minusone.cli import main, run

CHEB_FIRST = "a1=1,a2=2,b0=0,b1=1,b2=0,d1=-1,d2=0"
FIXED = "a1=1/3,a2=1,b0=0,b1=1,b2=2,d1=5/7,d2=-1"


def ok(*argv):
    out, err, status = run(list(argv))
    assert status == 0, err
    return json.loads(out)


def fails(status, *argv):
    out, err, got = run(list(argv))
    assert got == status and out == ""
    return json.loads(err)["error"]


def test_chebyshev_like_preset():
    doc = ok("coeffs", "--form", "preset:chebyshev-like", "--args", "a2=1,sign=+", "--order", "6")
    assert doc["schema_version"] == "1" and doc["command"] == "coeffs"
    assert doc["data"]["alpha"] == ["1/4"] * 6
    assert doc["data"]["beta"][:2] == ["-1/2", "0"] and set(doc["data"]["beta"][1:]) == {"0"}
    assert doc["params"]["lattice"]["a2"] == "1"


def test_continuous_zero():
    doc = ok("coeffs", "--form", "continuous", "--args", "y1=0,y2=0,w1=0,w2=0", "--order", "4")
    assert doc["data"]["alpha"] == ["1/4", "1", "9/4", "4"]


def test_rst_smoke():
    doc = ok("coeffs", "--form", "rst", "--args", "r=0,s=0,t1=0,t2=0,b2=1", "--order", "1")
    assert set(doc) == {"schema_version", "command", "params", "data"}
    assert len(doc["data"]["alpha"]) == 1 and len(doc["data"]["beta"]) == 2


def test_aliases_and_preset_flag():
    a = ok("coeffs", "--param-form", "preset", "--preset", "zero-beta", "--n", "3")
    b = ok("coeffs", "--form", "preset:zero-beta", "--order", "3")
    assert a["data"] == b["data"] == {"alpha": ["-1/4", "-1", "-9/4"], "beta": ["0"] * 4}


def test_csv():
    out, _, status = run(["coeffs", "--form", "preset:zero-beta", "--order", "2", "--format", "csv"])
    assert status == 0
    assert out.splitlines() == ["n,alpha,beta", "0,,0", "1,-1/4,0", "2,-1,0"]


def test_darboux_chebyshev():
    doc = ok("darboux", "--args", CHEB_FIRST, "--order", "6")
    assert set(doc["data"]["diag"]) == {"0"} and set(doc["data"]["sub"]) == {"1/4"}
    assert doc["params"]["shift"] == {"spec": "x0", "w": "1"}


def test_darboux_emit_yz_and_ctilde():
    yz = ok("darboux", "--args", CHEB_FIRST, "--order", "4", "--emit", "yz")["data"]
    assert yz["y"][0] == "0" and len(yz["y"]) == len(yz["z"])
    ct = ok("darboux", "--args", CHEB_FIRST, "--order", "4", "--emit", "Ctilde")["data"]
    assert ct["rows"][0] == ["1"]


def test_darboux_breakdown():
    err = fails(3, "darboux", "--args", CHEB_FIRST, "--shift", "1/2", "--order", "4")
    assert "breakdown at k=0" in err["message"]


def test_fixed_set_shifts_identical():
    a = ok("darboux", "--args", FIXED, "--shift", "x0", "--order", "8")
    b = ok("darboux", "--args", FIXED, "--shift", "-d2/a2", "--order", "8")
    assert json.dumps(a["data"]) == json.dumps(b["data"])


def test_negative_values_after_flags():
    doc = ok("algebra", "--a1", "1/2", "--b1", "1/2", "--d1", "1/4", "--d2", "-1/2", "--order", "8")
    for triple in ("B", "L"):
        assert all(r["holds"] and r["measured"] == "0" for r in doc["data"][triple]["relations"])
        assert min(r["window"] for r in doc["data"][triple]["relations"]) >= 4
    assert doc["data"]["agree"] is True


def test_algebra_random_params_hold():
    doc = ok("algebra", "--a1", "2/3", "--b1", "-1/5", "--d1", "3/7", "--d2", "1/2")
    assert all(r["holds"] for r in doc["data"]["L"]["relations"])


def test_algebra_order_minimum():
    fails(2, "algebra", "--a1", "1", "--b1", "0", "--d1", "0", "--d2", "0", "--order", "7")


def test_algebra_csv():
    out, _, status = run(["algebra", "--a1", "1/2", "--b1", "1/2", "--d1", "1/4", "--d2", "-1/2",
                          "--order", "8", "--format", "csv"])
    assert status == 0
    assert out.splitlines()[0] == "triple,constant,claimed,measured,holds,window"


def test_connection_command():
    doc = ok("connection", "--args", CHEB_FIRST, "--order", "3", "--emit", "C")
    assert doc["data"]["rows"][2] == ["1/4", "-1/2", "1"]
    m = ok("connection", "--args", CHEB_FIRST, "--order", "3", "--emit", "moments")
    assert m["data"]["moments"][0] == "1"


def test_verify_default_and_determinism():
    first = run(["verify"])
    assert first[2] == 0
    assert first == run(["verify"])
    doc = json.loads(first[0])
    assert doc["data"]["failed"] == [] and all(p["status"] == "pass" for p in doc["data"]["properties"])


def test_verify_fault():
    out, err, status = run(["verify", "--order", "8", "--draws", "2", "--inject-fault", "alpha"])
    assert status == 1
    assert "property failed: minus1-matches-general" in err
    assert "minus1-matches-general" in json.loads(out)["data"]["failed"]


def test_presets_listing():
    names = [p["name"] for p in ok("presets")["data"]["presets"]]
    assert "bannai-ito" in names and "continuous-bi" in names and names == sorted(names)


@pytest.mark.parametrize("argv", [
    ["coeffs", "--args", "a1=1/0"],
    ["coeffs", "--form", "preset:nope"],
    ["coeffs", "--form", "rst", "--args", "r=1"],
    ["coeffs", "--bogus"],
    ["coeffs", "--order", "0"],
])
def test_validation_errors(argv):
    err = fails(2, *argv)
    assert err["code"] and err["message"]


def test_collision_exit_code():
    err = fails(3, "coeffs", "--args", "a1=-1/2,a2=1,b0=0,b1=0,b2=1,d1=0,d2=0", "--order", "4")
    assert err["code"]


def test_main_returns_status(capsys):
    assert main(["presets"]) == 0
    assert json.loads(capsys.readouterr().out)["command"] == "presets"
