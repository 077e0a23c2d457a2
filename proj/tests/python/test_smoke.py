import json

import pytest

import dklein


def test_derive_round_trip():
    assert dklein.derive_p("t^3+2*t^2-1") == "3*t^2+12*t+12"
    assert dklein.derive_q("3*t^2+12*t+12") == "t^3+2*t^2"
    with pytest.raises(dklein.PreconditionError):
        dklein.derive_p("2*t^3")


def test_algebra_reduce():
    d = dklein.Algebra(q="t^3", gamma="0")
    assert d.kind == "d"
    assert d.n == 3
    assert d.reduce("v*u") == "u*v-2*w"
    assert d.commutator("u", "v") == "2*w"
    assert d.is_central("5")
    assert not d.is_central("u*v")
    assert d.degree("u^3*v^2*w") == 26
    assert d.limit_degree("u^3*v^2*w") == (3, 7)
    assert d.diamond_ok()
    assert d.semiclassical_ok("u", "v")


def test_h_algebra():
    h = dklein.Algebra(p="3*t^2+8*t+8")
    assert h.kind == "h"
    assert h.q is None
    assert h.reduce("w*w") == "w^2"
    omega = dklein.center("t^3", "0")
    assert h.is_central(omega)
    with pytest.raises(dklein.ParseError):
        h.reduce("2w")


def test_iso_and_invariants():
    w = dklein.iso_d("t^4", "1", "t^4", "-1")
    assert w["name"] == "Θ"
    assert w["images"] == ["u", "-v", "-w"]
    assert dklein.iso_d("t^3", "0", "t^3", "1") is None

    v = dklein.iso_h("3*t^2+8*t+8", "1", "3*t^2+8*t+8", "-1")
    assert v["isomorphic"] and v["case"] == "(iii)"

    assert dklein.aut("t^3-4*t")["group"] == "S3"
    assert len(dklein.orbit("t^3")) == 3
    m = dklein.moduli("t^3")
    assert m["type"] == "D4"
    assert m["coords"] == ["64", "16", "0", "0"]


def test_cli_passthrough():
    code, out, err = dklein.run(["derive-p", "--q", "t^3+2*t^2-1"])
    assert code == 0
    assert json.loads(out)["p"] == "3*t^2+12*t+12"
    code, out, _ = dklein.run(["derive-p", "--q", "2*t^3"])
    assert code == 2
    assert json.loads(out)["error"]["type"] == "precondition_error"
