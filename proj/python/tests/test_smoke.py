import pytest

import kronmod

NU1 = [[{"x": 1}, {"y": 1}], [{"z": 1}, {"w": 1}]]
SEGRE = {"xw": 1, "yz": -1}


def test_inv_nu1():
    r = kronmod.inv(NU1)
    assert r["det_text"] == "x*w - y*z"
    assert (r["epsilon"], r["rho"]) == ("1", "1")
    assert r["epsilon_squared_equals_rho"]


def test_inv_over_finite_field():
    r = kronmod.inv(NU1, field="fp:7")
    assert r["field"] == "fp:7"
    assert r["det"]["yz"] == "6"


def test_stab_and_normal_form():
    assert kronmod.stab(NU1)["stable"]
    nf = kronmod.normal_form([[{"x": 1, "w": 1}, {"y": 1}], [{"z": 1}, {"x": 1, "w": 3}]])
    assert [nf["normal_form"][k] for k in "abcd"] == ["1", "0", "0", "3"]
    assert nf["replay_ok"]


def test_eta_round_trip():
    point = kronmod.eta(NU1, field="fp:1009")["point"]
    back = kronmod.eta_inverse(point, field="fp:1009")
    assert back["point"] == point


def test_fiber():
    points = kronmod.fiber(SEGRE)["points"]
    assert [p["p"] for p in points] == ["1", "-1"]
    r = kronmod.fiber({"x2": 1, "yz": -1, "w2": 2})
    assert r["needs_extension"] and r["points"] == []


def test_blowdown():
    w1 = {"a1": 1, "u11": [1, 0], "v11": [0, 1], "u22": [1, 0], "v22": [0, 1]}
    assert kronmod.classify(w1) == "W1"
    assert kronmod.beta(w1)["point"]["p"] == "1"
    assert kronmod.snake(w1)["ok"]
    assert kronmod.classify({"a1": 0, "a2": 0}) == "Invalid"
    with pytest.raises(ValueError):
        kronmod.alpha(w1)


def test_errors():
    with pytest.raises(ValueError):
        kronmod.inv([[{"t": 1}]])
    with pytest.raises(ValueError):
        kronmod.inv(NU1, field="fp:1007")
    with pytest.raises(kronmod.NeedsExtension):
        kronmod.eta_inverse({"q": {"x2": 1, "y2": 1, "z2": 1, "w2": 1}, "p": 4})


def test_check_is_deterministic():
    a = kronmod.check(field="fp:1009", seed=3, trials=20, workers=1)
    b = kronmod.check(field="fp:1009", seed=3, trials=20, workers=2)
    assert a == b
    assert a["violations"] == 0
    with pytest.raises(ValueError):
        kronmod.check(trials=0)
