import os
import subprocess

import pytest

import netfield


def test_field_info():
    info = netfield.field_info(16)
    assert (info["p"], info["m"], info["q"]) == (2, 4, 16)
    assert info["subgroup_orders"] == [1, 3, 5]
    with pytest.raises(netfield.NetfieldError, match="NotPrimePower"):
        netfield.field_info(6)


def test_construct_and_dot():
    net = netfield.construct("fig2a")
    assert net["omega"] == 3
    assert sum(n["role"] == "receiver" for n in net["nodes"]) == 81
    assert netfield.construct("lowerbound", m=3)["family"] == {"name": "lowerbound", "m": 3}
    assert netfield.to_dot(net).startswith("digraph")


def test_condition():
    v = netfield.condition_feasible(3, 3, 3, 7)
    assert v["status"] == "solvable"
    assert v["witness"]["alphas"] == [[1, 2, 4], [1, 2, 4]]
    assert netfield.condition_feasible(3, 3, 3, 8)["status"] == "unsolvable"
    assert netfield.condition_feasible(3, 3, 3, 8, budget=5)["status"] == "unknown"


def test_oracle_and_verify():
    net = netfield.construct("combination", n=4, omega=2)
    assert netfield.oracle(net, 2)["status"] == "unsolvable"
    v = netfield.oracle(net, 3)
    assert v["status"] == "solvable"
    assert netfield.verify(net, v["witness"])


def test_scan():
    r = netfield.scan("swirl", 2, 9, omega=3)
    solvable = [e["q"] for e in r["verdicts"] if e["status"] == "solvable"]
    assert solvable == [5, 7, 8, 9]
    assert r["q_min"] == 5
    assert netfield.analyze("fig2b", 17, method="condition")["status"] == "unsolvable"


def test_characterizations():
    assert netfield.swirl_characterize(8192, 16)
    assert not netfield.swirl_characterize(8192, 8192)
    assert netfield.mersenne_q_star(30) == 32
    assert netfield.lower_bound_characterize(3, 8) == "unsolvable"


def test_presets():
    assert "swirl-example" in netfield.preset_names()
    claims = netfield.run_preset("swirl-example")
    assert claims and all(ok for _, ok, _ in claims)
    with pytest.raises(netfield.NetfieldError):
        netfield.run_preset("nope")


@pytest.mark.skipif("NETFIELD_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module():
    out = subprocess.run([os.environ["NETFIELD_CLI"], "field-info", "--q", "9"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "9" in out.stdout
