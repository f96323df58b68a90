"""Linear network coding solvability of multicast network families over GF(q)."""

import json

from . import _core
from ._core import NetfieldError, lower_bound_characterize, mersenne_q_star, preset_names, swirl_characterize

__all__ = [
    "NetfieldError",
    "analyze",
    "condition_feasible",
    "construct",
    "field_info",
    "lower_bound_characterize",
    "mersenne_q_star",
    "oracle",
    "preset_names",
    "run_preset",
    "scan",
    "swirl_characterize",
    "to_dot",
    "verify",
]


def _family(name, **params):
    return json.dumps({"name": name, **params})


def field_info(q):
    return json.loads(_core.field_info(q))


def construct(name, cap=10_000_000, **params):
    """Network of the named family as a dict, e.g. construct("general", omega=3, d1=2, d2=2)."""
    return json.loads(_core.construct(_family(name, **params), cap))


def to_dot(network):
    return _core.to_dot(json.dumps(network))


def scan(name, lo, hi, method="auto", budget=100_000_000, threads=1, normalize=True, **params):
    return json.loads(_core.scan(_family(name, **params), lo, hi, method, budget, threads, normalize))


def analyze(name, q, method="auto", **kwargs):
    """Verdict entry for a single field order."""
    return scan(name, q, q, method, **kwargs)["verdicts"][0]


def condition_feasible(omega, d1, d2, q, budget=100_000_000, threads=1):
    return json.loads(_core.condition_feasible(omega, d1, d2, q, budget, threads))


def oracle(network, q, budget=100_000_000, normalize=True):
    return json.loads(_core.oracle(json.dumps(network), q, budget, normalize))


def verify(network, code):
    return _core.verify(json.dumps(network), json.dumps(code))


def run_preset(name, budget=100_000_000):
    """List of (claim, passed, detail) triples."""
    return _core.run_preset(name, budget)
