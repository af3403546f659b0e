"""Exact deformation theory of finite-dimensional DGLAs.

Computations return decoded stage dictionaries: ``checks`` (name, passed,
detail) and ``data``, with every scalar as an exact "p/q" string.
"""

import json

from . import _core
from ._core import Dgla, InputError, builtin_example, builtin_names, load_dgla, parse_dgla

__all__ = [
    "Dgla",
    "InputError",
    "builtin_example",
    "builtin_names",
    "gauge_equivalent",
    "hodge",
    "homology",
    "kuranishi",
    "load_dgla",
    "mc_solve",
    "obstruction",
    "parse_dgla",
    "run",
    "sdr",
    "selftest",
]


def _stage(text):
    return json.loads(text)["stages"][0]


def homology(g):
    return _stage(_core.homology(g))


def sdr(g):
    return _stage(_core.sdr(g))


def hodge(g):
    return _stage(_core.hodge(g))


def mc_solve(g, direction, order=4, var="t"):
    """Solve the Maurer-Cartan IVP along ``direction`` (coordinates over H^1, e.g. "1")."""
    return _stage(_core.mc_solve(g, str(direction), order, var))


def obstruction(g, direction, order=4, var="t"):
    return _stage(_core.obstruction(g, str(direction), order, var))


def kuranishi(g, element, order=4, inverse=False, var="t"):
    return _stage(_core.kuranishi(g, element, order, inverse, var))


def gauge_equivalent(g, a, b, order=4, var="t"):
    return _stage(_core.gauge_equivalent(g, a, b, order, var))


def selftest():
    return json.loads(_core.selftest())


def run(*args):
    """Run a command line; returns (exit_code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
