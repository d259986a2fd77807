"""Exact computations for Jacobi forms of rational matrix index.

Rationals are accepted as int, Fraction or "p/q" strings and returned as Fraction.
"""
import json
from fractions import Fraction

from . import _jacobiq
from ._jacobiq import JacobiqError

__all__ = [
    "JacobiqError", "run", "rd", "md", "rd_upper_bound", "is_admissible", "disc_reps", "qvalue",
    "generator_bound", "cycle_generators",
]


def _s(x):
    return str(Fraction(x))


def _mat(M):
    return [[_s(x) for x in row] for row in M]


def _vec(v):
    if isinstance(v, (list, tuple)):
        return [_s(x) for x in v]
    return [_s(v)]


def run(*args):
    """Runs a CLI subcommand in process; returns (exit code, parsed JSON)."""
    code, text = _jacobiq.run([str(a) for a in args])
    return code, json.loads(text)


def rd(M):
    return Fraction(_jacobiq.rd(_mat(M)))


def md(M):
    return Fraction(_jacobiq.md(_mat(M)))


def rd_upper_bound(M):
    return Fraction(_jacobiq.rd_upper_bound(_mat(M)))


def is_admissible(M):
    return _jacobiq.is_admissible(_mat(M))


def disc_reps(M):
    return [tuple(Fraction(x) for x in r) for r in _jacobiq.disc_reps(_mat(M))]


def qvalue(M, nu):
    return Fraction(_jacobiq.qvalue(_mat(M), _vec(nu)))


def generator_bound(n):
    return Fraction(_jacobiq.generator_bound(n))


def cycle_generators(r, n, d=1):
    return [[[Fraction(x) for x in row] for row in T] for T in _jacobiq.cycle_generators(r, n, d)]
