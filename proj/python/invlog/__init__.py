"""Exact and sampled checks of second Hankel and Toeplitz determinants of
inverse logarithmic coefficients for the classes S*_S and K_S.

Rationals cross the boundary as ``fractions.Fraction``; complex values as
Python ``complex``.  Suite runners return the parsed JSON report.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ContractViolation, DomainError, function_names

__version__ = _core.__version__

__all__ = [
    "ContractViolation",
    "DomainError",
    "boundary_restrict",
    "determinant_in_schwarz",
    "function_names",
    "inverse_coefficients",
    "log_coefficients",
    "maximize_univariate",
    "run_extremal",
    "run_maximization",
    "run_sampling",
    "sample",
    "schur_to_coeffs",
    "second_determinant",
    "series_coefficients",
    "theorem_bound",
]


def _to_str(x):
    return f"{Fraction(x).numerator}/{Fraction(x).denominator}"


def _to_fraction(s):
    return Fraction(s)


def inverse_coefficients(tail):
    """A_2, A_3, ... of f^{-1} for f = z + a_2 z^2 + ... given tail = [a_2, ...]."""
    return [_to_fraction(s) for s in _core.inverse_coefficients([_to_str(x) for x in tail])]


def log_coefficients(tail, inverse=True):
    """Gamma_1, ... (inverse=True) or gamma_1, ... for f = z + a_2 z^2 + ..."""
    return [_to_fraction(s) for s in _core.log_coefficients([_to_str(x) for x in tail], inverse)]


def second_determinant(tail, functional="hankel"):
    """H_{2,1} or T_{2,1} of (Gamma_n) computed through the full series pipeline."""
    return _to_fraction(_core.second_determinant([_to_str(x) for x in tail], functional))


def determinant_in_schwarz(c1, c2, c3, cls, functional):
    return _core.determinant_in_schwarz(complex(c1), complex(c2), complex(c3), cls, functional)


def schur_to_coeffs(g0, g1, g2):
    return _core.schur_to_coeffs(complex(g0), complex(g1), complex(g2))


def sample(seed, count):
    return _core.sample(seed, count)


def theorem_bound(cls, functional):
    return _to_fraction(_core.theorem_bound(cls, functional))


def boundary_restrict(objective, segment):
    """Exact restriction of M, N, P or Q to a boundary piece of Omega, lowest power first."""
    return [_to_fraction(s) for s in _core.boundary_restrict(objective, segment)]


def maximize_univariate(coeffs, lo, hi, tol=1e-9):
    return _core.maximize_univariate([_to_str(c) for c in coeffs], lo, hi, tol)


def series_coefficients(name, upto):
    """a_1..a_upto of a catalog function as exact field strings."""
    return json.loads(_core.series_coefficients(name, upto))


def run_extremal(exact=True):
    return json.loads(_core.run_extremal(exact))


def run_sampling(cls, functional, count, seed):
    return json.loads(_core.run_sampling(cls, functional, count, seed))


def run_maximization(tol=1e-9, grid=2001):
    return json.loads(_core.run_maximization(tol, grid))
