"""Python access to the ldmac C++ core. Exact values are returned as Fractions."""

from fractions import Fraction

from . import _core
from ._core import DegenerateParameters, EnumerationBudgetExceeded

__all__ = [
    "DegenerateParameters",
    "EnumerationBudgetExceeded",
    "phi1",
    "phi2",
    "classify",
    "sum_rate_bound",
    "construct",
    "achievable_rates",
    "verify_zero_error",
    "best_linear_sum_rate",
    "gdof_lower",
    "w_curve",
    "sweep",
]


def _pair(x):
    f = Fraction(x)
    return (f.numerator, f.denominator)


def _frac(p):
    return Fraction(p[0], p[1])


def _fractions(d, keys):
    return {k: (_frac(v) if k in keys else v) for k, v in d.items()}


def phi1(p, q):
    return _frac(_core.phi1(_pair(p), _pair(q)))


def phi2(p, q):
    return _frac(_core.phi2(_pair(p), _pair(q)))


def classify(n1, n2, ni):
    return _fractions(_core.classify(n1, n2, ni), {"alpha", "beta", "alpha_bar"})


def sum_rate_bound(n1, n2, ni):
    return _fractions(_core.sum_rate_bound(n1, n2, ni), {"value", "uncapped"})


def construct(n1, n2, ni, q=0, k_convention="shifted"):
    return _core.construct(n1, n2, ni, q, k_convention)


def achievable_rates(n1, n2, ni, v1, v2, v3, q=0):
    return _core.achievable_rates(n1, n2, ni, list(v1), list(v2), list(v3), q)


def verify_zero_error(n1, n2, ni, v1, v2, v3, q=0, max_bits=24):
    return _core.verify_zero_error(n1, n2, ni, list(v1), list(v2), list(v3), q, max_bits)


def best_linear_sum_rate(n1, n2, ni, randomized=False, seed=1, jobs=0):
    return _core.best_linear_sum_rate(n1, n2, ni, randomized, seed, jobs)


_GDOF_KEYS = {"a", "b", "d_lower", "w_ref"}


def gdof_lower(a, b):
    return _fractions(_core.gdof_lower(_pair(a), _pair(b)), _GDOF_KEYS)


def w_curve(a):
    return _frac(_core.w_curve(_pair(a)))


def sweep(a_range, b_range, step):
    pts = _core.sweep(_pair(a_range[0]), _pair(a_range[1]), _pair(b_range[0]), _pair(b_range[1]), _pair(step))
    return [_fractions(p, _GDOF_KEYS) for p in pts]
