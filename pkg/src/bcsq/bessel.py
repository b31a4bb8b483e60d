"""Modified Bessel functions I0, I1, I2 for the wire field profiles.

Power series below x = 30, large-argument expansion above. The series has
all-positive terms so it loses no precision to cancellation and would stay
usable far past the crossover; the expansion point is set where the
asymptotic tail itself reaches ~1e-14 relative, not earlier.
"""

import math

import numpy as np

__all__ = ["bessel_i0", "bessel_i1", "bessel_i2"]

_CROSSOVER = 30.0
_SERIES_TERMS = 60
_ASYMP_TERMS = 14


def _series(nu: int, x: np.ndarray) -> np.ndarray:
    half = 0.5 * x
    term = half ** nu / math.factorial(nu)
    total = term.copy()
    x2 = half * half
    for k in range(1, _SERIES_TERMS):
        term = term * x2 / (k * (k + nu))
        total += term
    return total


def _asymptotic(nu: int, x: np.ndarray) -> np.ndarray:
    mu = 4 * nu * nu
    total = np.ones_like(x)
    term = np.ones_like(x)
    for k in range(1, _ASYMP_TERMS):
        term = term * (-(mu - (2 * k - 1) ** 2)) / (8.0 * k * x)
        total += term
    return np.exp(x) / np.sqrt(2.0 * math.pi * x) * total


def _iv(nu: int, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise ValueError("argument must be non-negative")
    out = np.empty_like(x)
    small = x < _CROSSOVER
    if np.any(small):
        out[small] = _series(nu, x[small])
    if np.any(~small):
        out[~small] = _asymptotic(nu, x[~small])
    return out


def bessel_i0(x):
    """Modified Bessel function of the first kind, order zero."""
    out = _iv(0, x)
    return float(out) if out.ndim == 0 else out


def bessel_i1(x):
    """Modified Bessel function of the first kind, order one."""
    out = _iv(1, x)
    return float(out) if out.ndim == 0 else out


def bessel_i2(x):
    """Order two via the downward recurrence I2 = I0 - 2 I1 / x."""
    x_arr = np.asarray(x, dtype=float)
    i0 = _iv(0, x_arr)
    i1 = _iv(1, x_arr)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(x_arr == 0.0, 0.0, i0 - 2.0 * i1 / np.where(x_arr == 0.0, 1.0, x_arr))
    return float(out) if out.ndim == 0 else out
