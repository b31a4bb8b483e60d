"""Energy landscape in the gap amplitude and its small oscillations.

Rescaling the trial gap by its optimum, d = gap/gap_min, and the energy by
|E_min| gives a universal one-parameter landscape; its curvature at d = 1
sets an oscillator for the amplitude mode.
"""

from dataclasses import dataclass
import math

import numpy as np

from .core import MaterialParams, bogoliubov, band_grid
from .island import island_energy

__all__ = [
    "HiggsLandscape",
    "rescaled_energy",
    "rescaled_exact",
    "quadratic_approx",
    "landscape",
    "radial_overlap",
    "oscillator",
]


def rescaled_energy(d, coupling: float):
    """Leading-log landscape E(d gap_min)/|E_min| = d^2 (-1 + 2 ln d - 2 lam ln^2 d).

    Exactly -1 at d = 1 and stationary there for every coupling."""
    d = np.asarray(d, dtype=float)
    ld = np.log(d)
    out = d * d * (-1.0 + 2.0 * ld - 2.0 * coupling * ld * ld)
    return float(out) if out.ndim == 0 else out


def quadratic_approx(d, coupling: float):
    """Harmonic expansion about the minimum: -1 + 2 (1 - lam) (d - 1)^2."""
    d = np.asarray(d, dtype=float)
    out = -1.0 + 2.0 * (1.0 - coupling) * (d - 1.0) ** 2
    return float(out) if out.ndim == 0 else out


def rescaled_exact(d, params: MaterialParams):
    """Exact-route landscape on the same axes.

    The full band-energy expression evaluated at d * gap_min, over the
    closed-form |E_min|; approaches rescaled_energy as the bandwidth to
    gap ratio grows.
    """
    d = np.asarray(d, dtype=float)
    n, B, lam = params.n, params.bandwidth, params.coupling
    gap_min = 2.0 * B * math.exp(-1.0 / lam)
    e_min = n * B * math.exp(-2.0 / lam)
    flat = np.atleast_1d(d)
    out = np.array([island_energy(float(di) * gap_min, params).energy_exact
                    for di in flat]) / e_min
    return float(out[0]) if d.ndim == 0 else out


@dataclass(frozen=True)
class HiggsLandscape:
    rescaled_energy: object      # callable d -> dimensionless energy
    curvature: float             # coefficient of (d - 1)^2
    effective_mass: float
    frequency: float
    bound_states: float


def landscape(d_values, coupling: float):
    """Rescaled landscape over d_values: (model, quadratic) vectors."""
    return rescaled_energy(d_values, coupling), quadratic_approx(d_values, coupling)


def oscillator(params: MaterialParams, hbar: float = 1.0) -> HiggsLandscape:
    """Amplitude-mode oscillator read off the landscape minimum.

    effective_mass = (hbar^2/4) / (rho(E_F)^2 |E_min|) with the flat-band
    density of states rho = n/2B; frequency = 2 gap_min / hbar (the pair-
    breaking threshold); bound_states = |E_min| / (hbar omega), which the
    hbar factors cancel down to n e^{-1/lam} / 4. Unitful callers pass the
    hbar from the constants table; the default works in natural units.
    """
    n, B, lam = params.n, params.bandwidth, params.coupling
    gap_min = 2.0 * B * math.exp(-1.0 / lam)
    e_min = n * B * math.exp(-2.0 / lam)
    rho = n / (2.0 * B)
    omega = 2.0 * gap_min / hbar
    return HiggsLandscape(
        rescaled_energy=lambda d: rescaled_energy(d, lam),
        curvature=2.0 * (1.0 - lam),
        effective_mass=(hbar * hbar / 4.0) / (rho * rho * e_min),
        frequency=omega,
        bound_states=e_min / (hbar * omega),
    )


def radial_overlap(gap_a: float, gap_b: float, params: MaterialParams) -> float:
    """Overlap of ground states at two nearby gap amplitudes.

    Gaussian form exp(-3 n pi (gap_b - gap_a)^2 / (64 sqrt(2) b gap_a^2))
    with b = bandwidth/gap_a; valid for small relative detuning, where it
    tracks the exact product of Bogoliubov overlaps.
    """
    if gap_a <= 0.0 or gap_b <= 0.0:
        raise ValueError("gaps must be positive")
    b = params.bandwidth / gap_a
    n = params.n
    return math.exp(-3.0 * n * math.pi * (gap_b - gap_a) ** 2
                    / (64.0 * math.sqrt(2.0) * b * gap_a * gap_a))


def radial_overlap_product(gap_a: float, gap_b: float, params: MaterialParams) -> float:
    """Exact finite-n overlap prod_k (u_k u'_k + v_k v'_k) for cross-checks."""
    eps = band_grid(params)
    ua, va, _ = bogoliubov(eps, params.chemical_potential, gap_a)
    ub, vb, _ = bogoliubov(eps, params.chemical_potential, gap_b)
    return float(np.prod(np.sqrt(ua * ub) + np.sqrt(va * vb)))
