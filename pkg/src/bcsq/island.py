"""Condensation energy of a single superconducting island.

Everything is expressed through band-energy integrals at fixed phase: the
kinetic-plus-pairing kernel K(phi), the anomalous amplitude S(phi), and the
interaction weight V(phi) = S^2 e^{i phi} W(phi). Energies are measured from
the filled Fermi sea, so the normal-state reference n*bandwidth/2 is added
back and the gapless limit costs exactly zero.
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy import integrate, optimize

from .core import MaterialParams
from .errors import NumericalError
from .subspace import overlap_exact

__all__ = [
    "IslandEnergy",
    "kv_matrix_elements",
    "island_energy",
    "gap_minimum",
]


def kv_matrix_elements(phi: float, params: MaterialParams) -> dict:
    """Kinetic/pairing kernel K and pair-interaction weight V at phase phi.

    K(phi) = W(phi) * (n/2B) * int_0^B 4 E (gap^2 - E^2)
                       / (2 E^2 - gap^2 (1 - cos phi)) d eps
    with E = sqrt(eps^2 + gap^2).

    V(phi) = S(phi)^2 e^{i phi} W(phi) where the anomalous sum
    S(phi) = (n gap / 2B) (1 + e^{-i phi}) int_0^B E
                       / (2 E^2 - gap^2 (1 - cos phi)) d eps.

    Both denominators equal 2(eps^2 + gap^2 c^2) with c = cos(phi/2), so
    the integrands are near-singular on the scale gap*c as phi -> pi. The
    K integrand stays finite (it tends to -2E); the S integral itself
    diverges there, but its product with the vanishing prefactor
    1 + e^{-i phi} = 2 c e^{-i phi/2} has the finite limit pi/2 per unit
    prefactor, which is used at exactly |phi| = pi.
    """
    n = params.n
    B = params.bandwidth
    gap = params.gap
    g2 = gap * gap
    c_signed = math.cos(0.5 * phi)
    c = abs(c_signed)
    a2 = g2 * c * c

    # Both integrands contain the factor 1/(eps^2 + a^2), a peak of width
    # a = gap*|cos(phi/2)| that narrows without bound as phi -> pi, so the
    # peak is peeled off analytically instead of handed to the adaptive
    # rule.  With F = int_0^B sqrt(eps^2+g^2)/(eps^2+a^2) d eps,
    #
    #   int k_integrand = -[B sqrt(B^2+g^2) + g^2 asinh(B/g)]/2 + a^2 F
    #   int s_integrand = F
    #
    # and F itself splits into atan(B/a) gap/a (exact) plus a remainder
    # whose integrand stays smooth at the origin for every a, tending to
    # 1/(2 gap) there.
    band_eval = 0.5 * (B * math.sqrt(B * B + g2) + g2 * math.asinh(B / gap))

    if c < 1e-12:
        k_int = -band_eval
        cj = 0.5 * math.pi
    else:
        a = gap * c

        def s_smooth(eps):
            e2 = eps * eps
            return (math.sqrt(e2 + g2) - gap) / (e2 + a2)

        s_peak = gap * math.atan(B / a) / a
        s_rest, s_err = integrate.quad(s_smooth, 0.0, B, limit=300)
        s_int = s_peak + s_rest
        if abs(s_err) > 1e-8 * max(abs(s_int), 1.0):
            raise NumericalError(
                f"anomalous-sum quadrature did not converge at phi={phi:.6g} "
                f"(error estimate {s_err:.3g})")
        k_int = -band_eval + a2 * s_int
        if abs(a2 * s_err) > 1e-8 * max(abs(k_int), 1.0):
            raise NumericalError(
                f"kinetic-kernel quadrature did not converge at phi={phi:.6g} "
                f"(error estimate {a2 * s_err:.3g})")
        cj = c_signed * s_int

    w = complex(overlap_exact(np.array([phi]), params)[0])
    K = w * (n / B) * k_int
    S = (n * gap / (2.0 * B)) * cj * np.exp(-0.5j * phi)
    V = S * S * np.exp(1j * phi) * w
    return {"K": K, "V": V}


@dataclass(frozen=True)
class IslandEnergy:
    energy_exact: float
    energy_approx: float
    delta_min: float
    e_min: float


def _energy_exact(gap: float, n: int, bandwidth: float, coupling: float) -> float:
    """Exact phi=0 energy relative to the filled Fermi sea.

    K(0) = n gap^2 asinh(B/gap) / (2B) - (n/2) sqrt(B^2 + gap^2),
    V(0) = (n gap asinh(B/gap) / (2B))^2, and the Fermi-sea reference
    n*B/2 brings the gapless limit to zero.
    """
    B = bandwidth
    asb = math.asinh(B / gap)
    k0 = n * gap * gap * asb / (2.0 * B) - 0.5 * n * math.hypot(B, gap)
    v0 = (n * gap * asb / (2.0 * B)) ** 2
    g2 = 2.0 * B * coupling / n
    return k0 - g2 * v0 + 0.5 * n * B


def _energy_approx(gap: float, n: int, bandwidth: float, coupling: float) -> float:
    """Leading-log condensation energy -(n gap^2/2B)(1/2 + x + lam x^2),
    x = ln(gap/2B)."""
    x = math.log(gap / (2.0 * bandwidth))
    return -(n * gap * gap / (2.0 * bandwidth)) * (0.5 + x + coupling * x * x)


def island_energy(gap: float, params: MaterialParams) -> IslandEnergy:
    """Energy of the island at the given trial gap, exact and leading-log.

    delta_min and e_min are the closed-form stationary point of the
    leading-log form: gap 2B e^{-1/lam}, energy -nB e^{-2/lam}.
    """
    if gap <= 0.0:
        raise ValueError(f"gap must be positive, got {gap}")
    n, B, lam = params.n, params.bandwidth, params.coupling
    return IslandEnergy(
        energy_exact=_energy_exact(gap, n, B, lam),
        energy_approx=_energy_approx(gap, n, B, lam),
        delta_min=2.0 * B * math.exp(-1.0 / lam),
        e_min=-n * B * math.exp(-2.0 / lam),
    )


def gap_minimum(params: MaterialParams, route: str = "exact") -> dict:
    """Minimise the island energy over the trial gap.

    Returns both the numerically located minimum of the chosen route and
    the closed-form values from the leading-log form. route is "exact" or
    "approx". A coarse logarithmic scan brackets the minimum before a
    golden-section refinement in log(gap).
    """
    n, B, lam = params.n, params.bandwidth, params.coupling
    if route == "exact":
        f = lambda lg: _energy_exact(math.exp(lg), n, B, lam)
    elif route == "approx":
        f = lambda lg: _energy_approx(math.exp(lg), n, B, lam)
    else:
        raise ValueError(f"route must be 'exact' or 'approx', got {route!r}")

    lgs = np.log(B) + np.linspace(-12.0, 0.0, 241)
    vals = np.array([f(lg) for lg in lgs])
    i = int(np.argmin(vals))
    if i == 0 or i == len(lgs) - 1:
        raise NumericalError(
            f"gap scan hit the window edge at index {i}; no interior minimum")
    res = optimize.minimize_scalar(
        f, bracket=(lgs[i - 1], lgs[i], lgs[i + 1]), method="golden",
        options={"maxiter": 60})
    gap_num = math.exp(res.x)
    return {
        "gap_numeric": gap_num,
        "energy_numeric": float(res.fun),
        "gap_formula": 2.0 * B * math.exp(-1.0 / lam),
        "energy_formula": -n * B * math.exp(-2.0 / lam),
    }
