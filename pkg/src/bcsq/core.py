"""Microscopic model: pairing gap, Bogoliubov coefficients, band grid, DOS.

Energies are in whatever unit the caller picks, as long as it is consistent.
The single-particle band is uniform on [-B, B] (constant normal-state DOS),
half filled, with the chemical potential at zero unless stated otherwise.
"""

from dataclasses import dataclass, field
import math

import numpy as np

__all__ = [
    "MaterialParams",
    "BogoliubovPoint",
    "gap_from_coupling",
    "coupling_from_gap",
    "bogoliubov",
    "dos",
    "band_grid",
]


def gap_from_coupling(bandwidth: float, coupling: float) -> float:
    """Weak-coupling gap 2*B*exp(-1/lambda) for half bandwidth B."""
    if bandwidth <= 0:
        raise ValueError(f"bandwidth must be positive, got {bandwidth}")
    if coupling <= 0.0:
        raise ValueError(f"coupling must be positive, got {coupling}")
    return 2.0 * bandwidth * math.exp(-1.0 / coupling)


def coupling_from_gap(bandwidth: float, gap: float) -> float:
    """Inverse of gap_from_coupling: lambda = 1/ln(2B/Delta)."""
    if not 0.0 < gap < 2.0 * bandwidth:
        raise ValueError(f"gap must lie in (0, 2*bandwidth), got {gap}")
    return 1.0 / math.log(2.0 * bandwidth / gap)


@dataclass(frozen=True)
class MaterialParams:
    """Island parameters: n modes on [-B, B], gap Delta, coupling lambda.

    b = B/Delta is derived; the weak-coupling formulas downstream assume
    b >> 1 but nothing here forbids b near 1 (the DOS is the exception and
    checks for itself). Electron number at half filling is N_el = n/2
    (n counts single-particle modes).
    """

    n: int
    bandwidth: float
    gap: float
    coupling: float
    chemical_potential: float = 0.0
    b: float = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 modes, got n={self.n}")
        if self.bandwidth <= 0 or self.gap <= 0:
            raise ValueError("bandwidth and gap must be positive")
        if self.coupling <= 0.0:
            raise ValueError(f"coupling must be positive, got {self.coupling}")
        object.__setattr__(self, "b", self.bandwidth / self.gap)

    @classmethod
    def from_coupling(cls, n: int, bandwidth: float, coupling: float,
                      chemical_potential: float = 0.0) -> "MaterialParams":
        """Construct with the gap fixed by the weak-coupling relation."""
        return cls(n=n, bandwidth=bandwidth,
                   gap=gap_from_coupling(bandwidth, coupling),
                   coupling=coupling, chemical_potential=chemical_potential)

    @classmethod
    def from_gap(cls, n: int, bandwidth: float, gap: float,
                 chemical_potential: float = 0.0) -> "MaterialParams":
        """Construct from an explicit gap; coupling is back-solved."""
        return cls(n=n, bandwidth=bandwidth, gap=gap,
                   coupling=coupling_from_gap(bandwidth, gap),
                   chemical_potential=chemical_potential)


@dataclass(frozen=True)
class BogoliubovPoint:
    u_sq: float
    v_sq: float
    quasiparticle_energy: float


def bogoliubov(kinetic_energy, mu: float, gap: float):
    """Bogoliubov factors u^2, v^2 and quasiparticle energy E.

    u^2 = (1 + (eps-mu)/E)/2, v^2 = (1 - (eps-mu)/E)/2,
    E = sqrt((eps-mu)^2 + Delta^2).

    Scalar input returns a BogoliubovPoint; array input returns the tuple
    (u_sq, v_sq, E) of arrays.
    """
    if gap <= 0:
        raise ValueError(f"gap must be positive, got {gap}")
    xi = np.asarray(kinetic_energy, dtype=float) - mu
    energy = np.hypot(xi, gap)
    ratio = xi / energy
    u_sq = 0.5 * (1.0 + ratio)
    v_sq = 0.5 * (1.0 - ratio)
    if np.isscalar(kinetic_energy) or np.ndim(kinetic_energy) == 0:
        return BogoliubovPoint(float(u_sq), float(v_sq), float(energy))
    return u_sq, v_sq, energy


def dos(E, params: MaterialParams):
    """Density of Bogoliubov energies.

    rho(E) = n/(2 Delta sqrt(b^2-1)) * |E|/sqrt(E^2 - Delta^2) for |E| > Delta,
    zero inside the gap. The inverse-square-root edge at |E| = Delta is
    integrable; quadratures should substitute E = Delta*cosh(u) rather than
    sample the edge.
    """
    if params.b <= 1.0:
        raise ValueError(
            f"dos needs bandwidth > gap, got b = {params.b:.4g}")
    E = np.asarray(E, dtype=float)
    absE = np.abs(E)
    out = np.zeros_like(E)
    mask = absE > params.gap
    norm = params.n / (2.0 * params.gap * math.sqrt(params.b**2 - 1.0))
    out[mask] = norm * absE[mask] / np.sqrt(absE[mask] ** 2 - params.gap**2)
    if out.ndim == 0:
        return float(out)
    return out


def band_grid(params: MaterialParams) -> np.ndarray:
    """Uniform single-particle energies on [-B, B], endpoints included.

    Symmetric about mu = 0, so the grid sums to zero for every n.
    """
    return np.linspace(-params.bandwidth, params.bandwidth, params.n)
