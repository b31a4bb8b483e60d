"""Hamiltonians for charge- and flux-biased junction circuits.

build_cj works in the charge basis of a single junction with offset n_g;
build_lcj adds a shunt inductor by widening the phase window to M turns,
which makes the conjugate charge grid fractional with spacing 1/M.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import math

import numpy as np

from .operators import raising_operator

__all__ = [
    "CircuitSpec",
    "SpectrumResult",
    "build_cj",
    "build_lcj",
    "spectrum",
    "ng_sweep",
]


@dataclass(frozen=True)
class CircuitSpec:
    e_c: float
    e_j: float
    e_l: float = 0.0
    n_g: float = 0.0
    dim: int = 21
    phi0: float = 0.0
    phase_window: int = 1

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError(f"dim must be at least 2, got {self.dim}")
        if self.phase_window < 1:
            raise ValueError(f"phase_window must be >= 1, got {self.phase_window}")


@dataclass(frozen=True)
class SpectrumResult:
    n_g_values: np.ndarray
    levels: np.ndarray   # shape (len(n_g_values), k)


def build_cj(spec: CircuitSpec) -> np.ndarray:
    """Charge-basis Hamiltonian E_C (q - n_g)^2 - (E_J/2)(S + S^dag).

    Charge labels are arange(dim) - dim//2 recentred on the nearest
    integer to n_g, so shifting n_g by one relabels the basis and the
    spectrum is exactly period-1 at any dim. S is the finite raising
    operator whose wrap entry carries the reference phase, so phi0 enters
    only through the corner e^{i dim phi0}.
    """
    q = np.arange(spec.dim) - spec.dim // 2 + int(math.floor(spec.n_g + 0.5))
    S = raising_operator(spec.dim, spec.phi0)
    H = np.diag(spec.e_c * (q - spec.n_g) ** 2).astype(complex)
    H -= 0.5 * spec.e_j * (S + S.conj().T)
    return H


def build_lcj(spec: CircuitSpec, m_max: int = None) -> np.ndarray:
    """Phase-basis Hamiltonian of an inductively shunted junction.

    The phase lives on [-M pi, M pi) with M = phase_window turns, so the
    conjugate charge comes in steps of 1/M and the kinetic term is built
    by the exact unitary change of basis rather than a stencil:

        H = E_C N^2 + diag( (E_L/2) phi^2 - E_J cos phi ).

    m_max, when given, caps the window (the junction wire can only hold so
    many flux quanta before the lumped picture breaks down).
    """
    M = spec.phase_window
    if m_max is not None and M > m_max:
        raise ValueError(
            f"phase_window {M} exceeds the supported maximum {m_max}")
    d = spec.dim
    grid = -M * math.pi + (2.0 * math.pi * M / d) * np.arange(d)
    labels = (np.arange(d) - d // 2) / M
    G = np.exp(1j * np.outer(labels, grid)) / math.sqrt(d)
    n_sq = G.conj().T @ np.diag(labels ** 2) @ G
    H = spec.e_c * n_sq
    H += np.diag(0.5 * spec.e_l * grid ** 2 - spec.e_j * np.cos(grid))
    return H


def spectrum(H: np.ndarray, k: int) -> np.ndarray:
    """Lowest k eigenvalues of a Hermitian matrix, ascending.

    Rejects non-Hermitian input outright instead of silently symmetrising."""
    scale = max(1.0, float(np.max(np.abs(H))))
    if np.max(np.abs(H - H.conj().T)) > 1e-12 * scale:
        raise ValueError("matrix is not Hermitian within 1e-12")
    vals = np.linalg.eigvalsh(H)
    return vals[:k]


def ng_sweep(spec: CircuitSpec, n_g_min: float, n_g_max: float, steps: int,
             k: int = 4, jobs: int = 1) -> SpectrumResult:
    """Charge dispersion: lowest k levels over a uniform gate-offset sweep.

    Levels are reported in units of E_J when the junction term is present,
    bare otherwise. Thread parallelism is safe here because eigvalsh
    releases the GIL inside LAPACK.
    """
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")
    n_g_values = np.linspace(n_g_min, n_g_max, steps)

    def one(ng: float) -> np.ndarray:
        s = CircuitSpec(e_c=spec.e_c, e_j=spec.e_j, e_l=spec.e_l, n_g=ng,
                        dim=spec.dim, phi0=spec.phi0,
                        phase_window=spec.phase_window)
        return spectrum(build_cj(s), k)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(one, n_g_values))
    else:
        rows = [one(ng) for ng in n_g_values]
    levels = np.array(rows)
    if spec.e_j > 0.0:
        levels = levels / spec.e_j
    return SpectrumResult(n_g_values=n_g_values, levels=levels)
