"""Discretised phase basis: overlaps, completeness, circulant spectrum, d_eff.

The fixed-phase ground states on a phase grid are generally not orthogonal;
their pairwise overlap W(phi) controls everything here. The grid spacing is
parameterised by alpha = delta_phi*sqrt(n)/(2*pi), with alpha0 = sqrt(2b)/pi
the scale at which |W(delta_phi)| = exp(-pi/2).
"""

from dataclasses import dataclass
import math

import numpy as np
from scipy.special import erf

from .core import MaterialParams, band_grid, bogoliubov
from .errors import NumericalError

__all__ = [
    "Discretization",
    "OverlapMatrix",
    "SubspaceSpectrum",
    "ProjectionReport",
    "overlap_exact",
    "overlap_gaussian",
    "discretize",
    "formula_deff1",
    "formula_deff",
    "completeness_and_projection",
    "circulant_spectrum",
    "orthonormalize",
]


def overlap_exact(phi, params: MaterialParams):
    """Ground-state overlap W(phi) = prod_k (u_k^2 + v_k^2 e^{i phi}).

    Evaluated as exp(sum_k log(...)) so it stays finite at large n where the
    raw product underflows. Each factor traces a circle in the right half
    plane as phi varies over (-pi, pi), so the principal log branch is
    continuous in phi starting from W(0) = 1.

    Accepts a scalar or an array of angles.
    """
    grid = band_grid(params)
    u_sq, v_sq, _ = bogoliubov(grid, params.chemical_potential, params.gap)
    phi_arr = np.atleast_1d(np.asarray(phi, dtype=float))
    # factors[j, k] = u_k^2 + v_k^2 exp(i phi_j)
    factors = u_sq[None, :] + v_sq[None, :] * np.exp(1j * phi_arr[:, None])
    w = np.exp(np.sum(np.log(factors), axis=1))
    if np.ndim(phi) == 0:
        return complex(w[0])
    return w


def overlap_gaussian(phi, n: int, b: float):
    """Gaussian envelope model exp(i n phi/2 - pi n phi^2/(16 b))."""
    if b <= 1:
        raise ValueError(f"b must exceed 1, got {b}")
    phi_arr = np.asarray(phi, dtype=float)
    out = np.exp(1j * n * phi_arr / 2.0 - math.pi * n * phi_arr**2 / (16.0 * b))
    if np.ndim(phi) == 0:
        return complex(out)
    return out


@dataclass(frozen=True)
class Discretization:
    """Phase grid descriptor.

    grid holds dim points phi_j = -pi + j*delta_phi, j = 0..dim-1, all inside
    [-pi, pi). dim = floor(2*pi/delta_phi), so the last point generally falls
    short of pi by a sub-spacing gap.
    """

    alpha: float
    alpha0: float
    delta_phi: float
    dim: int
    grid: np.ndarray

    @classmethod
    def from_alpha(cls, n: int, b: float, alpha_ratio: float) -> "Discretization":
        alpha0 = math.sqrt(2.0 * b) / math.pi
        alpha = alpha_ratio * alpha0
        delta_phi = 2.0 * math.pi * alpha / math.sqrt(n)
        dim = int(math.floor(2.0 * math.pi / delta_phi))
        if dim < 2:
            raise ValueError(
                f"grid too coarse: alpha={alpha:.4g} gives dim={dim} < 2")
        grid = -math.pi + delta_phi * np.arange(dim)
        return cls(alpha=alpha, alpha0=alpha0, delta_phi=delta_phi,
                   dim=dim, grid=grid)

    @classmethod
    def from_dim(cls, n: int, b: float, dim: int) -> "Discretization":
        """Grid with exactly dim points and commensurate spacing 2*pi/dim."""
        if dim < 2:
            raise ValueError(f"dim must be at least 2, got {dim}")
        delta_phi = 2.0 * math.pi / dim
        alpha = delta_phi * math.sqrt(n) / (2.0 * math.pi)
        alpha0 = math.sqrt(2.0 * b) / math.pi
        grid = -math.pi + delta_phi * np.arange(dim)
        return cls(alpha=alpha, alpha0=alpha0, delta_phi=delta_phi,
                   dim=dim, grid=grid)

    def commensurate(self) -> "Discretization":
        """Same dim, spacing snapped to 2*pi/dim (exact full-circle cover).

        Operator algebra (DFT unitarity, cyclic displacement) needs
        dim*delta_phi = 2*pi exactly; the floor in from_alpha leaves a
        sub-spacing shortfall that this removes.
        """
        delta_phi = 2.0 * math.pi / self.dim
        grid = -math.pi + delta_phi * np.arange(self.dim)
        return Discretization(alpha=self.alpha, alpha0=self.alpha0,
                              delta_phi=delta_phi, dim=self.dim, grid=grid)


def discretize(params: MaterialParams, alpha_ratio: float) -> Discretization:
    """Build the phase grid with alpha = alpha_ratio * alpha0.

    At alpha_ratio = 2 the spacing is delta_phi = 4*sqrt(2b/n), which makes
    neighbouring states nearly orthogonal (|W| = e^{-2 pi}).
    """
    if alpha_ratio <= 0:
        raise ValueError(f"alpha_ratio must be positive, got {alpha_ratio}")
    return Discretization.from_alpha(params.n, params.b, alpha_ratio)


def formula_deff1(n: int, b: float) -> float:
    """Dimension estimate (pi/2)*sqrt(n/(2b)) from the spacing argument."""
    return 0.5 * math.pi * math.sqrt(n / (2.0 * b))


def formula_deff(n: int, b: float) -> float:
    """Dimension estimate pi*sqrt(n/(2b)) from the eigenvalue-sum route.

    The two estimates differ by a factor 2; both are reported since the
    significance-weighted rank lands between conventions.
    """
    return math.pi * math.sqrt(n / (2.0 * b))


@dataclass(frozen=True)
class ProjectionReport:
    distance_bound: float
    k_n: np.ndarray
    k_n_mean: np.ndarray


def completeness_and_projection(disc: Discretization, params: MaterialParams,
                                phi) -> ProjectionReport:
    """Distance bound, projection weight K_n(phi), and its continuum mean.

    distance_bound = sqrt(2(1 - e^{-pi alpha^2/(2 alpha0^2)})) bounds how far
    a state midway between grid points sits from the projected subspace; for
    alpha << alpha0 it reduces to sqrt(pi)*alpha/alpha0.

    k_n(phi) = sum_j |W(phi - phi_j)|^2 over the grid. k_n_mean is the
    erf-difference form obtained by replacing the sum with an integral; its
    interior plateau is alpha0/alpha.
    """
    phi_arr = np.atleast_1d(np.asarray(phi, dtype=float))
    a, a0 = disc.alpha, disc.alpha0
    bound = math.sqrt(2.0 * (1.0 - math.exp(-math.pi * a**2 / (2.0 * a0**2))))

    diffs = phi_arr[:, None] - disc.grid[None, :]
    w = overlap_exact(diffs.ravel(), params).reshape(diffs.shape)
    k_n = np.sum(np.abs(w) ** 2, axis=1)

    n = params.n
    root_n = math.sqrt(n)
    scale = 2.0 * a0 * math.sqrt(math.pi)
    upper = root_n * (math.pi + phi_arr) / scale
    lower = (root_n * (math.pi + phi_arr) - 2.0 * math.pi * math.sqrt(n - 1)) / scale
    k_mean = (a0 / (2.0 * a)) * (erf(upper) - erf(lower))

    if np.ndim(phi) == 0:
        return ProjectionReport(bound, float(k_n[0]), float(k_mean[0]))
    return ProjectionReport(bound, k_n, k_mean)


@dataclass(frozen=True)
class OverlapMatrix:
    """Hermitian circulant overlap matrix, stored by its first column.

    first_column[j] holds the overlap at grid separation j*delta_phi, with
    the wrap half mirrored as conj(W((dim-j)*delta_phi)) so the circulant
    structure (and hence a real DFT spectrum) is exact even when delta_phi
    does not divide 2*pi.
    """

    first_column: np.ndarray
    dim: int

    def dense(self) -> np.ndarray:
        idx = (np.arange(self.dim)[:, None] - np.arange(self.dim)[None, :]) % self.dim
        return self.first_column[idx]


def _overlap_column(disc: Discretization, params: MaterialParams,
                    use_gaussian: bool) -> np.ndarray:
    d = disc.dim
    half = d // 2
    seps = disc.delta_phi * np.arange(half + 1)
    if use_gaussian:
        w_half = overlap_gaussian(seps, params.n, params.b)
    else:
        w_half = overlap_exact(seps, params)
    w = np.empty(d, dtype=complex)
    w[: half + 1] = w_half
    if d % 2 == 0:
        # self-conjugate wrap entry, must be real for a Hermitian circulant
        w[half] = w[half].real
    for j in range(half + 1, d):
        w[j] = np.conj(w[d - j])
    w[0] = 1.0 + 0.0j
    return w


@dataclass(frozen=True)
class SubspaceSpectrum:
    eigenvalues: np.ndarray
    significances: np.ndarray
    d_eff: float
    model_eigenvalues: np.ndarray


def circulant_spectrum(disc: Discretization, params: MaterialParams,
                       use_gaussian: bool = False) -> SubspaceSpectrum:
    """Eigenvalues of the overlap matrix via the DFT of its first column.

    Lambda = sqrt(d) * F w with F_{lm} = e^{2 pi i (l-1)(m-1)/d}/sqrt(d),
    i.e. Lambda_k = sum_m w_m e^{2 pi i k m / d}. Also evaluates the Gaussian
    eigenvalue model (2d/pi) sqrt(b/n) exp(-4 b m^2/(pi n)) with the model
    peak aligned to the numerical one.

    Raises NumericalError when the spectrum is indefinite (an eigenvalue
    below -1e-10 * Lambda_max), which signals the Gaussian-regime
    assumptions do not hold for this grid.
    """
    w = _overlap_column(disc, params, use_gaussian)
    d = disc.dim
    lam_c = d * np.fft.ifft(w)  # sum_m w_m exp(+2 pi i k m/d)
    lam_max = float(np.max(lam_c.real))
    if np.max(np.abs(lam_c.imag)) > 1e-12 * lam_max:
        raise NumericalError(
            f"overlap spectrum has imaginary residue {np.max(np.abs(lam_c.imag)):.3e}")
    lam = lam_c.real
    if np.min(lam) < -1e-10 * lam_max:
        raise NumericalError(
            f"indefinite overlap matrix: min eigenvalue {np.min(lam):.3e} "
            f"vs max {lam_max:.3e}")
    lam_clipped = np.clip(lam, 0.0, None)
    sig = np.sqrt(lam_clipped / lam_max)
    d_eff = float(np.sum(sig))

    # Gaussian model, peak-aligned: offsets are circular distances from argmax.
    k_peak = int(np.argmax(lam))
    offsets = (np.arange(d) - k_peak + d // 2) % d - d // 2
    n, b = params.n, params.b
    model = (2.0 * d / math.pi) * math.sqrt(b / n) * np.exp(
        -4.0 * b * offsets.astype(float) ** 2 / (math.pi * n))
    return SubspaceSpectrum(eigenvalues=lam, significances=sig,
                            d_eff=d_eff, model_eigenvalues=model)


def build_overlap_matrix(disc: Discretization, params: MaterialParams,
                         use_gaussian: bool = False) -> OverlapMatrix:
    return OverlapMatrix(first_column=_overlap_column(disc, params, use_gaussian),
                         dim=disc.dim)


def orthonormalize(W: OverlapMatrix) -> np.ndarray:
    """Basis-change matrix E = (W^T)^{-1/2}, so conj(E) W E^T = identity.

    Built spectrally as F D^{-1/2} F^dagger on the circulant eigenbasis.
    Fails when the matrix is numerically rank-deficient (an eigenvalue under
    1e-13 * Lambda_max), reporting the effective rank.
    """
    d = W.dim
    lam = (d * np.fft.ifft(W.first_column)).real
    lam_max = float(np.max(lam))
    floor = 1e-13 * lam_max
    if np.min(lam) < floor:
        rank = int(np.sum(lam >= floor))
        raise NumericalError(
            f"overlap matrix ill-conditioned: effective rank {rank} of {d}")
    # Columns of F diagonalise any circulant; with C = F* diag(lam) F^T for
    # first-column DFT lam, (C^T)^{-1/2} = F diag(lam^{-1/2}) F^dagger.
    j = np.arange(d)
    F = np.exp(2j * math.pi * np.outer(j, j) / d) / math.sqrt(d)
    E = F @ np.diag(lam ** -0.5) @ F.conj().T
    return E
