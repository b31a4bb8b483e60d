"""Phase and number operators on the discretised subspace.

The finite phase grid carries a conjugate charge basis through a discrete
Fourier transform, so every operator here is a dense dim x dim matrix. The
constructions need the grid to close exactly (dim * delta_phi = 2*pi); the
builder snaps any floor-truncated grid to the commensurate spacing.
"""

from dataclasses import dataclass
import math

import numpy as np

from .subspace import Discretization

__all__ = [
    "OperatorSet",
    "CommutatorReport",
    "build_operators",
    "phase_in_number_basis",
    "commutator",
    "commutator_closed_form",
    "displacement",
    "raising_operator",
]


@dataclass(frozen=True)
class OperatorSet:
    """Phase operator, number operator, and the basis change between them.

    phase_op is diagonal in the phase basis with entries phi0 + j*delta_phi.
    number_op is diagonal in the number basis with consecutive integer
    labels centred at round(n/2) (half filling); the window keeps exactly
    dim labels, trimming the nominal dim+1 wide charge range by one.
    dft columns hold the number states in the phase basis:
    dft[j, k] = exp(-i N_k phi_j)/sqrt(dim).
    """

    phase_op: np.ndarray
    number_op: np.ndarray
    dft: np.ndarray
    phi0: float
    n: int
    delta_phi: float
    dim: int

    @property
    def labels(self) -> np.ndarray:
        return self.number_op.diagonal().real.astype(int)


def build_operators(disc: Discretization, n: int, phi0: float = -math.pi) -> OperatorSet:
    """Assemble the operator set on a commensurate copy of the grid."""
    dc = disc.commensurate()
    d = dc.dim
    dphi = dc.delta_phi
    grid = phi0 + dphi * np.arange(d)
    labels = round(n / 2) + np.arange(d) - d // 2
    U = np.exp(-1j * np.outer(grid, labels.astype(float))) / math.sqrt(d)
    return OperatorSet(
        phase_op=np.diag(grid.astype(complex)),
        number_op=np.diag(labels.astype(complex)),
        dft=U,
        phi0=phi0,
        n=n,
        delta_phi=dphi,
        dim=d,
    )


def phase_in_number_basis(ops: OperatorSet, method: str = "kernel") -> np.ndarray:
    """Phase operator transformed to the number basis.

    method="kernel" evaluates the geometric-sum closed form: the diagonal is
    the grid mean phi0 + delta_phi*(dim-1)/2, and the off-diagonal entry at
    label difference m = N - N' is

        delta_phi * exp(i m phi0) / (exp(i m delta_phi) - 1).

    method="direct" computes dft^dagger . phase_op . dft; the two agree to
    machine precision, which is the defining check of the kernel.
    """
    if method == "direct":
        return ops.dft.conj().T @ ops.phase_op @ ops.dft
    if method != "kernel":
        raise ValueError(f"unknown method {method!r}")
    d = ops.dim
    dphi = ops.delta_phi
    m = np.arange(d)[:, None] - np.arange(d)[None, :]
    out = np.full((d, d), ops.phi0 + dphi * (d - 1) / 2.0, dtype=complex)
    off = m != 0
    mm = m[off].astype(float)
    out[off] = dphi * np.exp(1j * mm * ops.phi0) / (np.exp(1j * mm * dphi) - 1.0)
    return out


def commutator_closed_form(ops: OperatorSet) -> np.ndarray:
    """Entrywise closed form of [phase, number] in the number basis.

    C[N, N'] = (N' - N) * delta_phi * e^{i (N-N') phi0} / (e^{i (N-N') delta_phi} - 1)
    off the diagonal, zero on it. For |N - N'| << dim each entry tends to
    i * e^{i phi0 (N - N')}, the usual canonical-pair limit.
    """
    d = ops.dim
    dphi = ops.delta_phi
    m = np.arange(d)[:, None] - np.arange(d)[None, :]
    out = np.zeros((d, d), dtype=complex)
    off = m != 0
    mm = m[off].astype(float)
    out[off] = (-mm) * dphi * np.exp(1j * mm * ops.phi0) / (
        np.exp(1j * mm * dphi) - 1.0)
    return out


@dataclass(frozen=True)
class CommutatorReport:
    matrix: np.ndarray
    trace: complex
    phase_expectation: object   # callable(phi) -> complex
    junction_expectation: object  # callable(phi_ab, phi0_ab) -> complex


def commutator(ops: OperatorSet) -> CommutatorReport:
    """[phase, number] by direct matrix algebra, plus model expectations.

    The matrix is returned in the number basis and is exactly traceless.
    phase_expectation and junction_expectation are the sharp-grid model
    forms -i(1 - d*delta_{phi0,phi}) and -2i(1 - d*delta): away from the
    reference phase the pair acts canonically, while the single seam state
    carries the compensating weight that forces the trace to vanish. They
    are large-n summaries, not matrix elements of the exact commutator.
    """
    phase_n = phase_in_number_basis(ops, method="direct")
    C = phase_n @ ops.number_op - ops.number_op @ phase_n
    d = ops.dim

    def _is_ref(phi, ref):
        return abs((phi - ref + math.pi) % (2.0 * math.pi) - math.pi) < 1e-12

    def phase_expectation(phi: float) -> complex:
        return -1j * (1.0 - d * (1.0 if _is_ref(phi, ops.phi0) else 0.0))

    def junction_expectation(phi_ab: float, phi0_ab: float) -> complex:
        return -2j * (1.0 - d * (1.0 if _is_ref(phi_ab, phi0_ab) else 0.0))

    return CommutatorReport(matrix=C, trace=complex(np.trace(C)),
                            phase_expectation=phase_expectation,
                            junction_expectation=junction_expectation)


def displacement(disc: Discretization, shift: float) -> np.ndarray:
    """Cyclic displacement of the phase basis by an integer grid multiple.

    With integer charge labels the 2*pi wrap phase e^{2 pi i N} is one, so
    the matrix is a plain cyclic permutation: applying it dim times gives
    the identity, consistent with the raising operator's closed loop.
    """
    dc = disc.commensurate()
    d = dc.dim
    steps = shift / dc.delta_phi
    m = round(steps)
    if abs(steps - m) > 1e-9:
        raise ValueError(
            f"shift {shift:.6g} is not an integer multiple of delta_phi "
            f"{dc.delta_phi:.6g}")
    D = np.zeros((d, d), dtype=complex)
    cols = np.arange(d)
    D[(cols + m) % d, cols] = 1.0
    return D


def raising_operator(dim: int, phi0: float) -> np.ndarray:
    """e^{i phase} in the number basis: lowers the charge label by one.

    Ones on the [j-1, j] diagonal and the wrap entry e^{i dim phi0} at
    [dim-1, 0]. The corner exponent counts the loop of dim hops, so the
    total closed-loop phase is dim*phi0: shifting phi0 by a grid spacing
    2*pi/dim multiplies the corner by e^{2 pi i}, leaving the eigenvalue
    multiset (the dim-th roots of the corner phase) unchanged.
    """
    if dim < 2:
        raise ValueError(f"dim must be at least 2, got {dim}")
    S = np.zeros((dim, dim), dtype=complex)
    idx = np.arange(1, dim)
    S[idx - 1, idx] = 1.0
    S[dim - 1, 0] = np.exp(1j * dim * phi0)
    return S
