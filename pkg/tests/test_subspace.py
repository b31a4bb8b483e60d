import math

import numpy as np
import pytest

from bcsq.core import MaterialParams, band_grid, bogoliubov
from bcsq.subspace import (Discretization, build_overlap_matrix,
                           circulant_spectrum, completeness_and_projection,
                           discretize, formula_deff, formula_deff1,
                           orthonormalize, overlap_exact, overlap_gaussian)

P = MaterialParams.from_gap(n=1000, bandwidth=10.0, gap=1.0)


def raw_overlap(phi, params):
    """Independent route: direct product over the band grid."""
    u2, v2, _ = bogoliubov(band_grid(params), params.chemical_potential,
                           params.gap)
    return np.prod(u2 + v2 * np.exp(1j * phi))


def test_overlap_trivial_points():
    tiny = MaterialParams.from_gap(n=2, bandwidth=1.0, gap=1.0)
    assert overlap_exact(0.0, tiny) == pytest.approx(1.0)
    w = overlap_exact(math.pi, tiny)
    assert w.real == pytest.approx(-0.5, abs=1e-14)
    assert abs(w.imag) < 1e-14


def test_overlap_exact_matches_raw_product():
    for phi in (0.3, 1.1, 2.9):
        assert overlap_exact(phi, P) == pytest.approx(raw_overlap(phi, P),
                                                      rel=1e-12)
    # frozen magnitude at phi=0.3 for n=1000, b=10
    assert abs(overlap_exact(0.3, P)) == pytest.approx(0.19185795508356257,
                                                       rel=1e-12)


def test_overlap_gaussian_magnitude_example():
    # e^{-pi n phi^2 / 16 b} at phi=0.3 sits within 15% of the exact value
    w = overlap_gaussian(0.3, 1000, 10.0)
    assert abs(w) == pytest.approx(math.exp(-math.pi * 1000 * 0.09 / 160.0),
                                   rel=1e-14)
    assert abs(abs(w) / abs(overlap_exact(0.3, P)) - 1.0) < 0.15


def test_overlap_gaussian_phase_is_half_filling_drift():
    phi = 0.12
    w = overlap_gaussian(phi, 1000, 10.0)
    assert np.angle(w) == pytest.approx((1000 * phi / 2.0) % (2 * math.pi)
                                        - 2 * math.pi, abs=1e-12)


def test_overlap_exact_accepts_arrays():
    phis = np.array([0.0, 0.3, -0.3])
    w = overlap_exact(phis, P)
    assert w.shape == (3,)
    assert w[1] == pytest.approx(np.conj(w[2]), rel=1e-13)


def test_discretize_grid_layout():
    d = discretize(P, 2.0)
    assert d.alpha0 == pytest.approx(math.sqrt(20.0) / math.pi, rel=1e-14)
    assert d.alpha == pytest.approx(2.0 * d.alpha0, rel=1e-14)
    assert d.delta_phi == pytest.approx(4.0 * math.sqrt(20.0 / 1000.0),
                                        rel=1e-14)
    assert d.dim == math.floor(2.0 * math.pi / d.delta_phi)
    assert d.grid[0] == pytest.approx(-math.pi)
    assert d.grid[-1] < math.pi
    with pytest.raises(ValueError):
        discretize(P, 0.0)


def test_commensurate_snaps_spacing():
    d = discretize(P, 2.0).commensurate()
    assert d.dim * d.delta_phi == pytest.approx(2.0 * math.pi, rel=1e-15)
    e = Discretization.from_dim(1000, 10.0, 40)
    assert e.delta_phi == pytest.approx(2.0 * math.pi / 40.0, rel=1e-15)
    assert e.dim == 40


def test_formula_deff_values():
    assert formula_deff(1000, 10.0) == pytest.approx(math.pi * math.sqrt(50.0),
                                                     rel=1e-14)
    assert formula_deff1(1000, 10.0) == pytest.approx(formula_deff(1000, 10.0) / 2.0,
                                                      rel=1e-14)


def test_circulant_spectrum_against_dense_eigensolve():
    """Dual route: FFT spectrum of the stored column vs dense eigvalsh."""
    disc = Discretization.from_dim(1000, 10.0, 40)
    spec = circulant_spectrum(disc, P)
    dense = build_overlap_matrix(disc, P).dense()
    lam_dense = np.linalg.eigvalsh(dense)
    assert np.allclose(np.sort(spec.eigenvalues), lam_dense, atol=1e-9)
    assert spec.d_eff == pytest.approx(21.1327122716, rel=1e-9)
    assert np.max(spec.eigenvalues) == pytest.approx(2.6343497829, rel=1e-9)
    assert spec.d_eff == pytest.approx(float(np.sum(spec.significances)),
                                       rel=1e-14)


def test_circulant_spectrum_gaussian_model_peak():
    disc = Discretization.from_dim(1000, 10.0, 40)
    spec = circulant_spectrum(disc, P)
    assert np.max(spec.model_eigenvalues) == pytest.approx(
        (2.0 * 40 / math.pi) * math.sqrt(10.0 / 1000.0), rel=1e-14)
    # model peak sits on the numerical peak
    assert np.argmax(spec.model_eigenvalues) == np.argmax(spec.eigenvalues)


def test_orthonormalize_whitens_overlap():
    disc = Discretization.from_dim(1000, 10.0, 20)
    W = build_overlap_matrix(disc, P)
    E = orthonormalize(W)
    G = W.dense()
    resid = np.conj(E) @ G @ E.T - np.eye(20)
    assert np.max(np.abs(resid)) < 1e-10


def test_projection_weight_plateaus():
    d1 = discretize(P, 1.0)
    rep1 = completeness_and_projection(d1, P, 0.0)
    assert rep1.k_n_mean == pytest.approx(1.0, abs=1e-12)
    d2 = discretize(P, 2.0)
    rep2 = completeness_and_projection(d2, P, 0.0)
    assert rep2.k_n_mean == pytest.approx(0.5, abs=1e-12)
    # scalar phi gives scalar fields, array gives arrays
    rep = completeness_and_projection(d1, P, np.array([0.0, 0.1]))
    assert rep.k_n.shape == (2,)


def test_distance_bound_small_alpha_limit():
    # sqrt(2(1-e^{-pi a^2/2a0^2})) -> sqrt(pi) a/a0 as a/a0 -> 0
    d = discretize(P, 0.05)
    rep = completeness_and_projection(d, P, 0.0)
    assert rep.distance_bound == pytest.approx(math.sqrt(math.pi) * 0.05,
                                               rel=2e-3)
