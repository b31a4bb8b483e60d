import math

import numpy as np
import pytest
from scipy import integrate

from bcsq.core import (MaterialParams, band_grid, bogoliubov,
                       coupling_from_gap, dos, gap_from_coupling)


def test_gap_coupling_roundtrip():
    gap = gap_from_coupling(10.0, 0.25)
    assert math.isclose(gap, 20.0 * math.exp(-4.0), rel_tol=1e-14)
    assert math.isclose(coupling_from_gap(10.0, gap), 0.25, rel_tol=1e-12)


def test_material_params_constructors_agree():
    a = MaterialParams.from_coupling(n=100, bandwidth=10.0, coupling=0.25)
    b = MaterialParams.from_gap(n=100, bandwidth=10.0, gap=a.gap)
    assert math.isclose(a.coupling, b.coupling, rel_tol=1e-12)
    assert math.isclose(a.b, 10.0 / a.gap, rel_tol=1e-14)


def test_material_params_validation():
    with pytest.raises(ValueError):
        MaterialParams.from_gap(n=1, bandwidth=1.0, gap=0.5)
    with pytest.raises(ValueError):
        MaterialParams.from_gap(n=4, bandwidth=1.0, gap=-0.5)
    with pytest.raises(ValueError):
        MaterialParams(n=4, bandwidth=1.0, gap=0.5, coupling=0.0)


def test_bogoliubov_scalar_identities():
    pt = bogoliubov(0.3, 0.0, 0.5)
    assert math.isclose(pt.u_sq + pt.v_sq, 1.0, rel_tol=1e-15)
    assert math.isclose(pt.quasiparticle_energy, math.hypot(0.3, 0.5), rel_tol=1e-15)
    # u^2 v^2 = gap^2 / 4E^2
    assert math.isclose(pt.u_sq * pt.v_sq,
                        0.5**2 / (4.0 * (0.3**2 + 0.5**2)), rel_tol=1e-13)
    mid = bogoliubov(0.0, 0.0, 1.0)
    assert mid.u_sq == pytest.approx(0.5) and mid.v_sq == pytest.approx(0.5)


def test_bogoliubov_array_and_mu_shift():
    eps = np.array([-1.0, 0.0, 1.0])
    u2, v2, E = bogoliubov(eps, 0.0, 1.0)
    assert np.allclose(u2 + v2, 1.0)
    assert np.allclose(u2[::-1], v2)  # particle-hole symmetry about mu
    # shifting mu shifts the symmetry point
    u2s, v2s, _ = bogoliubov(eps + 0.7, 0.7, 1.0)
    assert np.allclose(u2s, u2) and np.allclose(v2s, v2)
    assert bogoliubov(eps, 0.0, 1.0)[2].shape == (3,)
    with pytest.raises(ValueError):
        bogoliubov(0.1, 0.0, 0.0)


def test_dos_gap_and_normalisation():
    p = MaterialParams.from_gap(n=200, bandwidth=4.0, gap=1.0)
    assert dos(0.5, p) == 0.0
    assert dos(-0.5, p) == 0.0
    # integrate rho over (gap, E_max] with the cosh substitution the
    # docstring recommends; the analytic value is n*b / (2 sqrt(b^2-1)).
    umax = math.acosh(math.hypot(p.bandwidth, p.gap) / p.gap)
    val, err = integrate.quad(
        lambda u: dos(p.gap * math.cosh(u), p) * p.gap * math.sinh(u),
        0.0, umax)
    expect = p.n * p.b / (2.0 * math.sqrt(p.b**2 - 1.0))
    assert math.isclose(val, expect, rel_tol=1e-9)
    arr = dos(np.array([0.1, 2.0, -2.0]), p)
    assert arr[0] == 0.0 and arr[1] == arr[2] > 0.0


def test_dos_needs_band_wider_than_gap():
    p = MaterialParams.from_gap(n=10, bandwidth=1.0, gap=1.0)
    with pytest.raises(ValueError):
        dos(2.0, p)


def test_band_grid_endpoints():
    p = MaterialParams.from_gap(n=5, bandwidth=2.0, gap=0.5)
    g = band_grid(p)
    assert g.shape == (5,)
    assert g[0] == -2.0 and g[-1] == 2.0
    assert np.allclose(np.diff(g), 1.0)
