import numpy as np
import pytest
from scipy import special

from bcsq.bessel import bessel_i0, bessel_i1, bessel_i2


def test_i0_i1_against_scipy():
    x = np.geomspace(1e-3, 300.0, 400)
    assert np.max(np.abs(bessel_i0(x) / special.iv(0, x) - 1.0)) < 1e-13
    assert np.max(np.abs(bessel_i1(x) / special.iv(1, x) - 1.0)) < 1e-13


def test_i2_against_scipy():
    # the downward recurrence cancels near zero; the tolerance reflects it
    x = np.geomspace(1e-2, 300.0, 400)
    assert np.max(np.abs(bessel_i2(x) / special.iv(2, x) - 1.0)) < 5e-10


def test_routes_join_smoothly_at_crossover():
    # I_nu' ~ I_nu here, so the values differ by ~2e-9 relative across the
    # probe gap itself; anything beyond that would be a route mismatch
    for f in (bessel_i0, bessel_i1, bessel_i2):
        assert f(30.0 - 1e-9) == pytest.approx(f(30.0 + 1e-9), rel=1e-8)


def test_small_argument_leading_terms():
    assert bessel_i0(0.0) == 1.0
    assert bessel_i1(0.0) == 0.0
    assert bessel_i1(1e-4) == pytest.approx(5e-5, rel=1e-8)
    assert bessel_i2(1e-3) == pytest.approx(1.25e-7, rel=1e-5)


def test_derivative_recurrence():
    # I0' = I1 against a central difference
    h = 1e-6
    for x in (0.5, 3.0, 12.0, 40.0):
        fd = (bessel_i0(x + h) - bessel_i0(x - h)) / (2.0 * h)
        assert fd == pytest.approx(bessel_i1(x), rel=1e-8)


def test_scalar_and_array_shapes():
    assert isinstance(bessel_i0(1.0), float)
    out = bessel_i1(np.array([0.5, 1.5]))
    assert out.shape == (2,)
    with pytest.raises(ValueError):
        bessel_i0(-1.0)
