import math

import numpy as np
import pytest
from scipy import integrate

from bcsq.constants import flux_quantum, m_e, mu0, q_e
from bcsq.inductor import (WireGeometry, flux_energy_audit, inductances,
                           internal_inductance_density, lumped_chain,
                           supercurrent, wire_fields)


def geometry_with_x(x, length=1e-3, density=1e29):
    lam = math.sqrt(m_e / (mu0 * density * q_e * q_e))
    return WireGeometry(radius=x * lam, length=length,
                        electron_density=density)


def test_geometry_derived_quantities():
    g = WireGeometry(radius=1e-6, length=1e-3, electron_density=1e29)
    lam = math.sqrt(m_e / (mu0 * 1e29 * q_e * q_e))
    assert g.penetration_depth == pytest.approx(lam, rel=1e-14)
    assert g.x == pytest.approx(1e-6 / lam, rel=1e-14)
    assert g.cutoff_radius == pytest.approx(1e-5)
    with pytest.raises(ValueError):
        WireGeometry(radius=-1.0, length=1e-3, electron_density=1e29)
    with pytest.raises(ValueError):
        WireGeometry(radius=1e-6, length=1e-3, electron_density=1e29,
                     cutoff_radius=1e-7)


def test_wire_fields_boundary_and_axis():
    g = geometry_with_x(20.0)
    i = 2e-6
    edge = wire_fields(g.radius, g, i)
    assert edge["H_theta"] == pytest.approx(i / (2.0 * math.pi * g.radius),
                                            rel=1e-14)
    axis = wire_fields(0.0, g, i)
    assert axis["H_theta"] == 0.0
    assert axis["A_int_z"] == 0.0
    assert axis["J_z"] > 0.0
    with pytest.raises(ValueError):
        wire_fields(2.0 * g.radius, g, i)


def test_current_density_integrates_to_total_current():
    g = geometry_with_x(20.0)
    i = 2e-6
    total, err = integrate.quad(
        lambda r: 2.0 * math.pi * r * wire_fields(r, g, i)["J_z"],
        0.0, g.radius, limit=200)
    assert total == pytest.approx(i, rel=1e-8)


def test_current_crowds_to_the_surface():
    g = geometry_with_x(20.0)
    r = np.linspace(0.0, g.radius, 50)
    j = wire_fields(r, g, 1e-6)["J_z"]
    assert np.all(np.diff(j) > 0.0)
    # sheet scale: edge to axis ratio ~ e^x apart from the 1/sqrt factor
    assert j[-1] / j[0] > 1e7


def test_internal_inductance_density_limits():
    thin = geometry_with_x(0.05)
    l_k = mu0 * thin.penetration_depth**2 / (math.pi * thin.radius**2)
    assert internal_inductance_density(thin) == pytest.approx(
        l_k * (1.0 + 0.05**2 / 8.0), rel=1e-6)
    thick = geometry_with_x(20.0)
    l_k20 = mu0 * thick.penetration_depth**2 / (math.pi * thick.radius**2)
    assert abs(internal_inductance_density(thick) / (2.0 * l_k20) - 1.0) < 0.01
    vthick = geometry_with_x(100.0)
    l_k100 = mu0 * vthick.penetration_depth**2 / (math.pi * vthick.radius**2)
    assert abs(internal_inductance_density(vthick) / (2.0 * l_k100) - 1.0) < 1e-3


def test_inductances_breakdown():
    g = geometry_with_x(20.0)
    out = inductances(g)
    assert out.total == pytest.approx(out.kinetic + out.geometric, rel=1e-14)
    kin_dens = m_e / (1e29 * q_e * q_e * 2.0 * math.pi * g.radius
                      * g.penetration_depth)
    assert out.kinetic_density == pytest.approx(kin_dens, rel=1e-12)
    assert out.geometric == pytest.approx(
        mu0 * g.length * math.log(10.0) / (2.0 * math.pi), rel=1e-12)
    with pytest.warns(UserWarning):
        inductances(geometry_with_x(2.0))


def test_flux_and_energy_routes_agree():
    """Internal flux per current against twice the internal energy."""
    g = geometry_with_x(20.0)
    i = 1e-6
    audit = flux_energy_audit(g, i)
    assert audit["energy_ext"] == pytest.approx(0.5 * audit["flux_ext"] * i,
                                                rel=1e-14)
    flux_route = 0.5 * audit["flux_int"] * i
    energy_route = audit["energy_kinetic"] + audit["energy_field_int"]
    assert abs(flux_route / energy_route - 1.0) < 1e-6


def test_lumped_chain_energy_is_segment_count_free():
    e_ref = 0.5 * 3.0 * (2.0 * math.pi) ** 2
    for m in (1, 4, 16):
        out = lumped_chain(m, 0.0, 2.0 * math.pi, 3.0)
        assert out["energy"] == pytest.approx(e_ref, rel=1e-12)
        nodes = np.concatenate([[0.0], out["interior_phases"],
                                [2.0 * math.pi]])
        drops = np.diff(nodes)
        assert np.max(np.abs(drops - drops[0])) < 1e-12


def test_lumped_chain_flux_capacity():
    out = lumped_chain(10, 0.0, 1.0, 1.0, critical_current=1e-6,
                       inductance=1e-7)
    assert out["m_max"] == 15
    assert lumped_chain(2, 0.0, 1.0, 1.0)["m_max"] is None
    with pytest.raises(ValueError):
        lumped_chain(0, 0.0, 1.0, 1.0)


def test_supercurrent_linear_response():
    val = supercurrent(0.0, 2.0 * math.pi, 1e-7)
    assert val == pytest.approx(flux_quantum / 1e-7, rel=1e-14)
    with pytest.raises(ValueError):
        supercurrent(0.0, 1.0, 0.0)
