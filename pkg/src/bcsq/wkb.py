"""Tunnel matrix element of an oxide barrier, WKB estimate.

The electron rattles against the barrier at f = v_F / (2 l_w) and leaks
through with the usual exponential amplitude; t = h f T converts that rate
into an energy. A fudge factor on the barrier action absorbs what the
square-barrier caricature misses, and sweeping it maps out plausible E_J.
"""

from dataclasses import dataclass
import math

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib
from importlib import resources

import numpy as np

from .constants import ev_j, flux_quantum, h_ev_s, hbar, m_e
from .junction import JunctionParams, josephson_energy

__all__ = [
    "WkbParams",
    "tunnel_element",
    "ej_vs_xi",
    "field_phase_shift",
    "load_preset",
]


@dataclass(frozen=True)
class WkbParams:
    barrier_height: float        # eV
    barrier_width: float         # m
    well_width: float            # m
    effective_mass_ratio: float
    fermi_velocity: float        # m/s
    fudge: float = 1.0

    def __post_init__(self):
        for name in ("barrier_height", "barrier_width", "well_width",
                     "effective_mass_ratio", "fermi_velocity", "fudge"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")


def tunnel_element(params: WkbParams) -> dict:
    """Attempt frequency, barrier amplitude, and the element t in eV.

    amplitude = exp(-2 xi l_b sqrt(2 m* U0) / hbar) with the fudge xi
    scaling the action; t = h f * amplitude.
    """
    f = params.fermi_velocity / (2.0 * params.well_width)
    m_eff = params.effective_mass_ratio * m_e
    u0 = params.barrier_height * ev_j
    action = 2.0 * params.fudge * params.barrier_width * math.sqrt(2.0 * m_eff * u0) / hbar
    amp = math.exp(-action)
    return {"attempt_freq": f, "amplitude": amp, "t": h_ev_s * f * amp}


def ej_vs_xi(params: WkbParams, junction: JunctionParams, xi_range,
             steps: int) -> np.ndarray:
    """Josephson coupling over a sweep of the action fudge factor.

    Returns a (steps, 2) table of (xi, E_J in eV). The junction record
    supplies electron counts, gap, and bandwidth; its tunnel element is
    recomputed from the barrier at every xi.
    """
    if steps < 2:
        raise ValueError(f"steps must be >= 2, got {steps}")
    lo, hi = float(xi_range[0]), float(xi_range[1])
    xi_values = np.linspace(lo, hi, steps)
    out = np.empty((steps, 2))
    for i, xi in enumerate(xi_values):
        p = WkbParams(barrier_height=params.barrier_height,
                      barrier_width=params.barrier_width,
                      well_width=params.well_width,
                      effective_mass_ratio=params.effective_mass_ratio,
                      fermi_velocity=params.fermi_velocity,
                      fudge=float(xi))
        t = tunnel_element(p)["t"]
        jp = JunctionParams(tunnel_element=t,
                            electrons_a=junction.electrons_a,
                            electrons_b=junction.electrons_b,
                            gap=junction.gap,
                            bandwidth=junction.bandwidth,
                            coulomb_strength=junction.coulomb_strength,
                            e0=junction.e0)
        out[i] = (xi, josephson_energy(jp))
    return out


def field_phase_shift(t: float, flux_bias: float, l_b: float, l_w: float) -> complex:
    """Tunnel element phase picked up from flux threading the barrier.

    t -> t exp(i Phi_b l_b / (2 l_w Phi0)): the barrier is thinner than
    the well by l_b/l_w and only half the loop area contributes.
    """
    if l_w <= 0.0:
        raise ValueError(f"well width must be positive, got {l_w}")
    phase = (flux_bias / flux_quantum) * l_b / (2.0 * l_w)
    return t * complex(math.cos(phase), math.sin(phase))


def load_preset(name: str = "aluminium") -> dict:
    """Packaged material preset: WkbParams plus the junction-side numbers.

    electrons is derived from the geometry, 4 l_w A_J / a^3 with a the
    unit cell: the states within the energy window that reach the barrier.
    """
    path = resources.files("bcsq").joinpath("presets", f"{name}.toml")
    try:
        raw = path.read_bytes()
    except FileNotFoundError:
        raise ValueError(f"unknown preset {name!r}") from None
    data = tomllib.loads(raw.decode())
    w = data["wkb"]
    j = data["junction"]
    params = WkbParams(**w)
    electrons = 4.0 * params.well_width * j["junction_area"] / j["unit_cell"] ** 3
    return {
        "params": params,
        "gap": j["gap"],
        "bandwidth": j["bandwidth"],
        "junction_area": j["junction_area"],
        "unit_cell": j["unit_cell"],
        "electrons": electrons,
    }
