"""Strict TOML run configuration.

Every section and key is checked against a declared schema; unknown names
are rejected with their dotted path rather than silently ignored, since a
misspelt key would otherwise fall back to a default and quietly change the
physics.
"""

from dataclasses import dataclass, fields

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from .circuit import CircuitSpec
from .core import MaterialParams
from .errors import ConfigError
from .inductor import WireGeometry
from .subspace import Discretization

__all__ = ["RunConfig", "parse_config", "parse_toml"]

# section -> {key: expected type}; float accepts int, bools are not numbers
_SECTION_FIELDS = {
    "material": {
        "n": int, "bandwidth": float, "gap": float, "coupling": float,
        "chemical_potential": float,
    },
    "discretization": {
        "alpha_ratio": float, "dim": int, "phi0": float,
    },
    "overlap": {
        "mode": str, "phi_points": int,
        "alpha_start": float, "alpha_stop": float, "alpha_points": int,
    },
    "island": {
        "mode": str, "phi_points": int,
        "gap_start": float, "gap_stop": float, "gap_points": int,
    },
    "junction": {
        "tunnel_element": float, "electrons_a": float, "electrons_b": float,
        "gap": float, "bandwidth": float, "coulomb_strength": float,
        "e0": float, "e0_start": float, "e0_stop": float, "e0_points": int,
    },
    "circuit": {
        "e_c": float, "e_j": float, "e_l": float, "n_g": float, "dim": int,
        "phi0": float, "phase_window": int, "levels": int,
        "n_g_start": float, "n_g_stop": float, "n_g_points": int,
    },
    "wire": {
        "radius": float, "length": float, "electron_density": float,
        "cutoff_radius": float, "current": float, "segments": int,
        "critical_current": float, "inductance": float,
        "phi_a": float, "phi_b": float,
    },
    "wkb": {
        "preset": str, "barrier_height": float, "barrier_width": float,
        "well_width": float, "effective_mass_ratio": float,
        "fermi_velocity": float, "fudge": float,
        "xi_start": float, "xi_stop": float, "xi_points": int,
        "gap": float, "bandwidth": float, "electrons": float,
    },
    "higgs": {
        "coupling": float, "d_start": float, "d_stop": float, "d_points": int,
    },
}


def _check_value(path: str, value, expected):
    if expected is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{path}: expected a number, got {value!r}")
        return float(value)
    if expected is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{path}: expected an integer, got {value!r}")
        return value
    if not isinstance(value, expected):
        raise ConfigError(
            f"{path}: expected {expected.__name__}, got {value!r}")
    return value


@dataclass(frozen=True)
class RunConfig:
    material: dict = None
    discretization: dict = None
    overlap: dict = None
    island: dict = None
    junction: dict = None
    circuit: dict = None
    wire: dict = None
    wkb: dict = None
    higgs: dict = None

    def section(self, name: str) -> dict:
        value = getattr(self, name)
        if value is None:
            raise ConfigError(f"missing required section [{name}]")
        return value

    def material_params(self) -> MaterialParams:
        m = dict(self.section("material"))
        for key in ("n", "bandwidth"):
            if key not in m:
                raise ConfigError(f"material.{key}: required")
        has_gap, has_coupling = "gap" in m, "coupling" in m
        if has_gap == has_coupling:
            raise ConfigError(
                "material: give exactly one of 'gap' or 'coupling'")
        try:
            if has_gap:
                return MaterialParams.from_gap(
                    n=m["n"], bandwidth=m["bandwidth"], gap=m["gap"],
                    chemical_potential=m.get("chemical_potential", 0.0))
            return MaterialParams.from_coupling(
                n=m["n"], bandwidth=m["bandwidth"], coupling=m["coupling"],
                chemical_potential=m.get("chemical_potential", 0.0))
        except ValueError as exc:
            raise ConfigError(f"material: {exc}") from None

    def discretization_for(self, params: MaterialParams) -> Discretization:
        d = self.section("discretization")
        has_ratio, has_dim = "alpha_ratio" in d, "dim" in d
        if has_ratio == has_dim:
            raise ConfigError(
                "discretization: give exactly one of 'alpha_ratio' or 'dim'")
        try:
            if has_ratio:
                return Discretization.from_alpha(params.n, params.b,
                                                 d["alpha_ratio"])
            return Discretization.from_dim(params.n, params.b, d["dim"])
        except ValueError as exc:
            raise ConfigError(f"discretization: {exc}") from None

    def circuit_spec(self, **overrides) -> CircuitSpec:
        c = dict(self.section("circuit"))
        kwargs = {f.name: c[f.name] for f in fields(CircuitSpec) if f.name in c}
        kwargs.update(overrides)
        for key in ("e_c", "e_j"):
            if key not in kwargs:
                raise ConfigError(f"circuit.{key}: required")
        try:
            return CircuitSpec(**kwargs)
        except ValueError as exc:
            raise ConfigError(f"circuit: {exc}") from None

    def wire_geometry(self) -> WireGeometry:
        w = self.section("wire")
        for key in ("radius", "length", "electron_density"):
            if key not in w:
                raise ConfigError(f"wire.{key}: required")
        try:
            return WireGeometry(radius=w["radius"], length=w["length"],
                                electron_density=w["electron_density"],
                                cutoff_radius=w.get("cutoff_radius"))
        except ValueError as exc:
            raise ConfigError(f"wire: {exc}") from None


def parse_toml(text: str, source: str = "<config>") -> RunConfig:
    try:
        raw = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{source}: {exc}") from None
    sections = {}
    for name, body in raw.items():
        if name not in _SECTION_FIELDS:
            raise ConfigError(f"{source}: unknown section [{name}]")
        if not isinstance(body, dict):
            raise ConfigError(f"{source}: [{name}] must be a table")
        schema = _SECTION_FIELDS[name]
        checked = {}
        for key, value in body.items():
            if key not in schema:
                raise ConfigError(f"{source}: {name}.{key}: unknown key")
            checked[key] = _check_value(f"{name}.{key}", value, schema[key])
        sections[name] = checked
    return RunConfig(**sections)


def parse_config(path: str) -> RunConfig:
    try:
        with open(path, "rb") as fh:
            text = fh.read().decode()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_toml(text, source=path)
