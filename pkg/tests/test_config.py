import json
import math
import os

import pytest

from bcsq.config import parse_config, parse_toml
from bcsq.errors import ConfigError
from bcsq.output import format_value, parallel_map, write_rows

GOOD = """
[material]
n = 1000
bandwidth = 10.0
gap = 1.0

[discretization]
alpha_ratio = 2.0
"""


def test_parse_toml_round_trip():
    cfg = parse_toml(GOOD)
    p = cfg.material_params()
    assert p.n == 1000 and p.b == 10.0
    d = cfg.discretization_for(p)
    assert d.alpha == pytest.approx(2.0 * d.alpha0)


def test_unknown_section_and_key_are_rejected_with_paths():
    with pytest.raises(ConfigError) as err:
        parse_toml("[materiel]\nn = 4\n")
    assert "materiel" in str(err.value)
    with pytest.raises(ConfigError) as err:
        parse_toml("[material]\nn = 4\nbandwith = 1.0\n")
    assert "material.bandwith" in str(err.value)


def test_type_checks():
    with pytest.raises(ConfigError) as err:
        parse_toml("[material]\nn = 1000\nbandwidth = true\ngap = 1.0\n")
    assert "material.bandwidth" in str(err.value)
    with pytest.raises(ConfigError):
        parse_toml("[material]\nn = 2.5\nbandwidth = 1.0\ngap = 0.1\n")
    # ints are fine where floats are expected
    cfg = parse_toml("[material]\nn = 100\nbandwidth = 10\ngap = 1\n")
    assert cfg.material_params().bandwidth == 10.0


def test_gap_and_coupling_are_exclusive():
    with pytest.raises(ConfigError):
        parse_toml("[material]\nn = 10\nbandwidth = 1.0\n").material_params()
    both = ("[material]\nn = 10\nbandwidth = 1.0\ngap = 0.1\n"
            "coupling = 0.25\n")
    with pytest.raises(ConfigError):
        parse_toml(both).material_params()
    by_coupling = parse_toml(
        "[material]\nn = 10\nbandwidth = 1.0\ncoupling = 0.25\n")
    assert by_coupling.material_params().gap == pytest.approx(
        2.0 * math.exp(-4.0))


def test_discretization_needs_exactly_one_of_ratio_and_dim():
    base = "[material]\nn = 100\nbandwidth = 10.0\ngap = 1.0\n"
    cfg = parse_toml(base + "[discretization]\ndim = 16\n")
    p = cfg.material_params()
    assert cfg.discretization_for(p).dim == 16
    with pytest.raises(ConfigError):
        parse_toml(base + "[discretization]\nalpha_ratio = 1.0\ndim = 16\n"
                   ).discretization_for(p)


def test_circuit_spec_overrides():
    cfg = parse_toml("[circuit]\ne_c = 1.0\ne_j = 50.0\ndim = 41\n")
    spec = cfg.circuit_spec(n_g=0.5)
    assert spec.e_j == 50.0 and spec.n_g == 0.5 and spec.dim == 41


def test_parse_config_missing_file():
    with pytest.raises(ConfigError):
        parse_config("/nonexistent/run.toml")


def test_format_value_contract():
    assert format_value(3) == "3"
    assert format_value("phi") == "phi"
    assert format_value(math.pi) == "3.14159265359e+00"
    assert format_value(-1.5e-300) == "-1.50000000000e-300"
    with pytest.raises(TypeError):
        format_value(True)


def test_write_rows_csv_bytes(tmp_path):
    path = tmp_path / "out.csv"
    write_rows(str(path), ["a", "b"], [[1.0, 2], [0.5, 3]], "csv")
    data = path.read_bytes()
    assert data == (b"a,b\n"
                    b"1.00000000000e+00,2\n"
                    b"5.00000000000e-01,3\n")
    # atomic write leaves no temporaries behind
    assert os.listdir(tmp_path) == ["out.csv"]


def test_write_rows_json(tmp_path):
    path = tmp_path / "out.json"
    write_rows(str(path), ["a", "b"], [[1.0, "x"]], "json")
    doc = json.loads(path.read_text())
    assert doc[0] == {"a": 1.0, "b": "x"}
    with pytest.raises(ValueError):
        write_rows(str(path), ["a"], [[1.0]], "yaml")


def test_parallel_map_is_order_preserving():
    items = list(range(40))
    out = parallel_map(lambda v: v * v, items, jobs=4)
    assert out == [v * v for v in items]
    assert parallel_map(lambda v: -v, items, jobs=1) == [-v for v in items]
