"""Command line front end.

Every subcommand reads a strict TOML config, computes, and writes one CSV
(or JSON) file. Exit codes: 0 success, 1 bad configuration or invalid
parameters, 2 a numerical routine failed its own convergence or
definiteness check. Column layouts are documented in docs/schemas.md.
"""

import argparse
from importlib import resources
import math
import os
import sys

import numpy as np

from .circuit import build_lcj, ng_sweep, spectrum
from .config import RunConfig, parse_config, parse_toml
from .constants import flux_quantum
from .core import MaterialParams
from .errors import ConfigError, NumericalError
from .higgs import oscillator, quadratic_approx, rescaled_energy, rescaled_exact
from .inductor import (flux_energy_audit, inductances,
                       internal_inductance_density, lumped_chain, supercurrent)
from .island import gap_minimum, island_energy, kv_matrix_elements
from .junction import JunctionParams, josephson_integral
from .operators import build_operators, commutator, commutator_closed_form
from .output import parallel_map, write_rows
from .subspace import (circulant_spectrum, completeness_and_projection,
                       discretize, formula_deff, formula_deff1,
                       overlap_exact, overlap_gaussian)
from .wkb import WkbParams, ej_vs_xi, load_preset

# figure file -> (subcommand handler key, packaged default config)
FIGURE_COMMANDS = {
    "fig3a": "overlap",
    "fig3b": "overlap",
    "fig4": "proj-error",
    "fig5ab": "island-energy",
    "fig7ab": "transmon",
    "fig9": "wkb-ej",
    "fig10": "higgs",
    "fig11ab": "josephson-integral",
}


def _figure_config(fig_id: str) -> RunConfig:
    path = resources.files("bcsq").joinpath("presets", "figures", f"{fig_id}.toml")
    return parse_toml(path.read_bytes().decode(), source=f"preset {fig_id}")


def cmd_overlap(cfg: RunConfig, jobs: int):
    params = cfg.material_params()
    o = cfg.section("overlap")
    mode = o.get("mode", "phi")
    if mode == "phi":
        phi = np.linspace(-math.pi, math.pi, o.get("phi_points", 401))
        w = overlap_exact(phi, params)
        wg = overlap_gaussian(phi, params.n, params.b)
        header = ["phi", "re_W", "im_W", "abs_W", "abs_W_gauss"]
        rows = [(float(p), float(x.real), float(x.imag), float(abs(x)), float(abs(g)))
                for p, x, g in zip(phi, w, wg)]
        return header, rows
    if mode == "alpha":
        alpha0 = math.sqrt(2.0 * params.b) / math.pi
        ratios = np.linspace(o.get("alpha_start", 0.1), o.get("alpha_stop", 3.0),
                             o.get("alpha_points", 121))
        # |W| at the grid spacing each alpha implies
        dphi = 2.0 * math.pi * ratios * alpha0 / math.sqrt(params.n)
        w = overlap_exact(dphi, params)
        wg = overlap_gaussian(dphi, params.n, params.b)
        header = ["alpha_ratio", "abs_W_exact", "abs_W_gauss"]
        rows = [(float(r), float(abs(x)), float(abs(g)))
                for r, x, g in zip(ratios, w, wg)]
        return header, rows
    raise ConfigError(f"overlap.mode: expected 'phi' or 'alpha', got {mode!r}")


def cmd_subspace(cfg: RunConfig, jobs: int):
    params = cfg.material_params()
    disc = cfg.discretization_for(params)
    spec = circulant_spectrum(disc, params)
    header = ["k", "eigenvalue", "significance", "model_eigenvalue", "d_eff"]
    rows = [(int(k), float(spec.eigenvalues[k]), float(spec.significances[k]),
             float(spec.model_eigenvalues[k]), spec.d_eff)
            for k in range(disc.dim)]
    print(f"d_eff = {spec.d_eff:.6f}  "
          f"(estimates {formula_deff1(params.n, params.b):.4f} / "
          f"{formula_deff(params.n, params.b):.4f})")
    return header, rows


def cmd_proj_error(cfg: RunConfig, jobs: int):
    params = cfg.material_params()
    o = cfg.section("overlap")
    ratios = np.linspace(o.get("alpha_start", 1.0), o.get("alpha_stop", 2.0),
                         o.get("alpha_points", 2))
    phi = np.linspace(-math.pi, math.pi, o.get("phi_points", 201))

    def one(ratio):
        disc = discretize(params, float(ratio))
        rep = completeness_and_projection(disc, params, phi)
        return rep

    reports = parallel_map(one, ratios, jobs)
    header = ["phi", "alpha_ratio", "k_n", "k_n_mean"]
    rows = []
    for ratio, rep in zip(ratios, reports):
        for i, p in enumerate(phi):
            rows.append((float(p), float(ratio), float(rep.k_n[i]),
                         float(rep.k_n_mean[i])))
    return header, rows


def cmd_operators(cfg: RunConfig, jobs: int):
    params = cfg.material_params()
    disc = cfg.discretization_for(params)
    d = cfg.section("discretization")
    ops = build_operators(disc, params.n, d.get("phi0", -math.pi))
    rep = commutator(ops)
    closed = commutator_closed_form(ops)
    residual = float(np.max(np.abs(rep.matrix - closed)))
    print(f"trace = {rep.trace:.3e}, closed-form residual = {residual:.3e}")
    r = ops.dim // 2
    labels = ops.labels
    header = ["m", "re_comm", "im_comm", "dev_canonical"]
    rows = []
    for l in range(ops.dim):
        m = int(labels[l] - labels[r])
        c = rep.matrix[r, l]
        canonical = 1j * np.exp(1j * ops.phi0 * (labels[r] - labels[l]))
        dev = abs(c - canonical) if m != 0 else abs(c)
        rows.append((m, float(c.real), float(c.imag), float(dev)))
    return header, rows


def cmd_island_energy(cfg: RunConfig, jobs: int):
    params = cfg.material_params()
    isl = cfg.section("island")
    mode = isl.get("mode", "kv")
    if mode == "kv":
        phi = np.linspace(-math.pi, math.pi, isl.get("phi_points", 201))
        vals = parallel_map(lambda p: kv_matrix_elements(float(p), params),
                            phi, jobs)
        header = ["phi", "re_K", "im_K", "re_V", "im_V"]
        rows = [(float(p), float(v["K"].real), float(v["K"].imag),
                 float(v["V"].real), float(v["V"].imag))
                for p, v in zip(phi, vals)]
        return header, rows
    if mode == "gap":
        for key in ("gap_start", "gap_stop"):
            if key not in isl:
                raise ConfigError(f"island.{key}: required in gap mode")
        gaps = np.linspace(isl["gap_start"], isl["gap_stop"],
                           isl.get("gap_points", 60))
        header = ["gap", "energy_exact", "energy_approx"]
        rows = []
        for g in gaps:
            e = island_energy(float(g), params)
            rows.append((float(g), e.energy_exact, e.energy_approx))
        m = gap_minimum(params)
        print(f"minimum: gap = {m['gap_numeric']:.6g} "
              f"(closed form {m['gap_formula']:.6g}), "
              f"energy = {m['energy_numeric']:.6g} "
              f"(closed form {m['energy_formula']:.6g})")
        return header, rows
    raise ConfigError(f"island.mode: expected 'kv' or 'gap', got {mode!r}")


def cmd_josephson(cfg: RunConfig, jobs: int):
    j = cfg.section("junction")
    gap = j.get("gap", 1.0)
    e0s = np.geomspace(j.get("e0_start", 0.01), j.get("e0_stop", 200.0),
                       j.get("e0_points", 33))
    vals = parallel_map(lambda e0: josephson_integral(float(e0) * gap, gap),
                        e0s, jobs)
    header = ["e0_over_delta", "numeric", "small_form", "large_form"]
    rows = [(float(e0), v["numeric"], v["small_e0"], v["large_e0"])
            for e0, v in zip(e0s, vals)]
    return header, rows


def cmd_transmon(cfg: RunConfig, jobs: int):
    c = cfg.section("circuit")
    lo = c.get("n_g_start", 0.0)
    hi = c.get("n_g_stop", 2.0)
    steps = c.get("n_g_points", 81)
    k = c.get("levels", 4)
    header = ["n_g"] + [f"E{i}" for i in range(k)] + ["phi0"]
    rows = []
    for phi0 in (0.0, math.pi):
        spec = cfg.circuit_spec(phi0=phi0)
        sweep = ng_sweep(spec, lo, hi, steps, k=k, jobs=jobs)
        for i, ng in enumerate(sweep.n_g_values):
            rows.append((float(ng), *[float(x) for x in sweep.levels[i]], phi0))
    return header, rows


def cmd_lcj(cfg: RunConfig, jobs: int):
    c = cfg.section("circuit")
    base = cfg.circuit_spec()
    k = c.get("levels", 6)

    def one(m):
        spec = cfg.circuit_spec(phase_window=int(m))
        return spectrum(build_lcj(spec), k)

    windows = range(1, base.phase_window + 1)
    all_levels = parallel_map(one, windows, jobs)
    header = ["phase_window", "level", "energy"]
    rows = []
    for m, levels in zip(windows, all_levels):
        for i, e in enumerate(levels):
            rows.append((int(m), int(i), float(e)))
    return header, rows


def cmd_inductor(cfg: RunConfig, jobs: int):
    geom = cfg.wire_geometry()
    w = cfg.section("wire")
    current = w.get("current", 1e-6)
    br = inductances(geom)
    audit = flux_energy_audit(geom, current)
    rows = [
        ("x", geom.x),
        ("penetration_depth", geom.penetration_depth),
        ("kinetic_density", br.kinetic_density),
        ("geometric_density", br.geometric_density),
        ("kinetic", br.kinetic),
        ("geometric", br.geometric),
        ("total", br.total),
        ("internal_density_exact", internal_inductance_density(geom)),
    ]
    rows += [(key, float(audit[key])) for key in
             ("flux_int", "flux_ext", "energy_ext", "energy_kinetic",
              "energy_field_int")]
    if "inductance" in w:
        phi_a = w.get("phi_a", 0.0)
        phi_b = w.get("phi_b", 2.0 * math.pi)
        e_l = (flux_quantum / (2.0 * math.pi)) ** 2 / w["inductance"]
        chain = lumped_chain(w.get("segments", 10), phi_a, phi_b, e_l,
                             critical_current=w.get("critical_current"),
                             inductance=w["inductance"])
        rows.append(("chain_energy", chain["energy"]))
        if chain["m_max"] is not None:
            rows.append(("m_max", chain["m_max"]))
        rows.append(("supercurrent", supercurrent(phi_a, phi_b, w["inductance"])))
    return ["quantity", "value"], rows


def cmd_wkb_ej(cfg: RunConfig, jobs: int):
    w = dict(cfg.section("wkb"))
    if "preset" in w:
        data = load_preset(w["preset"])
        base = data["params"]
        params = WkbParams(
            barrier_height=w.get("barrier_height", base.barrier_height),
            barrier_width=w.get("barrier_width", base.barrier_width),
            well_width=w.get("well_width", base.well_width),
            effective_mass_ratio=w.get("effective_mass_ratio",
                                       base.effective_mass_ratio),
            fermi_velocity=w.get("fermi_velocity", base.fermi_velocity),
            fudge=w.get("fudge", base.fudge))
        gap = w.get("gap", data["gap"])
        bandwidth = w.get("bandwidth", data["bandwidth"])
        electrons = w.get("electrons", data["electrons"])
    else:
        try:
            params = WkbParams(
                barrier_height=w["barrier_height"],
                barrier_width=w["barrier_width"],
                well_width=w["well_width"],
                effective_mass_ratio=w["effective_mass_ratio"],
                fermi_velocity=w["fermi_velocity"],
                fudge=w.get("fudge", 1.0))
            gap, bandwidth, electrons = w["gap"], w["bandwidth"], w["electrons"]
        except KeyError as exc:
            raise ConfigError(f"wkb.{exc.args[0]}: required without a preset") from None
    junction = JunctionParams(tunnel_element=0.0, electrons_a=electrons,
                              electrons_b=electrons, gap=gap,
                              bandwidth=bandwidth, coulomb_strength=0.0,
                              e0=0.0)
    table = ej_vs_xi(params, junction,
                     (w.get("xi_start", 1.0), w.get("xi_stop", 2.0)),
                     w.get("xi_points", 101))
    header = ["xi", "e_j_ev"]
    return header, [(float(x), float(e)) for x, e in table]


def cmd_higgs(cfg: RunConfig, jobs: int):
    h = cfg.section("higgs")
    if cfg.material is not None:
        params = cfg.material_params()
    else:
        params = MaterialParams.from_coupling(
            n=1000, bandwidth=1.0, coupling=h["coupling"])
    coupling = h.get("coupling", params.coupling)
    d = np.linspace(h.get("d_start", 0.2), h.get("d_stop", 2.0),
                    h.get("d_points", 181))
    exact = rescaled_exact(d, params)
    model = rescaled_energy(d, coupling)
    quad = quadratic_approx(d, coupling)
    osc = oscillator(params)
    print(f"oscillator: mass = {osc.effective_mass:.4g}, "
          f"frequency = {osc.frequency:.4g}, "
          f"bound states = {osc.bound_states:.4g}")
    header = ["d", "rescaled_exact", "rescaled_model", "quadratic"]
    rows = [(float(x), float(a), float(b), float(q))
            for x, a, b, q in zip(d, exact, model, quad)]
    return header, rows


_HANDLERS = {
    "overlap": cmd_overlap,
    "subspace": cmd_subspace,
    "proj-error": cmd_proj_error,
    "operators": cmd_operators,
    "island-energy": cmd_island_energy,
    "josephson-integral": cmd_josephson,
    "transmon": cmd_transmon,
    "lcj": cmd_lcj,
    "inductor": cmd_inductor,
    "wkb-ej": cmd_wkb_ej,
    "higgs": cmd_higgs,
}


def _add_common(p, config_required=True):
    p.add_argument("--config", required=config_required,
                   help="TOML run configuration")
    p.add_argument("--out", required=True, help="output file (or directory)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker threads for sweeps")
    p.add_argument("--seed", type=int, default=None,
                   help="accepted for interface stability; every kernel "
                        "here is deterministic so it has no effect")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcsq",
        description="Circuit quantisation from microscopic pairing: "
                    "overlaps, subspaces, junction and wire energetics.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _HANDLERS:
        p = sub.add_parser(name)
        _add_common(p)
    p = sub.add_parser("all-figures",
                       help="write every figure CSV with packaged configs")
    _add_common(p, config_required=False)
    return parser


def run(args) -> int:
    fmt = args.format
    if args.command == "all-figures":
        if args.config is not None:
            raise ConfigError(
                "all-figures runs from packaged per-figure configs; "
                "--config is not accepted")
        out_dir = args.out
        os.makedirs(out_dir, exist_ok=True)
        for fig_id, command in FIGURE_COMMANDS.items():
            cfg = _figure_config(fig_id)
            header, rows = _HANDLERS[command](cfg, args.jobs)
            write_rows(os.path.join(out_dir, f"{fig_id}.{fmt}"),
                       header, rows, fmt)
        return 0
    cfg = parse_config(args.config)
    header, rows = _HANDLERS[args.command](cfg, args.jobs)
    write_rows(args.out, header, rows, fmt)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
