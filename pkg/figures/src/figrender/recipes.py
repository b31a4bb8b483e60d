"""One render function per figure id, all reading validated tables only."""

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import style
from .schema import SCHEMAS, load_table

FIGURE_IDS = tuple(SCHEMAS)

EJ_REFERENCE_EV = 270e-6


@dataclass(frozen=True)
class FigureRecipe:
    csv_path: Path
    figure_id: str
    log_x: bool = False
    log_y: bool = False
    reference_lines: tuple = field(default_factory=tuple)


def _fig3a(ax, t):
    ax.plot(t["phi"], t["abs_W"], label="|W| exact")
    ax.plot(t["phi"], t["abs_W_gauss"], "--", label="|W| Gaussian")
    ax.plot(t["phi"], t["re_W"], ":", label="Re W")
    ax.set_xlabel(r"$\varphi$")
    ax.set_ylabel("overlap")
    ax.legend()


def _fig3b(ax, t):
    ax.plot(t["alpha_ratio"], t["abs_W_exact"], label="exact")
    ax.plot(t["alpha_ratio"], t["abs_W_gauss"], "--", label="Gaussian")
    ax.set_xlabel(r"$\alpha/\alpha_0$")
    ax.set_ylabel(r"$|W(\delta\varphi)|$")
    ax.legend()


def _fig4(ax, t):
    for ratio in np.unique(t["alpha_ratio"]):
        sel = t["alpha_ratio"] == ratio
        line, = ax.plot(t["phi"][sel], t["k_n"][sel],
                        label=rf"$K_n$, $\alpha/\alpha_0$ = {ratio:g}")
        ax.plot(t["phi"][sel], t["k_n_mean"][sel], "--",
                color=line.get_color())
    ax.set_xlabel(r"$\varphi_n$")
    ax.set_ylabel(r"$K_n$ (solid), $\bar K_n$ (dashed)")
    ax.legend()


def _fig5ab(axes, t):
    a, b = axes
    a.plot(t["phi"], t["re_K"], label="Re K")
    a.plot(t["phi"], t["im_K"], "--", label="Im K")
    a.set_xlabel(r"$\varphi$")
    a.set_ylabel(r"$K(\varphi)$")
    a.legend()
    b.plot(t["phi"], t["re_V"], label="Re V")
    b.plot(t["phi"], t["im_V"], "--", label="Im V")
    b.set_xlabel(r"$\varphi$")
    b.set_ylabel(r"$V(\varphi)$")
    b.legend()


def _fig7ab(ax, t):
    bands = [k for k in t if k.startswith("E")]
    phi0_values = sorted(set(t["phi0"]))
    dashes = ["-", "--", ":", "-."]
    for i, p0 in enumerate(phi0_values):
        sel = t["phi0"] == p0
        ls = dashes[i % len(dashes)]
        for m, band in enumerate(bands):
            ax.plot(t["n_g"][sel], t[band][sel], ls,
                    color=f"C{m}",
                    label=rf"$E_{m}$, $\varphi_0$ = {p0:g}")
    ax.set_xlabel(r"$n_g$")
    ax.set_ylabel(r"$E_m$")
    ax.legend(ncols=max(1, len(phi0_values)), fontsize=7)


def _fig9(ax, t):
    ax.plot(t["xi"], t["e_j_ev"], label=r"$E_J(\xi)$")
    ax.axhline(EJ_REFERENCE_EV, color="k", lw=0.9, linestyle="--",
               label=r"270 $\mu$eV measured")
    ax.set_yscale("log")
    ax.set_xlabel(r"$\xi$ (nm)")
    ax.set_ylabel(r"$E_J$ (eV)")
    ax.legend()


def _fig10(ax, t):
    ax.plot(t["d"], t["rescaled_exact"], label="exact")
    ax.plot(t["d"], t["rescaled_model"], "--", label="leading order")
    ax.plot(t["d"], t["quadratic"], ":", label="quadratic")
    ax.set_xlabel(r"$\Delta/\Delta_{\min}$")
    ax.set_ylabel(r"$E/|E_{\min}|$")
    ax.legend()


def _fig11ab(ax, t):
    ax.plot(t["e0_over_delta"], t["numeric"], label="numeric")
    ax.plot(t["e0_over_delta"], t["small_form"], "--", label="small-E0 form")
    ax.plot(t["e0_over_delta"], t["large_form"], ":", label="large-E0 form")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel(r"$E_0/\Delta$")
    ax.set_ylabel(r"$I(E_0)\,\Delta$")
    ax.legend()


_SINGLE = {
    "fig3a": _fig3a,
    "fig3b": _fig3b,
    "fig4": _fig4,
    "fig7ab": _fig7ab,
    "fig9": _fig9,
    "fig10": _fig10,
    "fig11ab": _fig11ab,
}


def render(recipe: FigureRecipe, out_dir) -> Path:
    """Draw one figure to <out_dir>/<figure_id>.svg and return the path.

    The table is validated before any drawing, so a schema failure leaves
    no file behind.
    """
    table = load_table(recipe.figure_id, recipe.csv_path)
    out = Path(out_dir) / f"{recipe.figure_id}.svg"
    if recipe.figure_id == "fig5ab":
        fig, axes = style.new_axes(ncols=2)
        _fig5ab(axes, table)
    else:
        fig, axes = style.new_axes()
        _SINGLE[recipe.figure_id](axes[0], table)
    ax0 = fig.axes[0]
    if recipe.log_x:
        ax0.set_xscale("log")
    if recipe.log_y:
        ax0.set_yscale("log")
    for y in recipe.reference_lines:
        ax0.axhline(y, color="k", lw=0.8)
    style.save(fig, out)
    return out
