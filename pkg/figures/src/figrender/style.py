"""Shared matplotlib setup: deterministic vector output, one look."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

plt.rcParams.update({
    "figure.figsize": (5.2, 3.6),
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "lines.linewidth": 1.3,
    "legend.frameon": False,
    # fixed salt so SVG clip-path ids do not change between runs
    "svg.hashsalt": "figrender",
})


def new_axes(ncols=1):
    fig, axes = plt.subplots(1, ncols, figsize=(5.2 * ncols, 3.6),
                             squeeze=False)
    return fig, axes[0]


def save(fig, path):
    # Date metadata suppressed so identical input gives identical bytes.
    fig.savefig(path, format="svg", metadata={"Date": None},
                bbox_inches="tight")
    plt.close(fig)
