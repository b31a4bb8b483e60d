"""CSV schema contracts for each figure id.

A table is accepted only if its header matches the documented schema
column for column; the first offending column is named in the error so a
producer-side drift is caught before anything is drawn.
"""

import csv

import numpy as np


class SchemaError(Exception):
    pass


# fig7ab has a variable number of eigenvalue columns (E0..E{k-1}), handled
# separately in _check_header.
SCHEMAS = {
    "fig3a": ["phi", "re_W", "im_W", "abs_W", "abs_W_gauss"],
    "fig3b": ["alpha_ratio", "abs_W_exact", "abs_W_gauss"],
    "fig4": ["phi", "alpha_ratio", "k_n", "k_n_mean"],
    "fig5ab": ["phi", "re_K", "im_K", "re_V", "im_V"],
    "fig7ab": None,
    "fig9": ["xi", "e_j_ev"],
    "fig10": ["d", "rescaled_exact", "rescaled_model", "quadratic"],
    "fig11ab": ["e0_over_delta", "numeric", "small_form", "large_form"],
}


def _check_header(figure_id, header, path):
    if figure_id == "fig7ab":
        if not header or header[0] != "n_g":
            found = header[0] if header else "(none)"
            raise SchemaError(
                f"{path}: column 1 must be 'n_g', found '{found}'")
        if len(header) < 3 or header[-1] != "phi0":
            found = header[-1] if header else "(none)"
            raise SchemaError(
                f"{path}: last column must be 'phi0', found '{found}'")
        for i, name in enumerate(header[1:-1]):
            if name != f"E{i}":
                raise SchemaError(
                    f"{path}: column {i + 2} must be 'E{i}', found '{name}'")
        return
    want = SCHEMAS[figure_id]
    for i, name in enumerate(want):
        if i >= len(header):
            raise SchemaError(f"{path}: missing column '{name}'")
        if header[i] != name:
            raise SchemaError(
                f"{path}: column {i + 1} must be '{name}', "
                f"found '{header[i]}'")
    if len(header) > len(want):
        raise SchemaError(
            f"{path}: unexpected extra column '{header[len(want)]}'")


def load_table(figure_id, path):
    """Read and validate one CSV; returns {column: float array}."""
    if figure_id not in SCHEMAS:
        raise SchemaError(f"unknown figure id '{figure_id}'")
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise SchemaError(f"{path}: empty file") from None
            rows = list(reader)
    except OSError as exc:
        raise SchemaError(f"{path}: {exc.strerror}") from None
    _check_header(figure_id, header, path)
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    cols = {}
    for i, name in enumerate(header):
        try:
            cols[name] = np.array([float(r[i]) for r in rows])
        except (ValueError, IndexError) as exc:
            raise SchemaError(
                f"{path}: column '{name}' is not numeric ({exc})") from None
    return cols
