"""Render figures from the quantisation CLI's CSV tables.

This package only reads CSV files; it never recomputes physics and never
imports the computational package.
"""

from .schema import SchemaError, load_table
from .recipes import FIGURE_IDS, FigureRecipe, render

__all__ = ["SchemaError", "load_table", "FIGURE_IDS", "FigureRecipe", "render"]
