"""Circuit quantisation built from microscopic pairing ground states.

The package goes from a flat-band pairing model (core) through the
overlap structure of fixed-phase ground states (subspace, operators) to
junction and circuit energetics (island, junction, circuit) and the
electromagnetic side of the story (inductor, wkb, higgs).
"""

from .core import (MaterialParams, band_grid, bogoliubov, coupling_from_gap,
                   dos, gap_from_coupling)
from .errors import ConfigError, NumericalError
from .subspace import (Discretization, OverlapMatrix, ProjectionReport,
                       SubspaceSpectrum, circulant_spectrum,
                       completeness_and_projection, discretize, formula_deff,
                       formula_deff1, orthonormalize, overlap_exact,
                       overlap_gaussian)

__all__ = [
    "MaterialParams",
    "band_grid",
    "bogoliubov",
    "coupling_from_gap",
    "dos",
    "gap_from_coupling",
    "ConfigError",
    "NumericalError",
    "Discretization",
    "OverlapMatrix",
    "ProjectionReport",
    "SubspaceSpectrum",
    "circulant_spectrum",
    "completeness_and_projection",
    "discretize",
    "formula_deff",
    "formula_deff1",
    "orthonormalize",
    "overlap_exact",
    "overlap_gaussian",
]

__version__ = "0.1.0"
