from .herzog_kuhl import (
    ResolutionShape,
    herzog_kuhl_betti,
    hilbert_series_from_shape,
    hk_multiplicity,
    printed_betti_formula,
    top_cohomology_shape,
    top_multiplicity_formula,
)
from .lefschetz import lefschetz_hilbert, lefschetz_regularity, sub_regularity
from .linear_bounds import BoundKind, LinearBoundReport, linear_bound_fit

__all__ = (
    "ResolutionShape",
    "herzog_kuhl_betti",
    "hilbert_series_from_shape",
    "hk_multiplicity",
    "printed_betti_formula",
    "top_cohomology_shape",
    "top_multiplicity_formula",
    "lefschetz_hilbert",
    "lefschetz_regularity",
    "sub_regularity",
    "BoundKind",
    "LinearBoundReport",
    "linear_bound_fit",
)
