from .components import (
    CohomologyReport,
    SliceDimensions,
    cohomology_report,
    first_nonzero_sub_degree,
    sub_component_dimension,
    sub_hilbert,
    top_component_dimension,
    top_hilbert,
)
from .hilbert import HilbertFunction

__all__ = (
    "CohomologyReport",
    "SliceDimensions",
    "cohomology_report",
    "first_nonzero_sub_degree",
    "sub_component_dimension",
    "sub_hilbert",
    "top_component_dimension",
    "top_hilbert",
    "HilbertFunction",
)
