from .presentation import (
    ComponentMatrix,
    Presentation,
    build_presentation,
    column_images,
    component_matrix,
    presentation_from_dict,
    presentation_to_dict,
)
from .z_basis import ZBasis, z_basis

__all__ = (
    "ComponentMatrix",
    "Presentation",
    "build_presentation",
    "column_images",
    "component_matrix",
    "presentation_from_dict",
    "presentation_to_dict",
    "ZBasis",
    "z_basis",
)
