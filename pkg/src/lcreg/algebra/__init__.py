from .bipoly import (
    BiPoly,
    bipoly_power,
    coefficient_ideal,
    format_bipoly,
    generic_form,
    lambda_form,
    swap_roles,
    y_coefficients,
)
from .field import FieldKind, FieldSpec, Scalar
from .parser import parse_bipoly, parse_poly
from .poly import Poly, format_poly

__all__ = (
    "BiPoly",
    "bipoly_power",
    "coefficient_ideal",
    "format_bipoly",
    "generic_form",
    "lambda_form",
    "swap_roles",
    "y_coefficients",
    "FieldKind",
    "FieldSpec",
    "Scalar",
    "parse_bipoly",
    "parse_poly",
    "Poly",
    "format_poly",
)
