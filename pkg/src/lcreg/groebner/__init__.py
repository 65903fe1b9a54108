from .ideal import (
    IdealGB,
    contains,
    ideal_equal,
    ideal_gb,
    is_m_primary,
    krull_dimension,
    normal_form,
    quotient_hilbert,
)
from .module import IdealDecomposition, ModuleGB, initial_decomposition, module_gb
from .orders import ModuleOrder, TermOrder, TermOrderKind

__all__ = (
    "IdealGB",
    "contains",
    "ideal_equal",
    "ideal_gb",
    "is_m_primary",
    "krull_dimension",
    "normal_form",
    "quotient_hilbert",
    "IdealDecomposition",
    "ModuleGB",
    "initial_decomposition",
    "module_gb",
    "ModuleOrder",
    "TermOrder",
    "TermOrderKind",
)
