from .elimination import blocks, echelon, kernel_basis, nullity, rank, rank_profile
from .matrix import ScalarMatrix

__all__ = (
    "blocks",
    "echelon",
    "kernel_basis",
    "nullity",
    "rank",
    "rank_profile",
    "ScalarMatrix",
)
