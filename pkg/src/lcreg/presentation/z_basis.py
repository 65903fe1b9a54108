from dataclasses import dataclass
from functools import cached_property, lru_cache

from lcreg.algebra import monomials
from lcreg.algebra.monomials import Monomial
from lcreg.errors import ParameterError


@dataclass(frozen=True)
class ZBasis:
    """All z-monomials of one degree, lexicographically descending (z1 > ... > zn).

    Attributes:
        degree (int): Common degree of the monomials.
        n (int): Number of z-variables.
        monomials (tuple[Monomial, ...]): The basis, in order.
    """

    degree: int
    n: int
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, position: int) -> Monomial:
        return self.monomials[position]

    @cached_property
    def _positions(self) -> dict[Monomial, int]:
        return {mono: i for i, mono in enumerate(self.monomials)}

    def index(self, mono: Monomial) -> int:
        return self._positions[tuple(mono)]

    def __contains__(self, mono: object) -> bool:
        return mono in self._positions

    def labels(self) -> list[str]:
        return [monomials.format_monomial(mono, "z") for mono in self.monomials]


@lru_cache(maxsize=None)
def z_basis(d: int, n: int) -> ZBasis:
    """Enumerates B_d, the z-monomials of degree `d` in `n` variables.

    Examples:
        >>> z_basis(2, 2).labels()
        ['z1^2', 'z1*z2', 'z2^2']
        >>> z_basis(0, 3).labels()
        ['1']
        >>> len(z_basis(1, 3))
        3
    """
    if d < 0:
        raise ParameterError(f"basis degree must be nonnegative, got {d}")
    if n < 1:
        raise ParameterError(f"need at least one z-variable, got n={n}")

    return ZBasis(degree=d, n=n, monomials=monomials.monomials_of_degree(d, n))
