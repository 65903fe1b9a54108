"""Ideals of P_0 = K[x_1..x_m] through reduced Gröbner bases."""

import logging
from dataclasses import dataclass
from itertools import combinations

from lcreg.algebra import monomials
from lcreg.algebra.field import FieldSpec
from lcreg.algebra.monomials import Monomial
from lcreg.algebra.poly import Poly, format_poly
from lcreg.cohomology.hilbert import HilbertFunction
from lcreg.errors import FieldError
from lcreg.groebner.buchberger import ModuleVector, buchberger, reduce_vector
from lcreg.groebner.orders import ModuleOrder, TermOrder

logger = logging.getLogger(__name__)

DEFAULT_CAP = 60


@dataclass(frozen=True)
class IdealGB:
    """An ideal with its reduced Gröbner basis.

    Attributes:
        field (FieldSpec): Coefficient field.
        nvars (int): Number of x-variables.
        generators (tuple[Poly, ...]): Generators as given.
        basis (tuple[Poly, ...]): Reduced, monic basis, leading terms descending.
        order (TermOrder): Order the basis is reduced for.
    """

    field: FieldSpec
    nvars: int
    generators: tuple[Poly, ...]
    basis: tuple[Poly, ...]
    order: TermOrder = TermOrder()

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [poly.leading_monomial(self.order) for poly in self.basis]

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_unit(self) -> bool:
        return any(sum(mono) == 0 for mono in self.leading_monomials)

    def labels(self) -> list[str]:
        return [format_poly(poly) for poly in self.basis]

    def __str__(self) -> str:
        return "(" + ", ".join(self.labels()) + ")" if self.basis else "(0)"


def ideal_gb(
    gens: list[Poly],
    order: TermOrder | None = None,
    field: FieldSpec | None = None,
    nvars: int | None = None,
) -> IdealGB:
    """Computes the reduced Gröbner basis of the ideal spanned by `gens`.

    `field` and `nvars` are only needed when `gens` is empty.

    Examples:
        >>> from lcreg.algebra.parser import parse_poly
        >>> qq = FieldSpec.rationals()
        >>> ideal_gb([parse_poly("x1 + x2", 2, qq), parse_poly("x1 - x2", 2, qq)]).labels()
        ['x1', 'x2']
        >>> ideal_gb([parse_poly("x2", 2, qq), parse_poly("x1^2", 2, qq)]).labels()
        ['x1^2', 'x2']
    """
    order = order or TermOrder()
    gens = list(gens)
    if gens:
        field, nvars = gens[0].field, gens[0].nvars
        if any(g.field != field or g.nvars != nvars for g in gens):
            raise FieldError("generators live in different rings")
    elif field is None or nvars is None:
        raise ValueError("an empty generator list needs field and nvars")

    module_order = ModuleOrder(order)
    vectors = buchberger(
        (ModuleVector.from_poly(g) for g in gens if not g.is_zero()),
        module_order,
        rank_one=True,
    )
    basis = tuple(vector.coordinate(0) for vector in vectors)

    logger.debug("ideal of %d generators has a basis of %d elements", len(gens), len(basis))

    return IdealGB(field=field, nvars=nvars, generators=tuple(gens), basis=basis, order=order)


def normal_form(poly: Poly, ideal: IdealGB) -> Poly:
    """Remainder of `poly` modulo the ideal's basis."""
    vectors = [ModuleVector.from_poly(g) for g in ideal.basis]
    remainder = reduce_vector(ModuleVector.from_poly(poly), vectors, ModuleOrder(ideal.order))
    return remainder.coordinate(0)


def contains(ideal: IdealGB, poly: Poly) -> bool:
    return normal_form(poly, ideal).is_zero()


def ideal_equal(a: IdealGB, b: IdealGB) -> bool:
    """Compares two ideals through their reduced bases.

    Examples:
        >>> from lcreg.algebra.parser import parse_poly
        >>> qq = FieldSpec.rationals()
        >>> x1, x1sq = parse_poly("x1", 2, qq), parse_poly("x1^2", 2, qq)
        >>> ideal_equal(ideal_gb([x1]), ideal_gb([x1sq]))
        False
    """
    if (a.field, a.nvars) != (b.field, b.nvars):
        raise FieldError("ideals live in different rings")
    if a.order != b.order:
        b = ideal_gb(list(b.basis), a.order, b.field, b.nvars)
    return a.basis == b.basis


def standard_monomial_count(leads: list[Monomial], degree: int, nvars: int) -> int:
    return sum(
        1
        for mono in monomials.monomials_of_degree(degree, nvars)
        if not any(monomials.divides(lead, mono) for lead in leads)
    )


def quotient_hilbert(ideal: IdealGB, cap: int = DEFAULT_CAP) -> HilbertFunction:
    """Hilbert function of P_0/I by counting standard monomials of degree `0..cap`.

    P_0/I is cyclic, so the first zero ends the scan.

    Examples:
        >>> from lcreg.algebra.parser import parse_poly
        >>> qq = FieldSpec.rationals()
        >>> quotient_hilbert(ideal_gb([parse_poly("x2", 2, qq), parse_poly("x1^2", 2, qq)])).values
        (1, 1)
        >>> quotient_hilbert(ideal_gb([], field=qq, nvars=2), cap=3)
        HilbertFunction(values=(1, 2, 3, 4), finite_length=False, start=0)
    """  # noqa: E501
    leads = ideal.leading_monomials
    values: list[int] = []
    for degree in range(cap + 1):
        count = standard_monomial_count(leads, degree, ideal.nvars)
        values.append(count)
        if count == 0:
            return HilbertFunction.from_scan(values, finite_length=True)

    return HilbertFunction.from_scan(values, finite_length=False)


def krull_dimension(ideal: IdealGB) -> int:
    """Dimension of P_0/I from the leading-term ideal.

    The largest set of variables such that no leading monomial is supported in
    it; `-1` for the unit ideal.

    Examples:
        >>> from lcreg.algebra.parser import parse_poly
        >>> qq = FieldSpec.rationals()
        >>> krull_dimension(ideal_gb([parse_poly("x1^2", 2, qq), parse_poly("x1*x2", 2, qq)]))
        1
    """  # noqa: E501
    if ideal.is_unit:
        return -1

    supports = [{i for i, e in enumerate(mono) if e} for mono in ideal.leading_monomials]
    for size in range(ideal.nvars, -1, -1):
        for subset in combinations(range(ideal.nvars), size):
            chosen = set(subset)
            if not any(support <= chosen for support in supports):
                return size

    return 0


def is_m_primary(gens: list[Poly], order: TermOrder | None = None) -> bool:
    """Whether the generated ideal is primary to (x_1, ..., x_m).

    Examples:
        >>> from lcreg.algebra.parser import parse_poly
        >>> qq = FieldSpec.rationals()
        >>> is_m_primary([parse_poly(t, 2, qq) for t in ("x1^2", "2*x1*x2", "x2^2")])
        True
        >>> is_m_primary([parse_poly("x1", 2, qq)])
        False
    """
    if not gens:
        return False
    return krull_dimension(ideal_gb(gens, order)) == 0
