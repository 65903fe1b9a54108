"""Initial module of U_j under the position-over-term order.

With the target basis B_k in lexicographically descending order, a column
vector's initial term sits at its largest basis monomial with a nonzero
coordinate, and its initial coefficient is that whole coordinate. The ideal
I_{j,u} collects the initial coefficients at `u`:

    ini(U_j) = (+)_{u in B_k} I_{j,u} u

The elements of U_j whose initial position is at most `u` are spanned by the
Gröbner basis elements with initial position at most `u`, so I_{j,u} is
generated by the `u`-coordinates of the basis elements whose initial position
is exactly `u`.
"""

import logging
from dataclasses import dataclass

from lcreg.algebra.monomials import Monomial
from lcreg.algebra.poly import Poly
from lcreg.groebner.buchberger import ModuleVector, buchberger
from lcreg.groebner.ideal import IdealGB, ideal_gb
from lcreg.groebner.orders import ModuleOrder
from lcreg.presentation.presentation import Presentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModuleGB:
    """Reduced Gröbner basis of a submodule of `P_0^rank`.

    Attributes:
        rank (int): Number of basis positions of the ambient free module.
        elements (tuple[ModuleVector, ...]): Basis, leading terms descending.
        order (ModuleOrder): Position-over-term order used.
    """

    rank: int
    elements: tuple[ModuleVector, ...]
    order: ModuleOrder

    def leads(self) -> list[tuple[int, Monomial]]:
        return [element.lead(self.order) for element in self.elements]

    def with_lead_position(self, position: int) -> list[ModuleVector]:
        return [e for e in self.elements if e.lead_position(self.order) == position]


def column_vectors(presentation: Presentation) -> list[ModuleVector]:
    """Columns of U_j as vectors over the target basis positions."""
    target = presentation.target_basis
    return [
        ModuleVector.from_coordinates(
            {target.index(t): f_beta for t, f_beta in column},
            presentation.field,
            presentation.m,
        )
        for column in presentation.columns
    ]


def module_gb(presentation: Presentation, order: ModuleOrder | None = None) -> ModuleGB:
    """Gröbner basis of the column module U_j.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> from lcreg.presentation.presentation import build_presentation
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> module_gb(build_presentation(f, -3)).leads()
        [(0, (1, 0)), (0, (0, 1)), (1, (2, 0)), (1, (0, 1))]
    """
    order = order or ModuleOrder()
    elements = buchberger(column_vectors(presentation), order)

    logger.debug(
        "module basis of U_%d: %d elements in rank %d",
        presentation.j,
        len(elements),
        len(presentation.target_basis),
    )

    return ModuleGB(rank=len(presentation.target_basis), elements=tuple(elements), order=order)


@dataclass(frozen=True)
class IdealDecomposition:
    """The ideals I_{j,u}, one per target basis monomial, in basis order.

    Attributes:
        j (int): Component index.
        entries (tuple[tuple[Monomial, IdealGB], ...]): Pairs `(u, I_{j,u})`.
    """

    j: int
    entries: tuple[tuple[Monomial, IdealGB], ...]

    def __getitem__(self, u: Monomial) -> IdealGB:
        for mono, ideal in self.entries:
            if mono == tuple(u):
                return ideal
        raise KeyError(u)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def initial_decomposition(
    presentation: Presentation, order: ModuleOrder | None = None
) -> IdealDecomposition:
    """Computes ini(U_j) = (+)_u I_{j,u} u.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> from lcreg.presentation.presentation import build_presentation
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> [ideal.labels() for _, ideal in initial_decomposition(build_presentation(f, -3))]
        [['x1', 'x2'], ['x1^2', 'x2']]
    """  # noqa: E501
    order = order or ModuleOrder()
    gb = module_gb(presentation, order)

    entries: list[tuple[Monomial, IdealGB]] = []
    for position, u in enumerate(presentation.target_basis):
        coordinates: list[Poly] = [
            element.coordinate(position) for element in gb.with_lead_position(position)
        ]
        ideal = ideal_gb(
            coordinates,
            order.term_order,
            field=presentation.field,
            nvars=presentation.m,
        )
        entries.append((u, ideal))

    return IdealDecomposition(j=presentation.j, entries=tuple(entries))
