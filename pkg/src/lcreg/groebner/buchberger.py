"""Buchberger's algorithm on elements of a free P_0-module.

An ideal of P_0 is the rank-one case (every element lives at position 0).
Pairs are selected by the normal strategy (smallest lcm first). Pairs with
different leading positions have no S-polynomial; the chain criterion applies
in every rank and the coprime criterion only in rank one.
"""

import logging
from collections.abc import Iterable, Mapping

from lcreg.algebra import monomials
from lcreg.algebra.field import FieldSpec, Scalar
from lcreg.algebra.monomials import Monomial
from lcreg.algebra.poly import Poly
from lcreg.groebner.orders import ModuleOrder

logger = logging.getLogger(__name__)

Term = tuple[int, Monomial]


class ModuleVector:
    """Immutable element of a free module `P_0^rank`, stored as `{(position, x-monomial): scalar}`."""  # noqa: E501

    __slots__ = ("field", "nvars", "_terms")

    def __init__(self, field: FieldSpec, nvars: int, terms: Mapping[Term, Scalar]):
        self.field = field
        self.nvars = nvars
        self._terms = {term: coeff for term, coeff in terms.items() if coeff != 0}

    @classmethod
    def from_coordinates(cls, coordinates: Mapping[int, Poly], field: FieldSpec, nvars: int):
        terms: dict[Term, Scalar] = {}
        for position, poly in coordinates.items():
            for mono, coeff in poly.items():
                terms[(position, mono)] = coeff
        return cls(field, nvars, terms)

    @classmethod
    def from_poly(cls, poly: Poly) -> "ModuleVector":
        return cls.from_coordinates({0: poly}, poly.field, poly.nvars)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def lead(self, order: ModuleOrder) -> Term:
        return max(self._terms, key=order.key)

    def lead_position(self, order: ModuleOrder) -> int:
        return self.lead(order)[0]

    def positions(self) -> set[int]:
        return {position for position, _ in self._terms}

    def coordinate(self, position: int) -> Poly:
        return Poly(
            self.field,
            self.nvars,
            {mono: coeff for (pos, mono), coeff in self._terms.items() if pos == position},
        )

    def monic(self, order: ModuleOrder) -> "ModuleVector":
        inverse = self.field.inverse(self._terms[self.lead(order)])
        reduce = self.field.reduce
        return ModuleVector(
            self.field, self.nvars, {t: reduce(c * inverse) for t, c in self._terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.field, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"ModuleVector({self._terms!r})"


def _subtract_multiple(
    work: dict[Term, Scalar],
    reducer: ModuleVector,
    shift: Monomial,
    factor: Scalar,
    field: FieldSpec,
):
    # work -= factor * x^shift * reducer, in place
    reduce = field.reduce
    for (position, mono), coeff in reducer.items():
        term = (position, monomials.add(mono, shift))
        value = reduce(work.get(term, 0) - factor * coeff)
        if value:
            work[term] = value
        else:
            work.pop(term, None)


def reduce_vector(
    vector: ModuleVector,
    basis: Iterable[ModuleVector],
    order: ModuleOrder,
    leads: dict[int, Term] | None = None,
) -> ModuleVector:
    """Fully reduces `vector` modulo monic `basis`; the result has no reducible term."""
    basis = list(basis)
    if leads is None:
        leads = {i: element.lead(order) for i, element in enumerate(basis)}

    field = vector.field
    work = dict(vector.items())
    remainder: dict[Term, Scalar] = {}

    while work:
        term = max(work, key=order.key)
        coeff = work[term]
        position, mono = term

        reducer_index = next(
            (
                i
                for i, (lead_position, lead_mono) in leads.items()
                if lead_position == position and monomials.divides(lead_mono, mono)
            ),
            None,
        )
        if reducer_index is None:
            remainder[term] = work.pop(term)
            continue

        shift = monomials.sub(mono, leads[reducer_index][1])
        _subtract_multiple(work, basis[reducer_index], shift, coeff, field)

    return ModuleVector(field, vector.nvars, remainder)


def s_vector(a: ModuleVector, b: ModuleVector, order: ModuleOrder) -> ModuleVector:
    """S-vector of two monic elements with the same leading position."""
    (position, lead_a), (_, lead_b) = a.lead(order), b.lead(order)
    common = monomials.lcm(lead_a, lead_b)

    work: dict[Term, Scalar] = {}
    _subtract_multiple(work, a, monomials.sub(common, lead_a), a.field.reduce(-1), a.field)
    _subtract_multiple(work, b, monomials.sub(common, lead_b), a.field.one(), a.field)

    return ModuleVector(a.field, a.nvars, work)


def buchberger(
    generators: Iterable[ModuleVector],
    order: ModuleOrder,
    rank_one: bool = False,
) -> list[ModuleVector]:
    """Computes the reduced Gröbner basis of the submodule spanned by `generators`.

    Args:
        generators (Iterable[ModuleVector]): Spanning set; zero vectors are ignored.
        order (ModuleOrder): Position-over-term order.
        rank_one (bool, optional): All elements live at position 0, enabling the coprime criterion. Defaults to False.

    Returns:
        Monic, interreduced basis sorted by leading term, largest first.
    """  # noqa: E501
    basis: list[ModuleVector] = []
    leads: dict[int, Term] = {}
    pending: set[tuple[int, int]] = set()

    def add(element: ModuleVector):
        element = element.monic(order)
        index = len(basis)
        basis.append(element)
        leads[index] = element.lead(order)
        for other in range(index):
            if leads[other][0] == leads[index][0]:
                pending.add((other, index))

    for generator in generators:
        reduced = reduce_vector(generator, basis, order, leads)
        if not reduced.is_zero():
            add(reduced)

    def pair_lcm(pair: tuple[int, int]) -> Term:
        (position, lead_a), (_, lead_b) = leads[pair[0]], leads[pair[1]]
        return position, monomials.lcm(lead_a, lead_b)

    def chain_redundant(a: int, b: int, common: Monomial) -> bool:
        position = leads[a][0]
        for c, (lead_position, lead_mono) in leads.items():
            if c in (a, b) or lead_position != position:
                continue
            if not monomials.divides(lead_mono, common):
                continue
            if common in (
                monomials.lcm(leads[a][1], lead_mono),
                monomials.lcm(leads[b][1], lead_mono),
            ):
                continue
            if (min(a, c), max(a, c)) in pending or (min(b, c), max(b, c)) in pending:
                continue
            return True
        return False

    reductions = 0
    while pending:
        pair = min(pending, key=lambda p: (order.key(pair_lcm(p)), p))
        pending.remove(pair)
        a, b = pair
        position, common = pair_lcm(pair)

        if rank_one and monomials.coprime(leads[a][1], leads[b][1]):
            continue
        if chain_redundant(a, b, common):
            continue

        reductions += 1
        remainder = reduce_vector(s_vector(basis[a], basis[b], order), basis, order, leads)
        if not remainder.is_zero():
            add(remainder)

    logger.debug("buchberger: %d reductions, %d elements before interreduction", reductions, len(basis))

    return interreduce(basis, order)


def interreduce(basis: list[ModuleVector], order: ModuleOrder) -> list[ModuleVector]:
    """Turns a Gröbner basis into the reduced one."""
    leads = [element.lead(order) for element in basis]

    minimal: list[ModuleVector] = []
    for i, element in enumerate(basis):
        position, mono = leads[i]
        redundant = any(
            j != i
            and leads[j][0] == position
            and monomials.divides(leads[j][1], mono)
            and (leads[j] != leads[i] or j < i)
            for j in range(len(basis))
        )
        if not redundant:
            minimal.append(element)

    reduced: list[ModuleVector] = []
    for i, element in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        reduced.append(reduce_vector(element, others, order).monic(order))

    return sorted(reduced, key=lambda element: order.key(element.lead(order)), reverse=True)
