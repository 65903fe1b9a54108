from dataclasses import dataclass
from enum import Enum

from lcreg.algebra.monomials import Monomial


class TermOrderKind(str, Enum):
    """Enum defining the monomial orders on the x-variables."""

    grevlex = "grevlex"
    lex = "lex"


@dataclass(frozen=True)
class TermOrder:
    """Monomial order on x-monomials; larger `key` means larger monomial.

    Examples:
        >>> order = TermOrder()
        >>> order.key((0, 2)) < order.key((1, 1)) < order.key((2, 0))
        True
        >>> TermOrder(TermOrderKind.lex).key((0, 3)) < TermOrder(TermOrderKind.lex).key((1, 0))
        True
    """  # noqa: E501

    kind: TermOrderKind = TermOrderKind.grevlex

    def key(self, mono: Monomial) -> tuple:
        if self.kind == TermOrderKind.lex:
            return mono
        return (sum(mono), tuple(-e for e in reversed(mono)))


@dataclass(frozen=True)
class ModuleOrder:
    """Position-over-term order on a free module with ordered basis.

    Position 0 is the largest basis element; any term at a smaller position
    index beats every term at a larger one, and ties go to `term_order`.
    """

    term_order: TermOrder = TermOrder()

    def key(self, term: tuple[int, Monomial]) -> tuple:
        position, mono = term
        return (-position, self.term_order.key(mono))
