"""Sparse polynomials in the x-variables, i.e. elements of P_0 = K[x_1, ..., x_m]."""

from collections.abc import Iterable, Mapping
from typing import Protocol

from lcreg.algebra import monomials
from lcreg.algebra.field import FieldSpec, Scalar
from lcreg.algebra.monomials import Monomial
from lcreg.errors import FieldError


class MonomialOrder(Protocol):
    def key(self, mono: Monomial) -> tuple: ...


class Poly:
    """An immutable polynomial over a `FieldSpec` in a fixed number of variables.

    Terms are stored as a map from exponent vectors to nonzero scalars.
    """

    __slots__ = ("field", "nvars", "_terms", "_hash")

    def __init__(
        self,
        field: FieldSpec,
        nvars: int,
        terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Monomial, Scalar] = {}
        for mono, coeff in items:
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            collected[mono] = collected.get(mono, 0) + coeff

        self.field = field
        self.nvars = nvars
        self._terms = {
            mono: value
            for mono, coeff in collected.items()
            if (value := field.reduce(coeff)) != 0
        }
        self._hash: int | None = None

    @classmethod
    def _from_clean(cls, field: FieldSpec, nvars: int, terms: dict[Monomial, Scalar]) -> "Poly":
        # terms must already be reduced and free of zeros
        poly = cls.__new__(cls)
        poly.field = field
        poly.nvars = nvars
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "Poly":
        return cls._from_clean(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, value: int = 1) -> "Poly":
        return cls(field, nvars, {(0,) * nvars: field.element(value)})

    @classmethod
    def monomial(cls, field: FieldSpec, nvars: int, mono: Monomial, coeff: int = 1) -> "Poly":
        return cls(field, nvars, {tuple(mono): field.element(coeff)})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, index: int) -> "Poly":
        return cls.monomial(field, nvars, monomials.unit(nvars, index))

    # introspection ----------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(tuple(mono), self.field.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(mono) for mono in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(mono) for mono in self._terms}) <= 1

    # term order helpers -------------------------------------------------------

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_term(self, order: MonomialOrder) -> tuple[Monomial, Scalar]:
        mono = self.leading_monomial(order)
        return mono, self._terms[mono]

    def monic(self, order: MonomialOrder) -> "Poly":
        if not self._terms:
            return self
        _, coeff = self.leading_term(order)
        return self.scale(self.field.inverse(coeff))

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Poly"):
        if other.field != self.field or other.nvars != self.nvars:
            raise FieldError("polynomials live in different rings")

    def _combine(self, other: "Poly", sign: int) -> "Poly":
        self._check(other)
        reduce = self.field.reduce
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = reduce(terms.get(mono, 0) + sign * coeff)
            if value == 0:
                terms.pop(mono, None)
            else:
                terms[mono] = value
        return Poly._from_clean(self.field, self.nvars, terms)

    def __add__(self, other: "Poly") -> "Poly":
        return self._combine(other, 1)

    def __sub__(self, other: "Poly") -> "Poly":
        return self._combine(other, -1)

    def __neg__(self) -> "Poly":
        reduce = self.field.reduce
        return Poly._from_clean(
            self.field, self.nvars, {m: reduce(-c) for m, c in self._terms.items()}
        )

    def scale(self, value: Scalar) -> "Poly":
        value = self.field.reduce(value)
        if value == 0:
            return Poly.zero(self.field, self.nvars)
        reduce = self.field.reduce
        return Poly._from_clean(
            self.field, self.nvars, {m: reduce(c * value) for m, c in self._terms.items()}
        )

    def __mul__(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return self.scale(other)

        self._check(other)
        reduce = self.field.reduce
        terms: dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, 0) + c1 * c2
        cleaned = {m: v for m, c in terms.items() if (v := reduce(c)) != 0}
        return Poly._from_clean(self.field, self.nvars, cleaned)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(self.field, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # comparison -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __reduce__(self):
        return (Poly, (self.field, self.nvars, self._terms))

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, field={self.field.label}, nvars={self.nvars})"

    def __str__(self) -> str:
        return format_poly(self)


def format_terms(terms: Iterable[tuple[str, Scalar]], field: FieldSpec) -> str:
    """Joins `(monomial string, coefficient)` pairs into canonical text."""
    pieces: list[str] = []
    for mono_text, coeff in terms:
        text = field.format(coeff)
        negative = text.startswith("-")
        magnitude = text[1:] if negative else text

        if mono_text == "1":
            body = magnitude
        elif magnitude == "1":
            body = mono_text
        else:
            body = f"{magnitude}*{mono_text}"

        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")

    return "".join(pieces) if pieces else "0"


def format_poly(poly: Poly, letter: str = "x") -> str:
    """Prints a polynomial with terms in lexicographically descending order.

    Examples:
        >>> field = FieldSpec.rationals()
        >>> format_poly(Poly(field, 2, {(1, 0): 1, (0, 1): -2}))
        'x1 - 2*x2'
        >>> format_poly(Poly.zero(field, 2))
        '0'
    """
    ordered = sorted(poly.items(), key=lambda item: item[0], reverse=True)
    return format_terms(
        ((monomials.format_monomial(mono, letter), coeff) for mono, coeff in ordered),
        poly.field,
    )
