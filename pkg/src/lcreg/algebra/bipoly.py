"""Bigraded polynomials in K[x_1..x_m, y_1..y_n] with deg x_i = (1,0), deg y_i = (0,1)."""

from collections.abc import Iterable, Mapping, Sequence

from lcreg.algebra import monomials
from lcreg.algebra.field import FieldSpec, Scalar
from lcreg.algebra.monomials import Monomial
from lcreg.algebra.poly import Poly, format_terms
from lcreg.errors import FieldError, NotBihomogeneousError, ParameterError

BiMonomial = tuple[Monomial, Monomial]


class BiPoly:
    """An immutable polynomial in the x- and y-variables.

    The bidegree `(a, b)` is recorded when every term has x-degree `a` and
    y-degree `b`; otherwise `bidegree` is `None`.
    """

    __slots__ = ("field", "m", "n", "_terms", "_hash")

    def __init__(
        self,
        field: FieldSpec,
        m: int,
        n: int,
        terms: Mapping[BiMonomial, Scalar] | Iterable[tuple[BiMonomial, Scalar]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[BiMonomial, Scalar] = {}
        for (x_mono, y_mono), coeff in items:
            if len(x_mono) != m or len(y_mono) != n:
                raise ValueError(f"term {(x_mono, y_mono)} does not fit {m} x- and {n} y-variables")
            key = (tuple(x_mono), tuple(y_mono))
            collected[key] = collected.get(key, 0) + coeff

        self.field = field
        self.m = m
        self.n = n
        self._terms = {
            key: value for key, coeff in collected.items() if (value := field.reduce(coeff)) != 0
        }
        self._hash: int | None = None

    @classmethod
    def from_y_coefficients(
        cls, coefficients: Mapping[Monomial, Poly], n: int, field: FieldSpec, m: int
    ) -> "BiPoly":
        """Reassembles `sum f_beta * y^beta` from its y-coefficients."""
        terms: list[tuple[BiMonomial, Scalar]] = []
        for y_mono, poly in coefficients.items():
            for x_mono, coeff in poly.items():
                terms.append(((x_mono, tuple(y_mono)), coeff))
        return cls(field, m, n, terms)

    # introspection ----------------------------------------------------------

    @property
    def terms(self) -> dict[BiMonomial, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(sum(x_mono), sum(y_mono)) for x_mono, y_mono in self._terms}

    @property
    def bidegree(self) -> tuple[int, int] | None:
        degrees = self.bidegrees()
        return next(iter(degrees)) if len(degrees) == 1 else None

    @property
    def is_bihomogeneous(self) -> bool:
        return self.bidegree is not None

    def require_bidegree(self) -> tuple[int, int]:
        """Returns the bidegree or raises `NotBihomogeneousError` naming the clash."""
        degrees = sorted(self.bidegrees(), reverse=True)
        if not degrees:
            raise NotBihomogeneousError("the zero polynomial has no bidegree")
        if len(degrees) > 1:
            shown = " and ".join(f"({a},{b})" for a, b in degrees[:2])
            raise NotBihomogeneousError(f"mixed bidegrees {shown}")
        return degrees[0]

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "BiPoly"):
        if (other.field, other.m, other.n) != (self.field, self.m, self.n):
            raise FieldError("bigraded polynomials live in different rings")

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        return BiPoly(self.field, self.m, self.n, [*self._terms.items(), *other._terms.items()])

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        negated = ((key, -coeff) for key, coeff in other._terms.items())
        return BiPoly(self.field, self.m, self.n, [*self._terms.items(), *negated])

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        products: dict[BiMonomial, Scalar] = {}
        for (x1, y1), c1 in self._terms.items():
            for (x2, y2), c2 in other._terms.items():
                key = (monomials.add(x1, x2), monomials.add(y1, y2))
                products[key] = products.get(key, 0) + c1 * c2
        return BiPoly(self.field, self.m, self.n, products)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return (self.field, self.m, self.n, self._terms) == (
            other.field,
            other.m,
            other.n,
            other._terms,
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.m, self.n, frozenset(self._terms.items())))
        return self._hash

    def __reduce__(self):
        return (BiPoly, (self.field, self.m, self.n, self._terms))

    def __repr__(self) -> str:
        return f"BiPoly({format_bipoly(self)!r}, field={self.field.label}, m={self.m}, n={self.n})"

    def __str__(self) -> str:
        return format_bipoly(self)


def format_bipoly(f: BiPoly) -> str:
    """Prints in canonical form: lex-descending on x-exponents, then y-exponents.

    Examples:
        >>> field = FieldSpec.rationals()
        >>> f = BiPoly(field, 2, 2, {((0, 1), (0, 1)): 1, ((1, 0), (1, 0)): 1})
        >>> format_bipoly(f)
        'x1*y1 + x2*y2'
    """
    ordered = sorted(f.items(), key=lambda item: item[0], reverse=True)

    def _mono_text(x_mono: Monomial, y_mono: Monomial) -> str:
        parts = [
            text
            for text in (
                monomials.format_monomial(x_mono, "x"),
                monomials.format_monomial(y_mono, "y"),
            )
            if text != "1"
        ]
        return "*".join(parts) if parts else "1"

    return format_terms(((_mono_text(x, y), coeff) for (x, y), coeff in ordered), f.field)


def bipoly_power(f: BiPoly, r: int) -> BiPoly:
    """Raises a bihomogeneous polynomial to a positive power.

    Args:
        f (BiPoly): Bihomogeneous polynomial of bidegree `(a, b)`.
        r (int): Exponent, at least 1.

    Returns:
        `f^r`, of bidegree `(r*a, r*b)`.
    """
    if r < 1:
        raise ParameterError(f"power must be a positive integer, got {r}")
    f.require_bidegree()

    result = f
    for _ in range(r - 1):
        result = result * f

    return result


def y_coefficients(f: BiPoly) -> dict[Monomial, Poly]:
    """Splits `f = sum_beta f_beta * y^beta` into its x-polynomial coefficients.

    Returns:
        Map from each y-monomial with a nonzero coefficient to `f_beta`, ordered
        lexicographically descending in the y-monomials.
    """
    f.require_bidegree()

    grouped: dict[Monomial, dict[Monomial, Scalar]] = {}
    for (x_mono, y_mono), coeff in f.items():
        grouped.setdefault(y_mono, {})[x_mono] = coeff

    return {
        y_mono: Poly(f.field, f.m, grouped[y_mono])
        for y_mono in sorted(grouped, reverse=True)
    }


def coefficient_ideal(f: BiPoly) -> list[Poly]:
    """Generators of the ideal I(f) of P_0 spanned by the y-coefficients of `f`."""
    return [poly for poly in y_coefficients(f).values() if not poly.is_zero()]


def swap_roles(f: BiPoly) -> BiPoly:
    """Exchanges the x- and y-variable sets; bidegree `(a, b)` becomes `(b, a)`."""
    return BiPoly(f.field, f.n, f.m, [((y, x), coeff) for (x, y), coeff in f.items()])


def lambda_form(n: int, field: FieldSpec, lambdas: Sequence[int] | None = None) -> BiPoly:
    """Builds `f_lambda = sum_i lambda_i * x_i * y_i` with `m = n`.

    Examples:
        >>> str(lambda_form(2, FieldSpec.rationals()))
        'x1*y1 + x2*y2'
        >>> str(lambda_form(2, FieldSpec.rationals(), [3, -1]))
        '3*x1*y1 - x2*y2'
    """
    if n < 1:
        raise ParameterError(f"need at least one variable, got n={n}")

    weights = list(lambdas) if lambdas is not None else [1] * n
    if len(weights) != n:
        raise ParameterError(f"expected {n} lambda values, got {len(weights)}")

    terms = [
        ((monomials.unit(n, i), monomials.unit(n, i)), field.element(weight))
        for i, weight in enumerate(weights)
    ]
    return BiPoly(field, n, n, terms)


def generic_form(n: int, d: int, field: FieldSpec) -> BiPoly:
    """Builds `sum_{|beta| = d} x_beta * y^beta`, one x-variable per y-monomial.

    The x-variables follow the lex-descending order of the y-monomials, so
    `m = C(n + d - 1, d)`.

    Examples:
        >>> str(generic_form(2, 2, FieldSpec.rationals()))
        'x1*y1^2 + x2*y1*y2 + x3*y2^2'
    """
    if n < 1 or d < 1:
        raise ParameterError(f"need n >= 1 and d >= 1, got n={n}, d={d}")

    y_monos = monomials.monomials_of_degree(d, n)
    m = len(y_monos)
    terms = [((monomials.unit(m, i), y_mono), field.one()) for i, y_mono in enumerate(y_monos)]
    return BiPoly(field, m, n, terms)
