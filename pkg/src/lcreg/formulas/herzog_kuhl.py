"""Pure resolutions of Cohen-Macaulay modules and the Lefschetz family's shape.

A pure resolution of a Cohen-Macaulay module M of codimension s

    0 -> P_0^{beta_s}(-d_s) -> ... -> P_0^{beta_1}(-d_1) -> P_0^{beta_0} -> M -> 0

has Betti numbers and multiplicity determined by `beta_0` and the twists:

    beta_i = (-1)^(i+1) beta_0 prod_{l != i} d_l / (d_l - d_i)
    e(M)   = beta_0 prod_i d_i / s!
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from lcreg.errors import ShapeError
from lcreg.formulas.lefschetz import check_parameters


@dataclass(frozen=True)
class ResolutionShape:
    """`beta_0` and the strictly increasing twists `d_1 < ... < d_s`."""

    beta0: int
    twists: tuple[int, ...]

    def __post_init__(self):
        if self.beta0 < 1:
            raise ShapeError(f"beta_0 must be positive, got {self.beta0}")
        if not self.twists or self.twists[0] < 1:
            raise ShapeError(f"twists must be positive integers, got {self.twists}")
        if any(a >= b for a, b in zip(self.twists, self.twists[1:])):
            raise ShapeError(f"twists must be strictly increasing, got {self.twists}")

    @property
    def s(self) -> int:
        return len(self.twists)


def herzog_kuhl_betti(shape: ResolutionShape) -> list[int]:
    """Betti numbers `beta_1..beta_s` of a pure resolution.

    Raises:
        ShapeError: If some `beta_i` is not a positive integer.

    Examples:
        >>> herzog_kuhl_betti(ResolutionShape(2, (1, 3)))
        [3, 1]
        >>> herzog_kuhl_betti(ResolutionShape(3, (2, 5)))
        [5, 2]
    """
    betti: list[int] = []
    for i, d_i in enumerate(shape.twists, start=1):
        value = Fraction((-1) ** (i + 1) * shape.beta0)
        for other, d_l in enumerate(shape.twists, start=1):
            if other != i:
                value *= Fraction(d_l, d_l - d_i)

        if value.denominator != 1 or value <= 0:
            raise ShapeError(
                f"shape is not the resolution of a CM module of this codimension "
                f"(beta_{i} = {value})"
            )
        betti.append(int(value))

    return betti


def hk_multiplicity(shape: ResolutionShape) -> Fraction:
    """Multiplicity `beta_0 prod d_i / s!`.

    Examples:
        >>> hk_multiplicity(ResolutionShape(2, (1, 3))), hk_multiplicity(ResolutionShape(3, (2, 5)))
        (Fraction(3, 1), Fraction(15, 1))
    """  # noqa: E501
    return Fraction(shape.beta0 * prod(shape.twists), factorial(shape.s))


def top_cohomology_shape(n: int, r: int, j: int) -> ResolutionShape:
    """Resolution shape of H^n(R)_j for the Lefschetz family.

    `beta_0 = C(-j-1, k)`, `d_1 = r` and `d_i = r + i - 1 + k` for `i >= 2`,
    where `k = -n - j`.

    Examples:
        >>> top_cohomology_shape(2, 1, -3)
        ResolutionShape(beta0=2, twists=(1, 3))
        >>> top_cohomology_shape(3, 1, -4)
        ResolutionShape(beta0=3, twists=(1, 3, 4))
    """
    check_parameters(n, r, j)
    k = -n - j
    twists = (r, *(r + i - 1 + k for i in range(2, n + 1)))
    return ResolutionShape(beta0=comb(-j - 1, k), twists=twists)


def top_multiplicity_formula(n: int, r: int, j: int) -> Fraction:
    """Closed-form multiplicity `r (-j+r-1)! beta_0 / (n! (k+r)!)`.

    Examples:
        >>> [top_multiplicity_formula(2, r, j) for r, j in ((1, -3), (1, -4), (2, -3))]
        [Fraction(3, 1), Fraction(6, 1), Fraction(8, 1)]
    """
    check_parameters(n, r, j)
    k = -n - j
    beta0 = comb(-j - 1, k)
    return Fraction(r * factorial(-j + r - 1) * beta0, factorial(n) * factorial(k + r))


def printed_betti_formula(n: int, r: int, j: int, i: int) -> Fraction:
    """Closed form for `beta_i`, `i >= 2`, with the sign convention `(-1)^i`.

    Kept for comparison with `herzog_kuhl_betti`; the two disagree in sign on
    some instances.

    Examples:
        >>> printed_betti_formula(2, 1, -3, 2)
        Fraction(-1, 1)
    """
    check_parameters(n, r, j)
    if not 2 <= i <= n:
        raise ValueError(f"index must satisfy 2 <= i <= n, got {i}")

    k = -n - j
    beta0 = comb(-j - 1, k)
    beta1 = comb(-j + r - 1, k + r)
    numerator = (-1) ** i * r * factorial(n - 1) * beta0 * beta1
    denominator = factorial(i - 2) * factorial(n - i) * (k + r + i - 1) * (n + j - i + 1)
    return Fraction(numerator, denominator)


def hilbert_series_from_shape(shape: ResolutionShape, betti: list[int]) -> list[int]:
    """Coefficients of `(beta_0 + sum_i (-1)^i beta_i t^{d_i}) / (1 - t)^s`.

    Raises:
        ShapeError: If the numerator is not divisible by `(1 - t)^s`.

    Examples:
        >>> hilbert_series_from_shape(ResolutionShape(2, (1, 3)), [3, 1])
        [2, 1]
    """
    if len(betti) != shape.s:
        raise ShapeError(f"expected {shape.s} Betti numbers, got {len(betti)}")

    coefficients = [0] * (shape.twists[-1] + 1)
    coefficients[0] = shape.beta0
    for i, (d_i, beta_i) in enumerate(zip(shape.twists, betti), start=1):
        coefficients[d_i] += (-1) ** i * beta_i

    for _ in range(shape.s):
        if sum(coefficients) != 0:
            raise ShapeError("numerator is not divisible by (1 - t)^s; module is not of finite length")  # noqa: E501
        quotient: list[int] = []
        running = 0
        for value in coefficients[:-1]:
            running += value
            quotient.append(running)
        coefficients = quotient

    while coefficients and coefficients[-1] == 0:
        coefficients.pop()

    return coefficients
