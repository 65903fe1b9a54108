"""Exponent-vector helpers shared by x-, y- and z-monomials.

A monomial is a tuple of nonnegative exponents; its length is the number of
variables of the ambient ring.
"""

from functools import lru_cache

Monomial = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials_of_degree(degree: int, nvars: int) -> tuple[Monomial, ...]:
    """Lists all monomials of a given degree, lexicographically descending.

    The first variable dominates: `x1 > x2 > ... > xn`.

    Args:
        degree (int): Total degree, at least 0.
        nvars (int): Number of variables.

    Returns:
        Tuple with the `C(nvars + degree - 1, nvars - 1)` exponent vectors.

    Examples:
        >>> monomials_of_degree(2, 2)
        ((2, 0), (1, 1), (0, 2))
        >>> monomials_of_degree(0, 3)
        ((0, 0, 0),)
        >>> monomials_of_degree(1, 0)
        ()
    """
    if degree < 0:
        return ()
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)

    result: list[Monomial] = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(degree - first, nvars - 1):
            result.append((first, *rest))

    return tuple(result)


def degree(mono: Monomial) -> int:
    return sum(mono)


def add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """Checks `a <= b` componentwise, i.e. the monomial `a` divides `b`."""
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def unit(nvars: int, index: int) -> Monomial:
    return tuple(1 if i == index else 0 for i in range(nvars))


def format_monomial(mono: Monomial, letter: str) -> str:
    """Prints a monomial in the polynomial grammar.

    Examples:
        >>> format_monomial((2, 0, 1), "x")
        'x1^2*x3'
        >>> format_monomial((0, 0), "z")
        '1'
    """
    factors = [
        f"{letter}{i + 1}" if exponent == 1 else f"{letter}{i + 1}^{exponent}"
        for i, exponent in enumerate(mono)
        if exponent
    ]

    return "*".join(factors) if factors else "1"
