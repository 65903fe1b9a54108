"""Text grammar for input polynomials.

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := integer | var ['^' positive-integer]
    var    := ('x' | 'y') positive-integer

Whitespace between tokens is ignored. Integers are arbitrary precision.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import pyparsing as pp

from lcreg.algebra.bipoly import BiMonomial, BiPoly
from lcreg.algebra.field import FieldSpec
from lcreg.algebra.poly import Poly
from lcreg.errors import PolynomialSyntaxError, UnknownVariableError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Power:
    letter: str
    index: int
    exponent: int
    position: int


def _variable_action(s: str, loc: int, toks: pp.ParseResults) -> _Power:
    name = toks[0]
    exponent = toks[1] if len(toks) > 1 else 1
    return _Power(letter=name[0], index=int(name[1:]), exponent=exponent, position=loc)


def _exponent_action(s: str, loc: int, toks: pp.ParseResults) -> int:
    value = int(toks[0])
    if value < 1:
        raise pp.ParseFatalException(s, loc, "exponent must be a positive integer")
    return value


@lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    integer = pp.Word(pp.nums).set_parse_action(lambda toks: int(toks[0]))
    exponent = pp.Word(pp.nums).set_parse_action(_exponent_action)
    variable = (
        pp.Regex(r"[xy][0-9]+") + pp.Optional(pp.Suppress("^") + exponent)
    ).set_parse_action(_variable_action)

    factor = variable | integer
    term = pp.Group(factor + pp.ZeroOrMore(pp.Suppress("*") + factor))
    sign = pp.one_of("+ -")

    return pp.Optional(pp.Literal("-")) + term + pp.ZeroOrMore(sign + term)


def _tokenize(text: str) -> list:
    try:
        return list(_grammar().parse_string(text, parse_all=True))
    except pp.ParseBaseException as e:
        raise PolynomialSyntaxError(e.msg, e.loc) from None


def parse_bipoly(
    text: str,
    m: int,
    n: int,
    field: FieldSpec,
    require_bihomogeneous: bool = False,
) -> BiPoly:
    """Parses a polynomial in x1..xm, y1..yn.

    Args:
        text (str): Polynomial text following the grammar of this module.
        m (int): Number of x-variables.
        n (int): Number of y-variables.
        field (FieldSpec): Base field the coefficients are mapped into.
        require_bihomogeneous (bool, optional): Reject inputs that mix bidegrees. Defaults to False.

    Returns:
        The expanded and collected polynomial.

    Examples:
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> (len(f), f.bidegree)
        (2, (1, 1))
        >>> str(parse_bipoly("3*x1^2*y2 - x2^2*y1", 2, 2, FieldSpec.rationals()))
        '3*x1^2*y2 - x2^2*y1'
    """  # noqa: E501
    tokens = _tokenize(text)

    terms: list[tuple[BiMonomial, int]] = []
    sign = 1
    for token in tokens:
        if isinstance(token, str):
            sign = -1 if token == "-" else 1
            continue

        coeff = sign
        x_exps = [0] * m
        y_exps = [0] * n
        for factor in token:
            if isinstance(factor, int):
                coeff *= factor
                continue

            exps, bound = (x_exps, m) if factor.letter == "x" else (y_exps, n)
            if not 1 <= factor.index <= bound:
                allowed = f"{factor.letter}1..{factor.letter}{bound}" if bound else "none"
                raise UnknownVariableError(
                    f"unknown variable {factor.letter}{factor.index} at position "
                    f"{factor.position} (allowed: {allowed})"
                )
            exps[factor.index - 1] += factor.exponent

        terms.append(((tuple(x_exps), tuple(y_exps)), coeff))
        sign = 1

    f = BiPoly(field, m, n, ((mono, field.element(coeff)) for mono, coeff in terms))
    logger.debug("parsed %r into %d terms", text, len(f))

    if require_bihomogeneous:
        f.require_bidegree()

    return f


def parse_poly(text: str, m: int, field: FieldSpec) -> Poly:
    """Parses a polynomial of P_0 = K[x1..xm]; y-variables are rejected.

    Examples:
        >>> str(parse_poly("x1 - 2*x2 + x1", 2, FieldSpec.rationals()))
        '2*x1 - 2*x2'
    """
    f = parse_bipoly(text, m, 0, field)
    return Poly(field, m, ((x_mono, coeff) for (x_mono, _), coeff in f.items()))
