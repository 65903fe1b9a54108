import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcreg.algebra.bipoly import (
    BiPoly,
    bipoly_power,
    coefficient_ideal,
    generic_form,
    lambda_form,
    swap_roles,
    y_coefficients,
)
from lcreg.algebra.field import FieldSpec
from lcreg.algebra.monomials import monomials_of_degree
from lcreg.algebra.parser import parse_bipoly
from lcreg.errors import NotBihomogeneousError, ParameterError


def test_power_of_lambda_form(f_lambda):
    square = bipoly_power(f_lambda, 2)

    assert str(square) == "x1^2*y1^2 + 2*x1*x2*y1*y2 + x2^2*y2^2"
    assert square.bidegree == (2, 2)


def test_power_rejects_bad_input(qq, f_lambda):
    with pytest.raises(ParameterError):
        bipoly_power(f_lambda, 0)
    with pytest.raises(NotBihomogeneousError):
        bipoly_power(parse_bipoly("x1*y1 + x1", 2, 2, qq), 2)


def test_y_coefficients_split_and_reassemble(qq):
    f = parse_bipoly("x1^2*y1 + 3*x1*x2*y1 - x2^2*y2", 2, 2, qq)

    coefficients = y_coefficients(f)

    assert list(coefficients) == [(1, 0), (0, 1)]
    assert str(coefficients[(1, 0)]) == "x1^2 + 3*x1*x2"
    assert str(coefficients[(0, 1)]) == "-x2^2"
    assert BiPoly.from_y_coefficients(coefficients, 2, qq, 2) == f
    assert len(coefficient_ideal(f)) == 2


def test_swap_roles(qq):
    f = parse_bipoly("x1^2*y2", 2, 3, qq)

    swapped = swap_roles(f)

    assert (swapped.m, swapped.n) == (3, 2)
    assert swapped.bidegree == (1, 2)
    assert swap_roles(swapped) == f


def test_lambda_form_validates(qq):
    assert str(lambda_form(3, qq, [1, 2, 3])) == "x1*y1 + 2*x2*y2 + 3*x3*y3"

    with pytest.raises(ParameterError):
        lambda_form(2, qq, [1, 2, 3])
    with pytest.raises(ParameterError):
        lambda_form(0, qq)


def test_generic_form_has_one_x_per_y_monomial(qq):
    f = generic_form(3, 2, qq)

    assert (f.m, f.n) == (6, 3)
    assert f.bidegree == (1, 2)
    assert len(coefficient_ideal(f)) == 6


def test_equal_polynomials_hash_equal(qq):
    a = parse_bipoly("x1*y1 + x2*y2", 2, 2, qq)
    b = parse_bipoly("x2*y2 + x1*y1", 2, 2, qq)

    assert a == b
    assert hash(a) == hash(b)


def _bipolys(bidegree: tuple[int, int] | None = None, m: int = 2, n: int = 2):
    exponent = st.integers(min_value=0, max_value=2)
    if bidegree is None:
        x_monos = st.tuples(*[exponent] * m)
        y_monos = st.tuples(*[exponent] * n)
    else:
        a, b = bidegree
        x_monos = st.sampled_from(monomials_of_degree(a, m))
        y_monos = st.sampled_from(monomials_of_degree(b, n))
    coefficient = st.integers(min_value=-3, max_value=3)
    terms = st.lists(st.tuples(st.tuples(x_monos, y_monos), coefficient), max_size=4)
    return terms.map(lambda items: BiPoly(FieldSpec.rationals(), m, n, items))


@given(_bipolys(), _bipolys(), _bipolys())
@settings(max_examples=60, deadline=None)
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()


@given(
    _bipolys(bidegree=(1, 1)).filter(lambda f: not f.is_zero()),
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=3),
)
@settings(max_examples=30, deadline=None)
def test_power_is_additive_in_the_exponent(f, r1, r2):
    product = bipoly_power(f, r1) * bipoly_power(f, r2)

    assert bipoly_power(f, r1 + r2) == product
    assert product.bidegree == (r1 + r2, r1 + r2)
