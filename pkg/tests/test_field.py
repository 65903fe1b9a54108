from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from lcreg.algebra.field import CHAR_P_CAVEAT, FieldSpec, is_prime
from lcreg.errors import FieldError


@pytest.mark.parametrize(
    "text,label",
    [("QQ", "QQ"), ("q", "QQ"), ("rationals", "QQ"), ("GF(32003)", "GF(32003)"), ("7", "GF(7)")],  # noqa: E501
)
def test_parse(text, label):
    assert FieldSpec.parse(text).label == label


@pytest.mark.parametrize("text", ["GF(8)", "GF(1)", "reals", "GF(2)"])
def test_parse_rejects(text):
    with pytest.raises(FieldError):
        FieldSpec.parse(text)


def test_prime_field_arithmetic():
    field = FieldSpec.prime(7)

    assert field.element(Fraction(1, 2)) == 4
    assert field.element(-1) == 6
    assert field.inverse(3) == 5
    assert field.reduce(15) == 1


def test_denominator_divisible_by_modulus():
    with pytest.raises(FieldError):
        FieldSpec.prime(7).element(Fraction(1, 7))


def test_rational_scalars_are_fractions(qq):
    assert qq.element(3) == Fraction(3)
    assert isinstance(qq.element(3), Fraction)
    assert qq.inverse(Fraction(2, 3)) == Fraction(3, 2)


def test_zero_has_no_inverse(qq, gf):
    with pytest.raises(ZeroDivisionError):
        qq.inverse(0)
    with pytest.raises(ZeroDivisionError):
        gf.inverse(0)


def test_caveat(qq, gf):
    assert qq.caveat is None
    assert gf.caveat == CHAR_P_CAVEAT
    assert gf.characteristic == 32003
    assert qq.characteristic == 0


@given(st.integers(min_value=-10, max_value=20000))
def test_is_prime_matches_sympy(p):
    assert is_prime(p) == sympy.isprime(p)
