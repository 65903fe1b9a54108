import pytest

from lcreg.algebra.field import FieldSpec
from lcreg.algebra.parser import parse_bipoly


@pytest.fixture
def qq() -> FieldSpec:
    return FieldSpec.rationals()


@pytest.fixture
def gf() -> FieldSpec:
    return FieldSpec.prime(32003)


@pytest.fixture
def f_lambda(qq):
    """x1*y1 + x2*y2 over QQ, m = n = 2."""
    return parse_bipoly("x1*y1 + x2*y2", 2, 2, qq)
