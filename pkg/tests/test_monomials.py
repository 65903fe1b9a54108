from math import comb

import pytest

from lcreg.algebra import monomials


@pytest.mark.parametrize("degree,nvars", [(0, 1), (3, 2), (2, 3), (4, 4)])
def test_monomials_of_degree_count_and_order(degree, nvars):
    monos = monomials.monomials_of_degree(degree, nvars)

    assert len(monos) == comb(degree + nvars - 1, nvars - 1)
    assert list(monos) == sorted(monos, reverse=True)
    assert all(sum(mono) == degree for mono in monos)


def test_negative_degree_is_empty():
    assert monomials.monomials_of_degree(-1, 2) == ()


def test_helpers():
    assert monomials.lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)
    assert monomials.divides((1, 0), (2, 1))
    assert not monomials.divides((0, 2), (2, 1))
    assert monomials.coprime((1, 0), (0, 3))
    assert monomials.sub((2, 1), (1, 1)) == (1, 0)
    assert monomials.unit(3, 1) == (0, 1, 0)
    assert monomials.format_monomial((0, 2), "z") == "z2^2"
