from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from lcreg.algebra.field import FieldSpec
from lcreg.algebra.parser import parse_poly
from lcreg.algebra.poly import Poly
from lcreg.errors import FieldError
from lcreg.groebner.ideal import (
    contains,
    ideal_equal,
    ideal_gb,
    is_m_primary,
    krull_dimension,
    normal_form,
    quotient_hilbert,
)
from lcreg.groebner.orders import TermOrder, TermOrderKind

QQ = FieldSpec.rationals()
X = sympy.symbols("x1:4")


def _to_sympy(poly: Poly):
    return sum(
        int(coeff) * sympy.Mul(*(x**e for x, e in zip(X, mono)))
        for mono, coeff in poly.items()
    )


def _terms(poly: Poly) -> frozenset:
    return frozenset(poly.items())


def _sympy_basis(gens: list[Poly], order: str, modulus: int | None = None) -> set[frozenset]:
    gens_x = X[: gens[0].nvars]
    options = {"modulus": modulus} if modulus else {"domain": "QQ"}
    basis = sympy.groebner([_to_sympy(g) for g in gens], *gens_x, order=order, **options)

    result = set()
    for g in basis.polys:
        if modulus:
            terms = {(mono, int(coeff) % modulus) for mono, coeff in g.terms()}
        else:
            terms = {(mono, Fraction(int(coeff.p), int(coeff.q))) for mono, coeff in g.terms()}
        result.add(frozenset(terms))
    return result


@st.composite
def generator_lists(draw, nvars: int = 2):
    monomial = st.tuples(*[st.integers(min_value=0, max_value=3)] * nvars)
    term_maps = st.dictionaries(monomial, st.integers(min_value=-3, max_value=3), min_size=1, max_size=3)  # noqa: E501
    poly = term_maps.map(lambda terms: Poly(QQ, nvars, terms)).filter(lambda p: not p.is_zero())
    return draw(st.lists(poly, min_size=1, max_size=3))


@given(generator_lists())
@settings(max_examples=40, deadline=None)
def test_grevlex_basis_matches_sympy(gens):
    gb = ideal_gb(gens)

    assert {_terms(g) for g in gb.basis} == _sympy_basis(gens, "grevlex")


@given(generator_lists())
@settings(max_examples=25, deadline=None)
def test_lex_basis_matches_sympy(gens):
    gb = ideal_gb(gens, TermOrder(TermOrderKind.lex))

    assert {_terms(g) for g in gb.basis} == _sympy_basis(gens, "lex")


@given(generator_lists())
@settings(max_examples=25, deadline=None)
def test_generators_reduce_to_zero(gens):
    gb = ideal_gb(gens)

    assert all(contains(gb, g) for g in gens)


@pytest.mark.parametrize(
    "texts",
    [
        ["x1^2 - x2*x3", "x2^2 - x1*x3", "x3^2 - x1*x2"],
        ["x1*x2 + x3^2", "x1^3 - x2", "x2*x3"],
    ],
)
def test_three_variable_bases_match_sympy(texts):
    gens = [parse_poly(text, 3, QQ) for text in texts]

    assert {_terms(g) for g in ideal_gb(gens).basis} == _sympy_basis(gens, "grevlex")


def test_prime_field_basis_matches_sympy():
    gf = FieldSpec.prime(7)
    gens = [parse_poly(text, 2, gf) for text in ("3*x1^2 + x2", "x1*x2 - 2*x2^2")]

    assert {_terms(g) for g in ideal_gb(gens).basis} == _sympy_basis(gens, "grevlex", 7)


def test_basis_does_not_depend_on_generator_order():
    gens = [parse_poly(text, 2, QQ) for text in ("x1^2 + x2", "x1*x2 - x2^2", "x2^3 + x1")]

    bases = {ideal_gb(list(order)).basis for order in permutations(gens)}

    assert len(bases) == 1


def test_normal_form_and_membership():
    ideal = ideal_gb([parse_poly("x1 - x2", 2, QQ)])

    assert normal_form(parse_poly("x1^2", 2, QQ), ideal) == parse_poly("x2^2", 2, QQ)
    assert contains(ideal, parse_poly("x1^2 - x2^2", 2, QQ))
    assert not contains(ideal, parse_poly("x1", 2, QQ))


def test_ideal_equality_across_orders():
    a = ideal_gb([parse_poly("x1 + x2", 2, QQ), parse_poly("x1 - x2", 2, QQ)])
    b = ideal_gb([parse_poly("x1", 2, QQ), parse_poly("x2", 2, QQ)], TermOrder(TermOrderKind.lex))

    assert ideal_equal(a, b)


def test_quotient_hilbert_counts_standard_monomials():
    ideal = ideal_gb([parse_poly(text, 2, QQ) for text in ("x1^2", "x1*x2", "x2^3")])

    hilbert = quotient_hilbert(ideal)

    assert hilbert.values == (1, 2, 1)
    assert hilbert.length == 4


@pytest.mark.parametrize(
    "texts,dimension",
    [
        (["x1*x2"], 1),
        (["x1", "x2"], 0),
        (["x1 + 1", "x1"], -1),
        ([], 2),
    ],
)
def test_krull_dimension(texts, dimension):
    ideal = ideal_gb([parse_poly(text, 2, QQ) for text in texts], field=QQ, nvars=2)

    assert krull_dimension(ideal) == dimension


def test_m_primary():
    assert is_m_primary([parse_poly(text, 2, QQ) for text in ("x1^3", "x2^2 + x1*x2")])
    assert not is_m_primary([parse_poly("x1*x2", 2, QQ)])
    assert not is_m_primary([])


def test_unit_and_zero_ideals():
    assert ideal_gb([parse_poly("3", 2, QQ)]).labels() == ["1"]
    assert ideal_gb([parse_poly("3", 2, QQ)]).is_unit
    assert ideal_gb([], field=QQ, nvars=2).is_zero


def test_invalid_generators():
    with pytest.raises(ValueError):
        ideal_gb([])
    with pytest.raises(FieldError):
        ideal_gb([parse_poly("x1", 2, QQ), parse_poly("x1", 1, QQ)])
