from fractions import Fraction

import pytest

from lcreg.algebra.bipoly import bipoly_power, lambda_form
from lcreg.cohomology.components import first_nonzero_sub_degree, top_hilbert
from lcreg.errors import ParameterError, ShapeError
from lcreg.formulas import (
    ResolutionShape,
    herzog_kuhl_betti,
    hilbert_series_from_shape,
    hk_multiplicity,
    lefschetz_hilbert,
    lefschetz_regularity,
    printed_betti_formula,
    sub_regularity,
    top_cohomology_shape,
    top_multiplicity_formula,
)
from lcreg.presentation.presentation import build_presentation

LEFSCHETZ_GRID = [
    (2, 1, -2),
    (2, 1, -3),
    (2, 1, -4),
    (2, 2, -2),
    (2, 2, -3),
    (2, 2, -4),
    (2, 3, -3),
    (3, 1, -3),
    (3, 1, -4),
]


@pytest.mark.parametrize(
    "n,r,j,values",
    [
        (2, 1, -3, [2, 1]),
        (2, 2, -2, [1, 2]),
        (2, 2, -3, [2, 4, 2]),
        (2, 2, -4, [3, 6, 4, 2]),
        (3, 1, -4, [3, 3]),
    ],
)
def test_lefschetz_hilbert_values(n, r, j, values):
    reg = lefschetz_regularity(n, r, j)

    assert [lefschetz_hilbert(n, r, j, i) for i in range(reg + 1)] == values
    assert lefschetz_hilbert(n, r, j, reg + 1) == 0
    assert lefschetz_hilbert(n, r, j, -1) == 0


@pytest.mark.parametrize("n,r,j", [(1, 1, -1), (2, 0, -3), (2, 1, -1)])
def test_lefschetz_parameters_are_validated(n, r, j):
    with pytest.raises(ParameterError):
        lefschetz_regularity(n, r, j)


def test_sub_regularity():
    assert sub_regularity(2, 2, -3) == 4
    assert sub_regularity(2, 1, -3) == 3


@pytest.mark.parametrize("n,r,j", LEFSCHETZ_GRID)
def test_closed_forms_agree_with_the_oracle(qq, n, r, j):
    g = bipoly_power(lambda_form(n, qq), r)
    presentation = build_presentation(g, j)
    hilbert = top_hilbert(presentation)
    shape = top_cohomology_shape(n, r, j)
    betti = herzog_kuhl_betti(shape)
    reg = lefschetz_regularity(n, r, j)

    assert hilbert.regularity == reg
    assert list(hilbert.values) == [lefschetz_hilbert(n, r, j, i) for i in range(reg + 1)]
    assert hilbert_series_from_shape(shape, betti) == list(hilbert.values)
    assert hk_multiplicity(shape) == hilbert.length == top_multiplicity_formula(n, r, j)
    assert first_nonzero_sub_degree(presentation, reg + 3) == sub_regularity(n, r, j)


def test_herzog_kuhl_examples():
    assert herzog_kuhl_betti(ResolutionShape(1, (1, 2))) == [2, 1]
    assert herzog_kuhl_betti(ResolutionShape(3, (1, 3, 4))) == [6, 6, 3]
    assert hk_multiplicity(ResolutionShape(1, (1, 2))) == 1


def test_top_cohomology_shape():
    assert top_cohomology_shape(2, 2, -3) == ResolutionShape(2, (2, 4))
    assert herzog_kuhl_betti(top_cohomology_shape(2, 2, -3)) == [4, 2]


@pytest.mark.parametrize(
    "beta0,twists",
    [(0, (1, 2)), (1, ()), (1, (0, 2)), (1, (2, 1)), (1, (2, 2))],
)
def test_invalid_shapes(beta0, twists):
    with pytest.raises(ShapeError):
        ResolutionShape(beta0, twists)


def test_non_integral_betti_numbers():
    with pytest.raises(ShapeError):
        herzog_kuhl_betti(ResolutionShape(1, (1, 3)))


def test_series_needs_divisible_numerator():
    with pytest.raises(ShapeError):
        hilbert_series_from_shape(ResolutionShape(2, (1, 3)), [3, 2])
    with pytest.raises(ShapeError):
        hilbert_series_from_shape(ResolutionShape(2, (1, 3)), [3])


def test_printed_betti_sign_differs_from_herzog_kuhl():
    printed = printed_betti_formula(2, 1, -3, 2)
    betti = herzog_kuhl_betti(top_cohomology_shape(2, 1, -3))

    assert printed == Fraction(-1)
    assert abs(printed) == betti[1]
    with pytest.raises(ValueError):
        printed_betti_formula(2, 1, -3, 1)
