import pytest
import sympy

from lcreg.algebra.bipoly import bipoly_power, generic_form, lambda_form
from lcreg.algebra.parser import parse_bipoly
from lcreg.cohomology.components import slice_dimensions
from lcreg.errors import PresentationError
from lcreg.presentation.presentation import (
    build_presentation,
    column_images,
    component_matrix,
    presentation_from_dict,
    presentation_to_dict,
)
from lcreg.presentation.z_basis import z_basis


def test_bases_and_shift(f_lambda):
    p = build_presentation(f_lambda, -4)

    assert p.k == 2
    assert p.target_basis.labels() == ["z1^2", "z1*z2", "z2^2"]
    assert len(p.source_basis) == 4
    assert p.shift == 1
    assert p.bidegree == (1, 1)


def test_component_matrix_entries(f_lambda):
    component = component_matrix(build_presentation(f_lambda, -3), 1)

    assert component.matrix.to_dense() == [
        [1, 0, 0],
        [0, 1, 0],
        [0, 1, 0],
        [0, 0, 1],
    ]
    assert component.row_labels[1] == ((1, 0), (0, 1))
    assert component.col_labels[1] == ((0, 0), (1, 1))


@pytest.mark.parametrize("i", range(5))
def test_shapes_match_the_counts(qq, i):
    g = bipoly_power(lambda_form(2, qq), 2)
    p = build_presentation(g, -4)

    component = component_matrix(p, i)

    assert component.matrix.shape == (p.rows_at(i), p.cols_at(i))


def test_columns_follow_the_multiplier(qq):
    g = parse_bipoly("x1^2*y1 - 3*x2^2*y2", 2, 2, qq)

    images = column_images(build_presentation(g, -2))

    assert images == ["x1^2", "-3*x2^2"]


@pytest.mark.parametrize(
    "g_text,m,n,j",
    [
        ("x1*y1^2 + x2*y1*y2 + x3*y2^2", 3, 2, -3),
        ("x1^2*y1 + x1*x2*y2 + x2^2*y1", 2, 2, -3),
        ("x1*y1 + x2*y2 + x3*y3", 3, 3, -4),
    ],
)
def test_slice_dimensions_match_sympy_rank(qq, g_text, m, n, j):
    p = build_presentation(parse_bipoly(g_text, m, n, qq), j)

    for i in range(4):
        component = component_matrix(p, i)
        dims = slice_dimensions(p, i)
        oracle = sympy.Matrix(component.rows, component.cols, lambda r, c: 0)
        for (r, c), value in component.matrix.entries.items():
            oracle[r, c] = sympy.Rational(value.numerator, value.denominator)

        expected_rank = oracle.rank() if component.cols and component.rows else 0
        assert dims.top == component.rows - expected_rank
        assert dims.sub == component.cols - expected_rank


def test_invalid_components(qq, f_lambda):
    with pytest.raises(PresentationError):
        build_presentation(f_lambda, -1)
    with pytest.raises(PresentationError):
        build_presentation(parse_bipoly("x1^2", 2, 2, qq), -3)


def test_printed_form_rebuilds(qq):
    p = build_presentation(generic_form(2, 2, qq), -3)

    data = presentation_to_dict(p)
    rebuilt = presentation_from_dict(data)

    assert data["bidegree"] == [1, 2]
    assert data["target_basis"] == ["z1", "z2"]
    assert rebuilt.columns == p.columns


def test_tampered_columns_are_rejected(f_lambda):
    data = presentation_to_dict(build_presentation(f_lambda, -3))
    data["columns"] = list(reversed(data["columns"]))

    with pytest.raises(PresentationError):
        presentation_from_dict(data)


def test_z_basis_is_cached_and_validated():
    assert z_basis(3, 2) is z_basis(3, 2)
    assert z_basis(3, 2).index((1, 2)) == 2
    assert (0, 3) in z_basis(3, 2)


@pytest.mark.parametrize("n,j", [(2, -2), (2, -4), (3, -3), (3, -5)])
def test_columns_have_one_entry_per_variable_dividing_the_source(qq, n, j):
    p = build_presentation(lambda_form(n, qq), j)

    for c, column in zip(p.source_basis, p.columns):
        assert len(column) == sum(1 for exponent in c if exponent > 0)
