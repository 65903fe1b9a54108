from fractions import Fraction

import pytest

from lcreg.algebra.field import FieldSpec
from lcreg.linalg.matrix import ScalarMatrix


def test_from_dense_drops_zeros():
    matrix = ScalarMatrix.from_dense([[0, 1, 0], [2, 0, 0]])

    assert matrix.shape == (2, 3)
    assert matrix.nnz == 2
    assert matrix.to_dense() == [[0, 1, 0], [2, 0, 0]]


def test_entries_are_reduced_into_the_field():
    matrix = ScalarMatrix.from_dense([[7, 8]], FieldSpec.prime(7))

    assert matrix.entries == {(0, 1): 1}


def test_transpose_and_apply():
    matrix = ScalarMatrix.from_dense([[1, 2, 3], [4, 5, 6]])

    assert matrix.transpose().to_dense() == [[1, 4], [2, 5], [3, 6]]
    assert matrix.apply([1, 0, Fraction(1, 3)]) == [2, 6]


def test_row_dicts():
    matrix = ScalarMatrix.from_dense([[0, 3], [0, 0]])

    assert matrix.row_dicts() == [{1: 3}, {}]


def test_invalid_input():
    with pytest.raises(ValueError):
        ScalarMatrix.from_dense([[1, 2], [3]])
    with pytest.raises(IndexError):
        ScalarMatrix(1, 1, {(1, 0): 1}, FieldSpec.rationals())
    with pytest.raises(ValueError):
        ScalarMatrix.from_dense([[1, 2]]).apply([1])


def test_empty_shapes():
    assert ScalarMatrix.zero(0, 3, FieldSpec.rationals()).to_dense() == []
    assert ScalarMatrix.zero(2, 0, FieldSpec.rationals()).to_dense() == [[], []]
