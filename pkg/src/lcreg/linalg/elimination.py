"""Exact Gaussian elimination over the rationals and prime fields.

A matrix is first split into the connected components of its row/column
incidence graph. Each block is then reduced to echelon form:

- over the rationals with fraction-free integer row operations, dividing every
  new row by the gcd of its entries;
- over a prime field with sparse row operations, or with a dense numpy kernel
  once a block has more than `DENSE_THRESHOLD` cells.

The set of leading columns of an echelon form only depends on the row space,
so `rank_profile` is independent of the order in which rows are processed.
"""

import logging
from dataclasses import dataclass
from math import gcd, lcm

import numpy as np

from lcreg.algebra.field import FieldSpec, Scalar
from lcreg.linalg.matrix import ScalarMatrix

logger = logging.getLogger(__name__)

DENSE_THRESHOLD = 2500

Row = dict[int, Scalar]


@dataclass(frozen=True)
class Block:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    @property
    def cells(self) -> int:
        return len(self.rows) * len(self.cols)


@dataclass(frozen=True)
class Echelon:
    """Echelon form of a matrix, one row per pivot column.

    Attributes:
        rank (int): Number of pivots.
        pivots (tuple[int, ...]): Pivot columns in increasing order.
        rows (dict[int, Row]): Row whose leading column is the key.
    """

    rank: int
    pivots: tuple[int, ...]
    rows: dict[int, Row]


def blocks(matrix: ScalarMatrix) -> list[Block]:
    """Splits the nonzero pattern into connected row/column blocks.

    Rows and columns without entries belong to no block.

    Examples:
        >>> m = ScalarMatrix.from_dense([[1, 0, 0], [0, 0, 2], [0, 0, 3]])
        >>> [(b.rows, b.cols) for b in blocks(m)]
        [((0,), (0,)), ((1, 2), (2,))]
    """
    parent: dict[int, int] = {}

    def find(node: int) -> int:
        parent.setdefault(node, node)
        while parent[node] != node:
            parent[node] = parent[parent[node]]
            node = parent[node]
        return node

    offset = matrix.rows
    for row, col in matrix.entries:
        a, b = find(row), find(offset + col)
        if a != b:
            parent[max(a, b)] = min(a, b)

    grouped: dict[int, tuple[list[int], list[int]]] = {}
    for node in sorted(parent):
        rows, cols = grouped.setdefault(find(node), ([], []))
        if node < offset:
            rows.append(node)
        else:
            cols.append(node - offset)

    result = [Block(tuple(rows), tuple(cols)) for rows, cols in grouped.values()]
    return sorted(result, key=lambda block: block.cols[0])


# rationals ------------------------------------------------------------------


def _integer_row(row: Row) -> dict[int, int]:
    scale = lcm(*(value.denominator for value in row.values()))
    return {col: int(value * scale) for col, value in row.items()}


def _primitive(row: dict[int, int]) -> dict[int, int]:
    content = gcd(*row.values())
    lead = row[min(row)]
    if lead < 0:
        content = -content
    if content == 1:
        return row
    return {col: value // content for col, value in row.items()}


def _eliminate_rational(rows: list[Row]) -> dict[int, dict[int, int]]:
    pivots: dict[int, dict[int, int]] = {}
    for row in sorted(map(_integer_row, rows), key=lambda r: (len(r), min(r))):
        row = _primitive(row)
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                pivots[lead] = row
                break

            a, b = pivot[lead], row[lead]
            common = gcd(a, b)
            a, b = a // common, b // common

            combined = {col: a * value for col, value in row.items()}
            for col, value in pivot.items():
                new = combined.get(col, 0) - b * value
                if new:
                    combined[col] = new
                else:
                    combined.pop(col, None)

            row = _primitive(combined) if combined else combined

    return pivots


# prime fields ---------------------------------------------------------------


def _eliminate_modular(rows: list[Row], p: int) -> dict[int, Row]:
    pivots: dict[int, Row] = {}
    for row in sorted(rows, key=lambda r: (len(r), min(r))):
        row = dict(row)
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                inverse = pow(row[lead], -1, p)
                pivots[lead] = {col: value * inverse % p for col, value in row.items()}
                break

            factor = row[lead]
            for col, value in pivot.items():
                new = (row.get(col, 0) - factor * value) % p
                if new:
                    row[col] = new
                else:
                    row.pop(col, None)

    return pivots


def _rref_dense_modular(array: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    array = array % p
    n_rows, n_cols = array.shape
    pivot_cols: list[int] = []

    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break

        nonzero = np.nonzero(array[r:, c])[0]
        if nonzero.size == 0:
            continue

        pivot = r + int(nonzero[0])
        if pivot != r:
            array[[r, pivot]] = array[[pivot, r]]

        array[r] = array[r] * pow(int(array[r, c]), -1, p) % p

        column = array[:, c].copy()
        column[r] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            array[targets] = (array[targets] - np.outer(column[targets], array[r])) % p

        pivot_cols.append(c)
        r += 1

    return array[:r], pivot_cols


def _eliminate_dense_modular(rows: list[Row], block: Block, p: int) -> dict[int, Row]:
    col_index = {col: i for i, col in enumerate(block.cols)}

    array = np.zeros((len(block.rows), len(block.cols)), dtype=np.int64)
    for i, row in enumerate(rows):
        for col, value in row.items():
            array[i, col_index[col]] = value

    reduced, pivot_cols = _rref_dense_modular(array, p)

    pivots: dict[int, Row] = {}
    for local_row, local_col in enumerate(pivot_cols):
        nonzero = np.nonzero(reduced[local_row])[0]
        pivots[block.cols[local_col]] = {
            block.cols[int(k)]: int(reduced[local_row, k]) for k in nonzero
        }

    return pivots


# public API -----------------------------------------------------------------


def echelon(matrix: ScalarMatrix) -> Echelon:
    """Computes an echelon form block by block."""
    field = matrix.field
    row_dicts = matrix.row_dicts()
    pivots: dict[int, Row] = {}

    parts = blocks(matrix)
    for block in parts:
        rows = [row_dicts[i] for i in block.rows]
        if field.is_rational:
            pivots.update(_eliminate_rational(rows))
        elif block.cells > DENSE_THRESHOLD:
            pivots.update(_eliminate_dense_modular(rows, block, field.characteristic))
        else:
            pivots.update(_eliminate_modular(rows, field.characteristic))

    logger.debug(
        "eliminated %dx%d matrix over %s in %d blocks: rank %d",
        matrix.rows,
        matrix.cols,
        field.label,
        len(parts),
        len(pivots),
    )

    return Echelon(rank=len(pivots), pivots=tuple(sorted(pivots)), rows=pivots)


def rank(matrix: ScalarMatrix) -> int:
    """Rank over the matrix's field.

    Examples:
        >>> rank(ScalarMatrix.from_dense([[1, 2], [2, 4]]))
        1
        >>> rank(ScalarMatrix.from_dense([[1, 2], [2, 1]], FieldSpec.prime(3)))
        1
    """
    return echelon(matrix).rank


def rank_profile(matrix: ScalarMatrix) -> tuple[int, list[int]]:
    """Rank together with the pivot columns in increasing order.

    Examples:
        >>> rank_profile(ScalarMatrix.from_dense([[0, 1], [0, 2]]))
        (1, [1])
        >>> rank_profile(ScalarMatrix.from_dense([[1, 2, 3], [2, 4, 6]]))
        (1, [0])
    """
    form = echelon(matrix)
    return form.rank, list(form.pivots)


def _reduced_rows(form: Echelon, field: FieldSpec) -> dict[int, Row]:
    reduced: dict[int, Row] = {}
    for lead in sorted(form.pivots, reverse=True):
        row = form.rows[lead]
        inverse = field.inverse(field.reduce(row[lead]))
        row = {col: field.reduce(value * inverse) for col, value in row.items()}

        for col in [c for c in row if c != lead and c in reduced]:
            factor = row.get(col)
            if not factor:
                continue
            for other_col, value in reduced[col].items():
                new = field.reduce(row.get(other_col, 0) - factor * value)
                if new:
                    row[other_col] = new
                else:
                    row.pop(other_col, None)

        reduced[lead] = row

    return reduced


def kernel_basis(matrix: ScalarMatrix) -> list[list[Scalar]]:
    """Basis of the right null space, one vector per non-pivot column.

    Examples:
        >>> kernel_basis(ScalarMatrix.from_dense([[1, 1]]))
        [[Fraction(-1, 1), Fraction(1, 1)]]
    """
    field = matrix.field
    form = echelon(matrix)
    reduced = _reduced_rows(form, field)

    by_column: dict[int, list[tuple[int, Scalar]]] = {}
    for lead, row in reduced.items():
        for col, value in row.items():
            if col != lead:
                by_column.setdefault(col, []).append((lead, value))

    pivot_set = set(form.pivots)
    basis: list[list[Scalar]] = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = [field.zero()] * matrix.cols
        vector[free] = field.one()
        for lead, value in by_column.get(free, ()):
            vector[lead] = field.reduce(-value)
        basis.append(vector)

    assert len(basis) == matrix.cols - form.rank, "rank-nullity violated"
    return basis


def nullity(matrix: ScalarMatrix) -> int:
    return matrix.cols - rank(matrix)
