from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from lcreg.algebra.field import FieldSpec, Scalar


@dataclass(frozen=True, eq=False)
class ScalarMatrix:
    """Sparse matrix over a `FieldSpec`.

    Attributes:
        rows (int): Number of rows.
        cols (int): Number of columns.
        entries (Mapping[tuple[int, int], Scalar]): Nonzero entries keyed by `(row, col)`.
        field (FieldSpec): Field all entries belong to.
    """  # noqa: E501

    rows: int
    cols: int
    entries: Mapping[tuple[int, int], Scalar]
    field: FieldSpec

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"invalid shape {self.rows}x{self.cols}")

        cleaned: dict[tuple[int, int], Scalar] = {}
        for (row, col), value in self.entries.items():
            if not (0 <= row < self.rows and 0 <= col < self.cols):
                raise IndexError(f"entry {(row, col)} outside {self.rows}x{self.cols}")
            value = self.field.reduce(value)
            if value != 0:
                cleaned[(row, col)] = value

        object.__setattr__(self, "entries", cleaned)

    @classmethod
    def from_dense(
        cls, values: Sequence[Sequence[int | Scalar]], field: FieldSpec | None = None
    ) -> "ScalarMatrix":
        """Builds a matrix from nested rows.

        Examples:
            >>> ScalarMatrix.from_dense([[1, 2], [0, 3]]).nnz
            3
        """
        field = field or FieldSpec.rationals()
        rows = len(values)
        cols = len(values[0]) if rows else 0
        if any(len(row) != cols for row in values):
            raise ValueError("ragged rows")

        entries = {
            (i, j): field.element(value)
            for i, row in enumerate(values)
            for j, value in enumerate(row)
            if value != 0
        }
        return cls(rows, cols, entries, field)

    @classmethod
    def zero(cls, rows: int, cols: int, field: FieldSpec) -> "ScalarMatrix":
        return cls(rows, cols, {}, field)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def transpose(self) -> "ScalarMatrix":
        return ScalarMatrix(
            self.cols,
            self.rows,
            {(col, row): value for (row, col), value in self.entries.items()},
            self.field,
        )

    def row_dicts(self) -> list[dict[int, Scalar]]:
        """One `{col: value}` map per row."""
        result: list[dict[int, Scalar]] = [{} for _ in range(self.rows)]
        for (row, col), value in self.entries.items():
            result[row][col] = value
        return result

    def to_dense(self) -> list[list[Scalar]]:
        dense = [[self.field.zero()] * self.cols for _ in range(self.rows)]
        for (row, col), value in self.entries.items():
            dense[row][col] = value
        return dense

    def apply(self, vector: Sequence[Scalar]) -> list[Scalar]:
        """Computes `M * vector`."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} does not match {self.cols} columns")

        result = [self.field.zero()] * self.rows
        for (row, col), value in self.entries.items():
            result[row] = self.field.reduce(result[row] + value * vector[col])
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.field, self.entries) == (
            other.rows,
            other.cols,
            other.field,
            other.entries,
        )
