"""The graded matrix U_j presenting the top local cohomology component.

For a bihomogeneous multiplier `g` of bidegree `(A, B)` and `k = -n - j`, the
component H^n(R)_j is the cokernel of the map

    F_source = (+)_{c in B_{k+B}} P_0(-A) z^c  -->  F_target = (+)_{t in B_k} P_0 z^t,
    z^c  |-->  sum_{beta <= c} g_beta * z^(c - beta),

and H^{n-1}(R)_j is its kernel. Both free modules are graded by x-degree, so each
x-degree `i` gives one scalar matrix (`component_matrix`).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from lcreg.algebra import monomials
from lcreg.algebra.bipoly import BiPoly, format_bipoly, y_coefficients
from lcreg.algebra.field import FieldSpec, Scalar
from lcreg.algebra.monomials import Monomial
from lcreg.algebra.parser import parse_bipoly
from lcreg.algebra.poly import Poly, format_terms
from lcreg.errors import PresentationError
from lcreg.linalg.matrix import ScalarMatrix
from lcreg.presentation.z_basis import ZBasis, z_basis

logger = logging.getLogger(__name__)

Column = tuple[tuple[Monomial, Poly], ...]
Label = tuple[Monomial, Monomial]


@dataclass(frozen=True)
class Presentation:
    """Columns of U_j, one per source basis element.

    Attributes:
        g (BiPoly): The multiplier, `f` or a power of it, of bidegree `(A, B)`.
        j (int): Component index, at most `-n`.
        target_basis (ZBasis): B_k with `k = -n - j`.
        source_basis (ZBasis): B_{k+B}.
        columns (tuple[Column, ...]): For each source monomial `z^c`, the pairs
            `(z^(c - beta), g_beta)` with `beta <= c`, in target order.
        shift (int): The x-degree `A` of the source generators.
    """

    g: BiPoly
    j: int
    target_basis: ZBasis
    source_basis: ZBasis
    columns: tuple[Column, ...]
    shift: int

    @property
    def m(self) -> int:
        return self.g.m

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def k(self) -> int:
        return -self.n - self.j

    @property
    def field(self) -> FieldSpec:
        return self.g.field

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.shift, self.source_basis.degree - self.target_basis.degree

    def rows_at(self, i: int) -> int:
        return len(monomials.monomials_of_degree(i, self.m)) * len(self.target_basis)

    def cols_at(self, i: int) -> int:
        return len(monomials.monomials_of_degree(i - self.shift, self.m)) * len(
            self.source_basis
        )


def build_presentation(g: BiPoly, j: int) -> Presentation:
    """Builds U_j for the multiplier `g`.

    Args:
        g (BiPoly): Bihomogeneous polynomial of bidegree `(A, B)` with `B >= 1`.
        j (int): Component index, at most `-n`.

    Returns:
        The presentation, with columns `z^c -> sum_{beta <= c} g_beta z^(c - beta)`.

    Examples:
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> p = build_presentation(f, -3)
        >>> (p.target_basis.labels(), p.source_basis.labels())
        (['z1', 'z2'], ['z1^2', 'z1*z2', 'z2^2'])
        >>> column_images(p)
        ['x1*z1', 'x2*z1 + x1*z2', 'x2*z2']
    """
    a, b = g.require_bidegree()
    if b < 1:
        raise PresentationError(f"y-degree of the multiplier must be at least 1, got ({a},{b})")

    n = g.n
    if j > -n:
        raise PresentationError(f"component is zero for j > -n (j={j}, n={n})")

    k = -n - j
    target = z_basis(k, n)
    source = z_basis(k + b, n)
    coefficients = y_coefficients(g)

    columns: list[Column] = []
    for c in source:
        entries = [
            (monomials.sub(c, beta), f_beta)
            for beta, f_beta in coefficients.items()
            if monomials.divides(beta, c)
        ]
        entries.sort(key=lambda entry: target.index(entry[0]))
        columns.append(tuple(entries))

    logger.debug(
        "built U_%d: %d target and %d source generators, shift %d",
        j,
        len(target),
        len(source),
        a,
    )

    return Presentation(
        g=g,
        j=j,
        target_basis=target,
        source_basis=source,
        columns=tuple(columns),
        shift=a,
    )


@lru_cache(maxsize=None)
def _x_positions(degree: int, m: int) -> dict[Monomial, int]:
    return {mono: i for i, mono in enumerate(monomials.monomials_of_degree(degree, m))}


@dataclass(frozen=True, eq=False)
class ComponentMatrix:
    """The x-degree `i` slice of U_j.

    Rows are indexed by `(x^u, z^t)` with `|u| = i`, columns by `(x^v, z^c)` with
    `|v| = i - A`; both x-major, each factor lexicographically descending.
    """

    i: int
    matrix: ScalarMatrix
    row_labels: tuple[Label, ...]
    col_labels: tuple[Label, ...]

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def cols(self) -> int:
        return self.matrix.cols


def component_matrix(presentation: Presentation, i: int) -> ComponentMatrix:
    """Scalar matrix of multiplication by `g` from source to target in x-degree `i`.

    Examples:
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> p = build_presentation(f, -3)
        >>> [component_matrix(p, i).matrix.shape for i in range(3)]
        [(2, 0), (4, 3), (6, 6)]
    """
    m = presentation.m
    target = presentation.target_basis
    source = presentation.source_basis

    x_rows = monomials.monomials_of_degree(i, m)
    x_cols = monomials.monomials_of_degree(i - presentation.shift, m)
    row_positions = _x_positions(i, m)

    entries: dict[tuple[int, int], Scalar] = {}
    for v_index, v in enumerate(x_cols):
        for c_index, column in enumerate(presentation.columns):
            col = v_index * len(source) + c_index
            for t, f_beta in column:
                t_index = target.index(t)
                for mono, coeff in f_beta.items():
                    u = monomials.add(v, mono)
                    row = row_positions[u] * len(target) + t_index
                    entries[(row, col)] = entries.get((row, col), 0) + coeff

    matrix = ScalarMatrix(
        rows=len(x_rows) * len(target),
        cols=len(x_cols) * len(source),
        entries=entries,
        field=presentation.field,
    )

    return ComponentMatrix(
        i=i,
        matrix=matrix,
        row_labels=tuple((u, t) for u in x_rows for t in target),
        col_labels=tuple((v, c) for v in x_cols for c in source),
    )


def column_images(presentation: Presentation) -> list[str]:
    """Prints each column as a polynomial in the x- and z-variables."""
    images: list[str] = []
    for column in presentation.columns:
        terms = []
        for t, f_beta in column:
            z_text = monomials.format_monomial(t, "z")
            for x_mono, coeff in sorted(f_beta.items(), reverse=True):
                x_text = monomials.format_monomial(x_mono, "x")
                parts = [text for text in (x_text, z_text) if text != "1"]
                terms.append(("*".join(parts) or "1", coeff))
        images.append(format_terms(terms, presentation.field))
    return images


def presentation_to_dict(presentation: Presentation) -> dict[str, Any]:
    """Printed form of a presentation, as embedded in JSON reports."""
    g = presentation.g
    return {
        "f": format_bipoly(g),
        "m": g.m,
        "n": g.n,
        "field": presentation.field.label,
        "j": presentation.j,
        "bidegree": list(presentation.bidegree),
        "target_basis": presentation.target_basis.labels(),
        "source_basis": presentation.source_basis.labels(),
        "columns": column_images(presentation),
    }


def presentation_from_dict(data: dict[str, Any]) -> Presentation:
    """Rebuilds a presentation from `presentation_to_dict` output."""
    field = FieldSpec.parse(data["field"])
    g = parse_bipoly(data["f"], data["m"], data["n"], field, require_bihomogeneous=True)
    presentation = build_presentation(g, data["j"])

    if column_images(presentation) != list(data["columns"]):
        raise PresentationError("printed columns do not match the multiplier")

    return presentation
