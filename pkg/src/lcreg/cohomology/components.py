"""Hilbert functions of H^n(R)_j (cokernel of U_j) and H^{n-1}(R)_j (kernel of U_j).

Every value comes from the rank of one x-degree slice of U_j:

    dim H^n(R)_{j,i}     = rows_i - rank_i
    dim H^{n-1}(R)_{j,i} = cols_i - rank_i
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from lcreg.cohomology.hilbert import HilbertFunction
from lcreg.errors import ParameterError
from lcreg.linalg.elimination import rank
from lcreg.presentation.presentation import Presentation, component_matrix

logger = logging.getLogger(__name__)

DEFAULT_CAP = 60
SUB_WINDOW = 8


@dataclass(frozen=True)
class SliceDimensions:
    """Ranks and dimensions of one x-degree slice.

    Attributes:
        i (int): x-degree.
        rows (int): Dimension of the target slice.
        cols (int): Dimension of the source slice.
        rank (int): Rank of the slice matrix.
    """

    i: int
    rows: int
    cols: int
    rank: int

    @property
    def top(self) -> int:
        return self.rows - self.rank

    @property
    def sub(self) -> int:
        return self.cols - self.rank


def expected_shape(presentation: Presentation, i: int) -> tuple[int, int]:
    """Binomial counts of the target and source slices in x-degree `i`."""
    m = presentation.m
    rows = comb(m + i - 1, m - 1) * len(presentation.target_basis)
    shifted = i - presentation.shift
    cols = comb(m + shifted - 1, m - 1) * len(presentation.source_basis) if shifted >= 0 else 0
    return rows, cols


@lru_cache(maxsize=4096)
def slice_dimensions(presentation: Presentation, i: int) -> SliceDimensions:
    """Ranks the degree-`i` slice, checking its shape against the binomial counts."""
    if i < 0:
        raise ParameterError(f"x-degree must be nonnegative, got {i}")

    component = component_matrix(presentation, i)
    rows, cols = component.matrix.shape

    assert (rows, cols) == expected_shape(presentation, i), "slice shape mismatch"

    result = SliceDimensions(i=i, rows=rows, cols=cols, rank=rank(component.matrix))
    logger.debug("j=%d i=%d: %dx%d of rank %d", presentation.j, i, rows, cols, result.rank)
    return result


def top_component_dimension(presentation: Presentation, i: int) -> int:
    """dim_K of H^n(R)_j in x-degree `i`.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> from lcreg.presentation.presentation import build_presentation
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> p = build_presentation(f, -3)
        >>> [top_component_dimension(p, i) for i in range(3)]
        [2, 1, 0]
    """
    return slice_dimensions(presentation, i).top


def sub_component_dimension(presentation: Presentation, i: int) -> int:
    """dim_K of H^{n-1}(R)_j in x-degree `i`.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> from lcreg.presentation.presentation import build_presentation
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> p = build_presentation(f, -3)
        >>> [sub_component_dimension(p, i) for i in (0, 2, 3)]
        [0, 0, 1]
    """
    return slice_dimensions(presentation, i).sub


def top_hilbert(presentation: Presentation, cap: int = DEFAULT_CAP) -> HilbertFunction:
    """Hilbert function of H^n(R)_j, scanned from degree 0.

    The cokernel is generated in x-degree 0, so the first zero ends the scan.
    Reaching `cap` without a zero marks the component as not of finite length.
    """
    values: list[int] = []
    for i in range(cap + 1):
        value = top_component_dimension(presentation, i)
        values.append(value)
        if value == 0:
            return HilbertFunction.from_scan(values, finite_length=True)

    logger.warning(
        "H^n component j=%d still nonzero at degree cap %d; reporting it as not of finite length",  # noqa: E501
        presentation.j,
        cap,
    )
    return HilbertFunction.from_scan(values, finite_length=False)


def sub_hilbert(presentation: Presentation, cap: int) -> HilbertFunction:
    """Window `shift..cap` of the Hilbert function of H^{n-1}(R)_j."""
    start = presentation.shift
    values = [sub_component_dimension(presentation, i) for i in range(start, cap + 1)]
    return HilbertFunction(values=tuple(values), finite_length=False, start=start)


def first_nonzero_sub_degree(presentation: Presentation, cap: int = DEFAULT_CAP) -> int | None:
    """Least degree `i <= cap` where H^{n-1}(R)_j is nonzero.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> from lcreg.presentation.presentation import build_presentation
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> first_nonzero_sub_degree(build_presentation(f, -3))
        3
    """
    if cap < presentation.shift:
        raise ParameterError(f"cap {cap} lies below the source shift {presentation.shift}")

    for i in range(presentation.shift, cap + 1):
        if sub_component_dimension(presentation, i) > 0:
            return i
    return None


def default_sub_cap(presentation: Presentation, top: HilbertFunction) -> int:
    """End of the H^{n-1} window: one past the top regularity plus the shift."""
    reach = top.end + 1 if top.finite_length else SUB_WINDOW
    return presentation.shift + max(reach, 1)


@dataclass(frozen=True)
class CohomologyReport:
    """Both cohomology components of one j, with the per-degree ledger.

    Attributes:
        j (int): Component index.
        top (HilbertFunction): H^n(R)_j.
        sub (HilbertFunction): Window of H^{n-1}(R)_j.
        first_nonzero_sub (int | None): First degree where H^{n-1}(R)_j is nonzero.
        caveat (str | None): Field-characteristic caveat.
        ledger (tuple[SliceDimensions, ...]): Slices behind the values.
    """

    j: int
    top: HilbertFunction
    sub: HilbertFunction
    first_nonzero_sub: int | None
    caveat: str | None = None
    ledger: tuple[SliceDimensions, ...] = field(default=(), repr=False)

    def ledger_violations(self, presentation: Presentation) -> list[int]:
        """Degrees where `sub_i - cols_i + rows_i - top_i != 0` fails."""
        violations = []
        for entry in self.ledger:
            rows, cols = expected_shape(presentation, entry.i)
            top_known = entry.i <= self.top.end or self.top.finite_length
            sub_known = self.sub.start <= entry.i <= self.sub.end
            top = self.top.value(entry.i) if top_known else entry.top
            sub = self.sub.value(entry.i) if sub_known else entry.sub
            if sub - cols + rows - top != 0:
                violations.append(entry.i)
        return violations


def cohomology_report(
    presentation: Presentation,
    cap: int = DEFAULT_CAP,
    sub_cap: int | None = None,
) -> CohomologyReport:
    """Computes top Hilbert function, H^{n-1} window and first nonzero H^{n-1} degree."""
    top = top_hilbert(presentation, cap)
    sub_cap = sub_cap if sub_cap is not None else default_sub_cap(presentation, top)
    sub = sub_hilbert(presentation, sub_cap)
    first = next((sub.start + k for k, value in enumerate(sub.values) if value), None)

    highest = max(top.end + 1 if top.finite_length else top.end, sub_cap)
    ledger = tuple(slice_dimensions(presentation, i) for i in range(highest + 1))

    return CohomologyReport(
        j=presentation.j,
        top=top,
        sub=sub,
        first_nonzero_sub=first,
        caveat=presentation.field.caveat,
        ledger=ledger,
    )
