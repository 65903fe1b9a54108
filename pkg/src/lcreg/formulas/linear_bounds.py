"""Linear bounds reg H^n(R)_j <= (-n-j+1) d + q, fitted over a window of j.

The offset q is fitted over the sampled window only: it is the smallest
integer for which the bound holds on every sample.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

from lcreg.algebra.bipoly import BiPoly
from lcreg.checks import Check
from lcreg.cohomology.components import DEFAULT_CAP, top_hilbert
from lcreg.errors import ParameterError
from lcreg.presentation.presentation import build_presentation

logger = logging.getLogger(__name__)


class BoundKind(str, Enum):
    """Enum defining which linear bound is fitted.

    - `general`: multiplier of y-degree 1, slope equal to its x-degree.
    - `generic`: multiplier of x-degree 1 (`sum x_beta y^beta`), slope equal to its y-degree, offset at most -1.
    - `linear`: any bidegree `(A, B)`, slope `A * B`.
    """  # noqa: E501

    general = "general"
    generic = "generic"
    linear = "linear"


@dataclass(frozen=True)
class LinearBoundReport:
    """Measured regularities and the fitted offset.

    Attributes:
        kind (BoundKind): Fitted bound.
        d (int): Slope.
        samples (tuple[tuple[int, int], ...]): Pairs `(j, reg H^n(R)_j)` of finite length.
        excluded (tuple[int, ...]): Values of j whose component is not of finite length.
        q (int | None): Smallest offset valid on every sample; `None` without samples.
        checks (tuple[Check, ...]): Per-j bound checks (and `q <= -1` for `generic`).
    """  # noqa: E501

    kind: BoundKind
    d: int
    samples: tuple[tuple[int, int], ...]
    excluded: tuple[int, ...] = ()
    q: int | None = None
    checks: tuple[Check, ...] = field(default=())

    def bound(self, n: int, j: int) -> int | None:
        return None if self.q is None else (-n - j + 1) * self.d + self.q


def slope(g: BiPoly, kind: BoundKind) -> int:
    a, b = g.require_bidegree()
    if kind == BoundKind.general:
        if b != 1:
            raise ParameterError(f"the general bound needs y-degree 1, got ({a},{b})")
        return a
    if kind == BoundKind.generic:
        if a != 1:
            raise ParameterError(f"the generic bound needs x-degree 1, got ({a},{b})")
        return b
    return a * b


def linear_bound_fit(
    g: BiPoly,
    j_lo: int,
    j_hi: int,
    kind: BoundKind = BoundKind.linear,
    cap: int = DEFAULT_CAP,
) -> LinearBoundReport:
    """Measures reg H^n(R)_j for `j_lo <= j <= j_hi` and fits the offset.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> linear_bound_fit(f, -5, -2, BoundKind.general).q
        -1
    """
    n = g.n
    if j_hi > -n:
        raise ParameterError(f"j_hi must be at most -n = {-n}, got {j_hi}")
    if j_lo > j_hi:
        raise ParameterError(f"empty range {j_lo}..{j_hi}")

    d = slope(g, kind)

    samples: list[tuple[int, int]] = []
    excluded: list[int] = []
    for j in range(j_lo, j_hi + 1):
        hilbert = top_hilbert(build_presentation(g, j), cap)
        if not hilbert.finite_length or hilbert.regularity is None:
            excluded.append(j)
            continue
        samples.append((j, hilbert.regularity))

    if excluded:
        logger.warning("excluded j=%s: components not of finite length below cap %d", excluded, cap)  # noqa: E501

    q = max((reg - (-n - j + 1) * d for j, reg in samples), default=None)

    checks: list[Check] = []
    if q is not None:
        for j, reg in samples:
            bound = (-n - j + 1) * d + q
            checks.append(Check(f"linear bound j={j}", reg <= bound, f"reg {reg} <= {bound}"))

    if kind == BoundKind.generic:
        checks.append(
            Check(
                "generic offset",
                q is not None and q <= -1,
                f"fitted q = {q}, expected q <= -1",
            )
        )

    return LinearBoundReport(
        kind=kind,
        d=d,
        samples=tuple(samples),
        excluded=tuple(excluded),
        q=q,
        checks=tuple(checks),
    )
