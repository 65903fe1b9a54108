"""Structural checks on the cohomology components of one multiplier.

- `monotonicity_check`: Hilb(H^n(R)_{j-1}) >= Hilb(H^n(R)_j) coefficientwise,
  plus reg H^n(R)_{j-1} >= reg H^n(R)_j when both have finite length.
- `dimension_bound_check`: dim H^n(R)_j <= dim P_0/I(g), and finite length
  whenever I(g) is primary to the maximal ideal.
- `duality_check`: the x-degree slice of U_j is the transpose of a slice of
  the presentation with x- and y-variables exchanged.
"""

import logging

from lcreg.algebra.bipoly import BiPoly, coefficient_ideal, swap_roles
from lcreg.checks import Check
from lcreg.cohomology.components import (
    DEFAULT_CAP,
    sub_component_dimension,
    top_component_dimension,
    top_hilbert,
)
from lcreg.errors import ParameterError
from lcreg.groebner.ideal import ideal_gb, krull_dimension
from lcreg.groebner.module import initial_decomposition
from lcreg.presentation.presentation import build_presentation

logger = logging.getLogger(__name__)


def monotonicity_check(
    g: BiPoly, j_lo: int, j_hi: int, cap: int = DEFAULT_CAP
) -> list[Check]:
    """Compares the top Hilbert functions of every adjacent pair in `j_lo..j_hi`.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> [check.passed for check in monotonicity_check(f, -4, -3)]
        [True, True]
    """
    if j_hi > -g.n:
        raise ParameterError(f"j_hi must be at most -n = {-g.n}, got {j_hi}")
    if j_lo > j_hi:
        raise ParameterError(f"empty range {j_lo}..{j_hi}")

    hilbert = {j: top_hilbert(build_presentation(g, j), cap) for j in range(j_lo, j_hi + 1)}

    checks: list[Check] = []
    for j in range(j_lo + 1, j_hi + 1):
        lower, upper = hilbert[j - 1], hilbert[j]
        violation = lower.dominates(upper)
        windowed = not (lower.finite_length and upper.finite_length)

        detail = f"{list(lower.values)} >= {list(upper.values)}"
        if violation is not None:
            detail = f"first violation in degree {violation}: {detail}"
        if windowed:
            detail += " (checked on window)"

        checks.append(Check(f"monotonicity j={j - 1}/{j}", violation is None, detail))

        if not windowed and lower.regularity is not None and upper.regularity is not None:
            checks.append(
                Check(
                    f"regularity monotone j={j - 1}/{j}",
                    lower.regularity >= upper.regularity,
                    f"reg {lower.regularity} >= reg {upper.regularity}",
                )
            )

    return checks


def dimension_bound_check(g: BiPoly, j: int, cap: int = DEFAULT_CAP) -> list[Check]:
    """Bounds the Krull dimension of H^n(R)_j by that of P_0/I(g).

    The dimension of the cokernel is the largest dim P_0/I_{j,u} over the
    initial decomposition, since F/U and F/ini(U) share their Hilbert function.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> f = parse_bipoly("x1^2*y1", 2, 2, FieldSpec.rationals())
        >>> [check.detail for check in dimension_bound_check(f, -2)]
        ['dim coker 1 <= dim P_0/I(f) 1']
    """
    generators = coefficient_ideal(g)
    ideal_dimension = krull_dimension(ideal_gb(generators))

    presentation = build_presentation(g, j)
    decomposition = initial_decomposition(presentation)
    cokernel_dimension = max(
        (krull_dimension(ideal) for _, ideal in decomposition), default=-1
    )

    checks = [
        Check(
            f"dimension bound j={j}",
            cokernel_dimension <= ideal_dimension,
            f"dim coker {cokernel_dimension} <= dim P_0/I(f) {ideal_dimension}",
        )
    ]

    if ideal_dimension == 0:
        hilbert = top_hilbert(presentation, cap)
        checks.append(
            Check(
                f"finite length j={j}",
                hilbert.finite_length,
                f"I(f) m-primary; Hilbert function {list(hilbert.values)}",
            )
        )

    return checks


def duality_check(g: BiPoly, j: int, i: int) -> Check:
    """Matches H^{n-1} of `g` with H^m of the role-swapped polynomial.

    With `(A, B)` the bidegree of `g`, the kernel of U_j in x-degree `i` has the
    dimension of the cokernel of U'_t in degree `s`, where U' is built from
    `swap_roles(g)`, `t = A - m - i` and `s = -n - j + B`.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> duality_check(f, -3, 3).detail
        'dim H^1_j=-3 in degree 3 = 1; swapped dim H^2_t=-4 in degree 2 = 1'
    """
    a, b = g.require_bidegree()
    if a < 1:
        raise ParameterError(f"x-degree of the multiplier must be at least 1, got ({a},{b})")
    if i < a:
        raise ParameterError(f"degree {i} lies below the source shift {a}")

    lhs = sub_component_dimension(build_presentation(g, j), i)

    t = a - g.m - i
    s = -g.n - j + b
    rhs = top_component_dimension(build_presentation(swap_roles(g), t), s)

    logger.debug("duality j=%d i=%d: %d vs %d", j, i, lhs, rhs)

    return Check(
        f"duality j={j} i={i}",
        lhs == rhs,
        f"dim H^{g.n - 1}_j={j} in degree {i} = {lhs}; "
        f"swapped dim H^{g.m}_t={t} in degree {s} = {rhs}",
    )
