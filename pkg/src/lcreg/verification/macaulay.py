"""Initial-module checks on f = sum_i x_i y_i.

- macaulay: Hilb(F/U_j) = sum_u Hilb(P_0/I_{j,u}).
- shift: I_{j,u} = I_{j-1, z1*u} for every u in B_{-n-j}, and the basis
  monomials of B_{-n-j+1} free of z1 account for Hilb(H^n_{j-1}) - Hilb(H^n_j).
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from lcreg.algebra.bipoly import lambda_form
from lcreg.algebra.field import FieldSpec
from lcreg.algebra.monomials import format_monomial
from lcreg.checks import Check, compare
from lcreg.cohomology.components import cohomology_report, top_hilbert
from lcreg.cohomology.hilbert import HilbertFunction
from lcreg.groebner.ideal import IdealGB, ideal_equal, quotient_hilbert
from lcreg.groebner.module import IdealDecomposition, initial_decomposition
from lcreg.presentation.presentation import Presentation, build_presentation
from lcreg.report import ResultEntry
from lcreg.verification.params import SuiteParams, ledger_check


@dataclass(frozen=True)
class MacaulayTask:
    n: int
    j: int
    field: FieldSpec
    cap: int

    @property
    def instance(self) -> str:
        return f"sum x_i*y_i n={self.n}"


@lru_cache(maxsize=64)
def decomposition_of(presentation: Presentation) -> IdealDecomposition:
    return initial_decomposition(presentation)


def _summed(ideals: Iterable[IdealGB], cap: int) -> HilbertFunction:
    parts = [quotient_hilbert(ideal, cap) for ideal in ideals]
    finite = all(part.finite_length for part in parts)
    width = max((part.end + 1 for part in parts), default=0)
    values = [sum(part.value(i) for part in parts) for i in range(width)]
    return HilbertFunction.from_scan(values, finite_length=finite)


def summed_quotient_hilbert(decomposition: IdealDecomposition, cap: int) -> HilbertFunction:
    """Degreewise sum of Hilb(P_0/I_{j,u}) over the basis.

    Examples:
        >>> from lcreg.algebra.field import FieldSpec
        >>> from lcreg.algebra.parser import parse_bipoly
        >>> f = parse_bipoly("x1*y1 + x2*y2", 2, 2, FieldSpec.rationals())
        >>> summed_quotient_hilbert(decomposition_of(build_presentation(f, -3)), 60).values
        (2, 1)
    """
    return _summed((ideal for _, ideal in decomposition), cap)


def hilbert_difference(larger: HilbertFunction, smaller: HilbertFunction) -> HilbertFunction:
    """Degreewise `larger - smaller`, on the common window when either is not of finite length.

    Examples:
        >>> hilbert_difference(HilbertFunction((3, 2, 1), True), HilbertFunction((2, 1), True)).values
        (1, 1, 1)
    """  # noqa: E501
    scans = [h for h in (larger, smaller) if not h.finite_length]
    finite = not scans
    width = max(larger.end, smaller.end) + 1 if finite else min(h.end for h in scans) + 1
    values = [larger.value(i) - smaller.value(i) for i in range(width)]
    return HilbertFunction.from_scan(values, finite_length=finite)


def ideal_labels(decomposition: IdealDecomposition) -> dict[str, list[str]]:
    return {format_monomial(u, "z"): ideal.labels() for u, ideal in decomposition}


def macaulay_check(presentation: Presentation, decomposition: IdealDecomposition, cap: int) -> Check:  # noqa: E501
    top = top_hilbert(presentation, cap)
    summed = summed_quotient_hilbert(decomposition, cap)
    return compare(f"macaulay j={presentation.j}", list(top.values), list(summed.values))


def shift_checks(
    previous: IdealDecomposition, current: IdealDecomposition
) -> list[Check]:
    """Compares I_{j,u} with I_{j-1, z1*u}, `previous` being the decomposition of j-1."""
    checks = []
    for u, ideal in current:
        shifted = (u[0] + 1, *u[1:])
        other = previous[shifted]
        checks.append(
            Check(
                f"z1 shift j={current.j} u={format_monomial(u, 'z')}",
                ideal_equal(ideal, other),
                f"{ideal} vs I_{{{previous.j},{format_monomial(shifted, 'z')}}} = {other}",
            )
        )
    return checks


def refinement_check(
    previous: IdealDecomposition,
    top_previous: HilbertFunction,
    top_current: HilbertFunction,
    cap: int,
) -> Check:
    """Sums Hilb(P_0/I_{j-1,v}) over the v of B_{-n-j+1} with no z1 and compares it
    with Hilb(H^n_{j-1}) - Hilb(H^n_j)."""
    leftover = [ideal for v, ideal in previous if v[0] == 0]
    summed = _summed(leftover, cap)
    difference = hilbert_difference(top_previous, top_current)

    name = f"z1-free remainder j={previous.j}/{previous.j + 1}"
    if summed.finite_length and difference.finite_length:
        return compare(name, list(summed.values), list(difference.values))

    width = min(h.end for h in (summed, difference) if not h.finite_length) + 1
    window = f"checked on window 0..{width - 1}"
    check = compare(
        name,
        [summed.value(i) for i in range(width)],
        [difference.value(i) for i in range(width)],
    )
    return Check(check.name, check.passed, f"{check.detail} ({window})")


def tasks(params: SuiteParams) -> list[MacaulayTask]:
    grid = params.config.macaulay
    return [
        MacaulayTask(n=n, j=j, field=params.field, cap=params.config.cap)
        for n in params.n_values(grid.n_values)
        for j in params.j_values(n, grid.j_depth)
    ]


def run_macaulay(task: MacaulayTask) -> list[ResultEntry]:
    presentation = build_presentation(lambda_form(task.n, task.field), task.j)
    decomposition = decomposition_of(presentation)
    report = cohomology_report(presentation, task.cap)

    return [
        ResultEntry.from_report(
            report,
            instance=task.instance,
            checks=[
                macaulay_check(presentation, decomposition, task.cap),
                ledger_check(report, presentation),
            ],
            extra={"ideals": ideal_labels(decomposition)},
        )
    ]


def run_shift(task: MacaulayTask) -> list[ResultEntry]:
    f = lambda_form(task.n, task.field)
    presentation = build_presentation(f, task.j)
    previous_presentation = build_presentation(f, task.j - 1)
    current = decomposition_of(presentation)
    previous = decomposition_of(previous_presentation)
    report = cohomology_report(presentation, task.cap)

    checks = shift_checks(previous, current)
    checks.append(
        refinement_check(previous, top_hilbert(previous_presentation, task.cap), report.top, task.cap)  # noqa: E501
    )
    checks.append(ledger_check(report, presentation))

    return [
        ResultEntry.from_report(
            report,
            instance=task.instance,
            checks=checks,
            extra={"ideals": ideal_labels(current)},
        )
    ]
