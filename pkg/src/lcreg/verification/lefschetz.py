"""Oracle against closed forms for f = (sum_i lambda_i x_i y_i)^r, m = n."""

from dataclasses import dataclass

from lcreg.algebra.bipoly import BiPoly, bipoly_power, lambda_form
from lcreg.algebra.field import FieldSpec
from lcreg.checks import Check, compare
from lcreg.cohomology.components import (
    CohomologyReport,
    cohomology_report,
    sub_component_dimension,
)
from lcreg.formulas.lefschetz import (
    lefschetz_hilbert,
    lefschetz_regularity,
    sub_regularity,
)
from lcreg.presentation.presentation import Presentation, build_presentation
from lcreg.report import ResultEntry
from lcreg.verification.params import SuiteParams, ledger_check


@dataclass(frozen=True)
class LefschetzTask:
    n: int
    r: int
    j: int
    field: FieldSpec
    cap: int
    lambdas: tuple[int, ...] | None = None

    @property
    def instance(self) -> str:
        return f"lefschetz n={self.n} r={self.r}"


def lefschetz_instance(
    n: int, r: int, field: FieldSpec, lambdas: tuple[int, ...] | None = None
) -> BiPoly:
    """`(sum_i lambda_i x_i y_i)^r`.

    Examples:
        >>> str(lefschetz_instance(2, 2, FieldSpec.rationals()))
        'x1^2*y1^2 + 2*x1*x2*y1*y2 + x2^2*y2^2'
    """
    return bipoly_power(lambda_form(n, field, lambdas), r)


def formula_checks(
    n: int, r: int, presentation: Presentation, report: CohomologyReport
) -> list[Check]:
    """Regularity, Hilbert function and H^{n-1} degrees against their closed forms."""
    j = presentation.j
    k = -n - j
    regularity = lefschetz_regularity(n, r, j)

    last = report.top.end if not report.top.finite_length else max(report.top.end, regularity) + 1
    oracle = [report.top.value(i) for i in range(last + 1)]
    formula = [lefschetz_hilbert(n, r, j, i) for i in range(last + 1)]

    return [
        compare(f"regularity j={j}", report.top.regularity, regularity),
        compare(f"hilbert j={j}", oracle, formula),
        compare(f"sub first nonzero j={j}", report.first_nonzero_sub, sub_regularity(n, r, j)),  # noqa: E501
        compare(f"sub degree {k + r} j={j}", sub_component_dimension(presentation, k + r), 0),  # noqa: E501
    ]


def tasks(params: SuiteParams) -> list[LefschetzTask]:
    grid = params.config.lefschetz
    r_values = [params.r] if params.r is not None else grid.r_values

    return [
        LefschetzTask(
            n=n,
            r=r,
            j=j,
            field=params.field,
            cap=params.config.cap,
            lambdas=params.lefschetz_lambdas(n),
        )
        for n in params.n_values(grid.n_values)
        for r in r_values
        for j in params.j_values(n, grid.j_depth)
    ]


def run_task(task: LefschetzTask) -> list[ResultEntry]:
    f = lefschetz_instance(task.n, task.r, task.field, task.lambdas)
    presentation = build_presentation(f, task.j)
    report = cohomology_report(presentation, task.cap)

    checks = formula_checks(task.n, task.r, presentation, report)
    checks.append(ledger_check(report, presentation))

    return [
        ResultEntry.from_report(
            report,
            instance=task.instance,
            checks=checks,
            extra={"f": str(f)},
        )
    ]
