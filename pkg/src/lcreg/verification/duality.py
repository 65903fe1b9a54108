from dataclasses import dataclass

from lcreg.algebra.bipoly import BiPoly, generic_form, lambda_form
from lcreg.cohomology.checks import duality_check
from lcreg.cohomology.components import cohomology_report
from lcreg.presentation.presentation import build_presentation
from lcreg.report import ResultEntry
from lcreg.verification.params import SuiteParams, ledger_check


@dataclass(frozen=True)
class DualityTask:
    instance: str
    f: BiPoly
    j: int
    degree_window: int
    cap: int


def tasks(params: SuiteParams) -> list[DualityTask]:
    grid = params.config.duality
    n = params.n if params.n is not None else grid.n
    instances = [
        (f"generic n={n} d={grid.generic_d}", generic_form(n, grid.generic_d, params.field)),
        (f"sum x_i*y_i n={n}", lambda_form(n, params.field)),
    ]

    return [
        DualityTask(
            instance=label,
            f=f,
            j=j,
            degree_window=grid.degree_window,
            cap=params.config.cap,
        )
        for label, f in instances
        for j in params.j_values(n, grid.j_depth)
    ]


def run_task(task: DualityTask) -> list[ResultEntry]:
    a, _ = task.f.require_bidegree()
    checks = [duality_check(task.f, task.j, i) for i in range(a, a + task.degree_window + 1)]

    presentation = build_presentation(task.f, task.j)
    report = cohomology_report(presentation, task.cap, sub_cap=a + task.degree_window)
    checks.append(ledger_check(report, presentation))

    return [
        ResultEntry.from_report(
            report,
            instance=task.instance,
            checks=checks,
            extra={"f": str(task.f)},
        )
    ]
