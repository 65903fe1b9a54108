from dataclasses import dataclass

from lcreg.algebra.bipoly import BiPoly, generic_form, lambda_form
from lcreg.checks import Check, compare
from lcreg.cohomology.components import cohomology_report
from lcreg.formulas.linear_bounds import BoundKind, LinearBoundReport, linear_bound_fit
from lcreg.presentation.presentation import build_presentation
from lcreg.report import ResultEntry
from lcreg.verification.params import SuiteParams, ledger_check


@dataclass(frozen=True)
class BoundTask:
    instance: str
    f: BiPoly
    kind: BoundKind
    j_lo: int
    j_hi: int
    cap: int
    expected_q: int | None = None


def fit_entries(
    f: BiPoly,
    fit: LinearBoundReport,
    js: list[int],
    instance: str,
    cap: int,
    extra_checks: list[Check] | None = None,
) -> list[ResultEntry]:
    """One entry per j; offset-level checks go on the last one."""
    per_j = dict(zip((j for j, _ in fit.samples), fit.checks))
    overall = list(fit.checks[len(fit.samples):]) + list(extra_checks or [])

    entries = []
    for j in js:
        presentation = build_presentation(f, j)
        report = cohomology_report(presentation, cap)

        checks = [per_j[j]] if j in per_j else []
        checks.append(ledger_check(report, presentation))
        if j == js[-1]:
            checks.extend(overall)

        entries.append(
            ResultEntry.from_report(
                report,
                instance=instance,
                checks=checks,
                extra={
                    "f": str(f),
                    "kind": fit.kind.value,
                    "d": fit.d,
                    "q": fit.q,
                    "bound": fit.bound(f.n, j),
                    "excluded": j in fit.excluded,
                },
            )
        )
    return entries


def tasks(params: SuiteParams) -> list[BoundTask]:
    grid = params.config.bounds
    instances = [
        (
            grid.generic_n,
            grid.generic_j_lo,
            f"generic n={grid.generic_n} d={grid.generic_d}",
            generic_form(grid.generic_n, grid.generic_d, params.field),
            BoundKind.generic,
            None,
        ),
        (
            grid.lefschetz_n,
            grid.lefschetz_j_lo,
            f"sum x_i*y_i n={grid.lefschetz_n}",
            lambda_form(grid.lefschetz_n, params.field),
            BoundKind.general,
            -1,
        ),
    ]

    result = []
    for n, default_lo, instance, f, kind, expected_q in instances:
        if params.n is not None and params.n != n:
            continue

        lo, hi = params.j_range or (default_lo, -n)
        hi = min(hi, -n)
        if lo > hi:
            continue

        result.append(
            BoundTask(
                instance=instance,
                f=f,
                kind=kind,
                j_lo=lo,
                j_hi=hi,
                cap=params.config.cap,
                expected_q=expected_q,
            )
        )

    return result


def run_task(task: BoundTask) -> list[ResultEntry]:
    fit = linear_bound_fit(task.f, task.j_lo, task.j_hi, task.kind, task.cap)

    extra_checks = []
    if task.expected_q is not None:
        extra_checks.append(compare("fitted offset", fit.q, task.expected_q))

    js = list(range(task.j_lo, task.j_hi + 1))
    return fit_entries(task.f, fit, js, task.instance, task.cap, extra_checks)
