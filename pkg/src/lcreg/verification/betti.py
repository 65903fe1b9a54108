from math import comb

from lcreg.checks import Check, compare
from lcreg.cohomology.components import cohomology_report
from lcreg.errors import ShapeError
from lcreg.formulas.herzog_kuhl import (
    herzog_kuhl_betti,
    hilbert_series_from_shape,
    hk_multiplicity,
    printed_betti_formula,
    top_cohomology_shape,
    top_multiplicity_formula,
)
from lcreg.presentation.presentation import build_presentation
from lcreg.report import ResultEntry
from lcreg.verification.lefschetz import LefschetzTask, lefschetz_instance
from lcreg.verification.lefschetz import tasks as lefschetz_tasks
from lcreg.verification.params import SuiteParams, ledger_check

PRINTED_SIGN_CAVEAT = (
    "printed_betti is the closed form with sign (-1)^i, reported for comparison only; "
    "verdicts use the Herzog-Kuhl values"
)


def tasks(params: SuiteParams) -> list[LefschetzTask]:
    return lefschetz_tasks(params)


def run_task(task: LefschetzTask) -> list[ResultEntry]:
    """Herzog-Kuhl Betti numbers, multiplicity and Hilbert series against the oracle."""
    n, r, j = task.n, task.r, task.j
    k = -n - j

    f = lefschetz_instance(n, r, task.field, task.lambdas)
    presentation = build_presentation(f, j)
    report = cohomology_report(presentation, task.cap)
    top = report.top

    shape = top_cohomology_shape(n, r, j)
    multiplicity = hk_multiplicity(shape)

    checks: list[Check] = []
    betti: list[int] | None = None
    try:
        betti = herzog_kuhl_betti(shape)
    except ShapeError as e:
        checks.append(Check(f"herzog-kuhl betti j={j}", False, str(e)))

    if betti is not None:
        checks.append(compare(f"beta_1 j={j}", betti[0], comb(-j + r - 1, k + r)))

        euler = shape.beta0 + sum((-1) ** i * beta for i, beta in enumerate(betti, start=1))
        checks.append(compare(f"euler characteristic j={j}", euler, 0))

        try:
            series = hilbert_series_from_shape(shape, betti)
            checks.append(compare(f"hilbert series j={j}", list(top.values), series))
        except ShapeError as e:
            checks.append(Check(f"hilbert series j={j}", False, str(e)))

    checks.append(compare(f"multiplicity j={j}", top.length, multiplicity))
    checks.append(compare(f"multiplicity formula j={j}", top.length, top_multiplicity_formula(n, r, j)))  # noqa: E501
    checks.append(ledger_check(report, presentation))

    extra = {
        "f": str(f),
        "beta0": shape.beta0,
        "twists": list(shape.twists),
        "betti": betti,
        "multiplicity": str(multiplicity),
        "printed_betti": [str(printed_betti_formula(n, r, j, i)) for i in range(2, n + 1)],
    }

    return [ResultEntry.from_report(report, instance=f"betti n={n} r={r}", checks=checks, extra=extra)]  # noqa: E501
