import logging
from collections.abc import Callable
from enum import Enum
from functools import partial
from time import perf_counter
from typing import Any

from rich.progress import Progress

from lcreg.algebra.field import CHAR_P_CAVEAT
from lcreg.errors import ParameterError
from lcreg.report import Report, ResultEntry
from lcreg.verification import betti, bounds, duality, lefschetz, macaulay, monotonicity
from lcreg.verification.params import SuiteParams
from lcreg.worker_pool import map_ordered

logger = logging.getLogger(__name__)


class Suite(str, Enum):
    """Enum defining the verification suites.

    - `lefschetz`: oracle regularity, Hilbert function and H^{n-1} degrees of `(sum lambda_i x_i y_i)^r` against their closed forms.
    - `monotonicity`: Hilbert functions decrease in j, and the dimension bound, on pseudo-random f over a prime field.
    - `macaulay`: Hilb(F/U_j) equals the sum of Hilb(P_0/I_{j,u}).
    - `shift`: I_{j,u} = I_{j-1, z1*u}.
    - `betti`: Herzog-Kuhl Betti numbers, multiplicity and Hilbert series of the Lefschetz family.
    - `bounds`: linear regularity bounds in j.
    - `duality`: H^{n-1} against H^m of the role-swapped polynomial.
    - `all`: every suite above, in this order.
    """  # noqa: E501

    lefschetz = "lefschetz"
    monotonicity = "monotonicity"
    macaulay = "macaulay"
    shift = "shift"
    betti = "betti"
    bounds = "bounds"
    duality = "duality"
    all = "all"


SuiteRunner = tuple[Callable[[SuiteParams], list[Any]], Callable[[Any], list[ResultEntry]]]

SUITE_RUNNERS: dict[Suite, SuiteRunner] = {
    Suite.lefschetz: (lefschetz.tasks, lefschetz.run_task),
    Suite.monotonicity: (monotonicity.tasks, monotonicity.run_task),
    Suite.macaulay: (macaulay.tasks, macaulay.run_macaulay),
    Suite.shift: (macaulay.tasks, macaulay.run_shift),
    Suite.betti: (betti.tasks, betti.run_task),
    Suite.bounds: (bounds.tasks, bounds.run_task),
    Suite.duality: (duality.tasks, duality.run_task),
}


def suite_caveats(suite: Suite, params: SuiteParams) -> list[str]:
    caveats = []
    if suite == Suite.monotonicity:
        caveats.append(CHAR_P_CAVEAT)
    elif params.field.caveat is not None:
        caveats.append(params.field.caveat)
    if suite == Suite.betti:
        caveats.append(betti.PRINTED_SIGN_CAVEAT)
    return caveats


def _advance(progress: Progress, progress_task, _index: int):
    progress.advance(progress_task)


def verify_suite(
    suite: Suite,
    params: SuiteParams,
    threads: int = 1,
    progress: Progress | None = None,
) -> Report:
    """Runs one suite (or all of them) and collects the verdicts.

    Args:
        suite (Suite): Suite to run.
        params (SuiteParams): Grids and overrides.
        threads (int): Worker processes; results do not depend on it.
        progress (Progress | None): Progress display to report to.

    Returns:
        Report whose entries follow the suite order, then the grid order.

    Raises:
        ParameterError: When the j window leaves the requested suite (or, for `all`, every
            suite) without grid points.
    """
    suites = [s for s in Suite if s != Suite.all] if suite == Suite.all else [suite]

    report = Report(config={"suite": suite.value, "params": params.config.to_dict()})
    for name in suites:
        make_tasks, run_task = SUITE_RUNNERS[name]
        tasks = make_tasks(params)
        if not tasks:
            if suite != Suite.all:
                raise ParameterError(f"suite {name.value}: no grid point with j <= -n in the requested window")  # noqa: E501
            logger.warning("suite %s: no grid point in the requested window, skipped", name.value)
            continue
        logger.info("suite %s: %d tasks", name.value, len(tasks))

        on_done = None
        if progress is not None:
            progress_task = progress.add_task(f"[green]{name.value}", total=len(tasks))
            on_done = partial(_advance, progress, progress_task)

        start = perf_counter()
        for entries in map_ordered(run_task, tasks, threads, on_done):
            report.results.extend(entries)
        report.timing[name.value] = round(perf_counter() - start, 3)

        report.caveats.extend(suite_caveats(name, params))

    if not report.results:
        raise ParameterError("no suite has a grid point with j <= -n in the requested window")

    failures = report.failures
    if failures:
        logger.warning("%d failed checks, first: %s", len(failures), failures[0][1].name)

    return report
