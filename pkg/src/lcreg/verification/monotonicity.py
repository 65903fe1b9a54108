"""Monotonicity in j and the dimension bound on pseudo-random bihomogeneous f.

Instance `index` is drawn from `numpy.random.default_rng([seed, index])`, so
it does not depend on which worker draws it.
"""

import logging
from dataclasses import dataclass

import numpy as np

from lcreg.algebra.bipoly import BiPoly, coefficient_ideal
from lcreg.algebra.field import FieldSpec
from lcreg.algebra.monomials import monomials_of_degree
from lcreg.checks import Check
from lcreg.cohomology.checks import dimension_bound_check, monotonicity_check
from lcreg.cohomology.components import cohomology_report
from lcreg.errors import ParameterError
from lcreg.groebner.ideal import is_m_primary
from lcreg.presentation.presentation import build_presentation
from lcreg.report import ResultEntry
from lcreg.verification.params import SuiteParams, ledger_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RandomTask:
    index: int
    n: int
    bidegree: tuple[int, int]
    prime: int
    seed: int
    attempts: int
    js: tuple[int, ...]
    cap: int

    @property
    def instance(self) -> str:
        a, b = self.bidegree
        return f"random #{self.index:02d} n={self.n} bidegree=({a},{b})"


def random_bipoly(
    m: int, n: int, bidegree: tuple[int, int], field: FieldSpec, rng: np.random.Generator
) -> BiPoly:
    """Every monomial of the bidegree with a uniform coefficient in `[0, p)`."""
    a, b = bidegree
    terms = [
        ((x_mono, y_mono), int(rng.integers(field.characteristic)))
        for y_mono in monomials_of_degree(b, n)
        for x_mono in monomials_of_degree(a, m)
    ]
    return BiPoly(field, m, n, terms)


def draw_instance(task: RandomTask) -> BiPoly:
    """Draws until I(f) is primary to (x_1, ..., x_m); here m = n."""
    field = FieldSpec.prime(task.prime)
    rng = np.random.default_rng([task.seed, task.index])

    for attempt in range(task.attempts):
        f = random_bipoly(task.n, task.n, task.bidegree, field, rng)
        if f.bidegree == task.bidegree and is_m_primary(coefficient_ideal(f)):
            return f
        logger.debug("%s: draw %d rejected", task.instance, attempt)

    raise ParameterError(
        f"{task.instance}: no draw with m-primary I(f) in {task.attempts} attempts"
    )


def tasks(params: SuiteParams) -> list[RandomTask]:
    grid = params.config.monotonicity
    n_values = params.n_values(grid.n_values)

    result = []
    for index in range(grid.instances):
        n = n_values[index % len(n_values)]
        a, b = grid.bidegrees[(index // len(n_values)) % len(grid.bidegrees)]
        js = tuple(params.j_values(n, grid.j_depth))
        if not js:
            continue
        result.append(
            RandomTask(
                index=index,
                n=n,
                bidegree=(a, b),
                prime=grid.prime,
                seed=params.seed,
                attempts=grid.attempts,
                js=js,
                cap=params.config.cap,
            )
        )
    return result


def run_task(task: RandomTask) -> list[ResultEntry]:
    try:
        f = draw_instance(task)
    except ParameterError as e:
        logger.warning("%s", e)
        return [
            ResultEntry(
                j=task.js[0],
                instance=task.instance,
                checks=(Check("m-primary draw", False, str(e)),),
            )
        ]

    entries: list[ResultEntry] = []
    for j in task.js:
        presentation = build_presentation(f, j)
        report = cohomology_report(presentation, task.cap)

        checks = dimension_bound_check(f, j, task.cap)
        if j - 1 in task.js:
            checks.extend(monotonicity_check(f, j - 1, j, task.cap))
        checks.append(ledger_check(report, presentation))

        entries.append(
            ResultEntry.from_report(report, instance=task.instance, checks=checks, extra={"f": str(f)})  # noqa: E501
        )

    return entries
