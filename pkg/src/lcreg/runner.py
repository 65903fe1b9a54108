"""Dispatch of the CLI commands onto the library.

`run` never prints; it returns a `Report` whose JSON form depends only on the
configuration (timings aside).
"""

import dataclasses
import logging
from enum import Enum
from functools import partial
from pathlib import Path
from time import perf_counter
from typing import Any

from rich.progress import Progress

from lcreg.algebra.bipoly import BiPoly, bipoly_power, lambda_form
from lcreg.algebra.field import FieldSpec
from lcreg.algebra.parser import parse_bipoly
from lcreg.cohomology.components import DEFAULT_CAP, cohomology_report
from lcreg.errors import ParameterError
from lcreg.formulas.linear_bounds import BoundKind, linear_bound_fit
from lcreg.groebner.module import initial_decomposition
from lcreg.presentation.presentation import build_presentation
from lcreg.report import Report, ResultEntry
from lcreg.verification import betti
from lcreg.verification.bounds import fit_entries
from lcreg.verification.lefschetz import LefschetzTask, formula_checks
from lcreg.verification.macaulay import ideal_labels, macaulay_check
from lcreg.verification.params import SuiteParams, ledger_check
from lcreg.verification.suites import Suite, verify_suite
from lcreg.verify_config import VerifyConfig
from lcreg.worker_pool import map_ordered

logger = logging.getLogger(__name__)


class Command(str, Enum):
    """Enum defining the commands `run` dispatches."""

    hilbert = "hilbert"
    regularity = "regularity"
    initial = "initial"
    betti = "betti"
    bound = "bound"
    verify = "verify"


class OutputFormat(str, Enum):
    """Enum defining the report formats."""

    json = "json"
    csv = "csv"


def parse_j_range(text: str) -> tuple[int, int]:
    """Reads the inclusive range `a..b`.

    Examples:
        >>> parse_j_range("-6..-2")
        (-6, -2)
        >>> parse_j_range("-3")
        (-3, -3)
    """
    lo_text, separator, hi_text = text.strip().partition("..")
    try:
        lo = int(lo_text)
        hi = int(hi_text) if separator else lo
    except ValueError:
        raise ParameterError(f"j-range must look like a..b, got {text!r}") from None

    if lo > hi:
        raise ParameterError(f"empty j-range {text!r}: need a <= b")

    return lo, hi


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Everything a command needs; the report echoes it.

    When `f` is omitted the polynomial is `(sum lambda_i x_i y_i)^r` with `m = n`.

    Attributes:
        command (Command): What to compute.
        f (str | None): Polynomial text in x1..xm, y1..yn.
        m (int | None): Number of x-variables.
        n (int | None): Number of y-variables.
        r (int | None): Power of the Lefschetz form; 1 when omitted.
        j (int | None): Single component index.
        j_range (tuple[int, int] | None): Inclusive range of component indices.
        field (FieldSpec): Coefficient field.
        cap (int): Degree cap of the Hilbert scans.
        threads (int): Worker processes.
        output (Path | None): Report destination; standard output when `None`.
        format (OutputFormat): Report format.
        seed (int): Seed of the pseudo-random verification instances.
        lambdas (tuple[int, ...] | None): Coefficients of the Lefschetz form.
        suite (Suite | None): Verification suite.
        kind (BoundKind): Linear bound to fit.
        verify_config (VerifyConfig): Verification grids.
    """  # noqa: E501

    command: Command
    f: str | None = None
    m: int | None = None
    n: int | None = None
    r: int | None = None
    j: int | None = None
    j_range: tuple[int, int] | None = None
    field: FieldSpec = FieldSpec.rationals()
    cap: int = DEFAULT_CAP
    threads: int = 1
    output: Path | None = None
    format: OutputFormat = OutputFormat.json
    seed: int = 0
    lambdas: tuple[int, ...] | None = None
    suite: Suite | None = None
    kind: BoundKind = BoundKind.linear
    verify_config: VerifyConfig = dataclasses.field(default_factory=VerifyConfig.create_default)

    def __post_init__(self):
        if self.cap < 0:
            raise ParameterError(f"cap must be nonnegative, got {self.cap}")
        if self.threads < 1:
            raise ParameterError(f"threads must be positive, got {self.threads}")
        if self.r is not None and self.r < 1:
            raise ParameterError(f"need r >= 1, got r={self.r}")
        if self.j_range is not None and self.j_range[0] > self.j_range[1]:
            raise ParameterError(f"empty j-range {self.j_range}")

    @property
    def power(self) -> int:
        return self.r if self.r is not None else 1

    @property
    def lefschetz_family(self) -> bool:
        return self.f is None

    def js(self) -> list[int]:
        """Sampled component indices, each checked against `j <= -n`."""
        if self.j_range is not None:
            values = list(range(self.j_range[0], self.j_range[1] + 1))
        elif self.j is not None:
            values = [self.j]
        else:
            raise ParameterError("give --j or --j-range")

        n = self.n
        if n is not None and values[-1] > -n:
            raise ParameterError(f"need j <= -n = {-n}, got j={values[-1]}")

        return values

    def polynomial(self) -> BiPoly:
        if self.n is None:
            raise ParameterError("--n is required")

        if self.f is None:
            if self.m is not None and self.m != self.n:
                raise ParameterError(f"the Lefschetz form needs m = n, got m={self.m}, n={self.n}")  # noqa: E501
            return bipoly_power(lambda_form(self.n, self.field, self.lambdas), self.power)

        if self.m is None:
            raise ParameterError("--m is required with --f")
        return parse_bipoly(self.f, self.m, self.n, self.field, require_bihomogeneous=True)

    def to_dict(self) -> dict[str, Any]:
        """Canonical echo: the polynomial in printed form, no output path."""
        polynomial = str(self.polynomial()) if self.command != Command.verify else self.f
        return {
            "command": self.command.value,
            "f": polynomial,
            "m": self.m if self.f is not None else self.n,
            "n": self.n,
            "r": self.r,
            "j": self.j,
            "j_range": list(self.j_range) if self.j_range is not None else None,
            "field": self.field.label,
            "cap": self.cap,
            "threads": self.threads,
            "format": self.format.value,
            "seed": self.seed,
            "lambdas": list(self.lambdas) if self.lambdas is not None else None,
            "suite": self.suite.value if self.suite is not None else None,
            "kind": self.kind.value if self.command == Command.bound else None,
        }


def _component_entry(
    g: BiPoly,
    cap: int,
    lefschetz: tuple[int, int] | None,
    with_series: bool,
    j: int,
) -> ResultEntry:
    presentation = build_presentation(g, j)
    report = cohomology_report(presentation, cap)

    checks = [ledger_check(report, presentation)]
    if lefschetz is not None:
        checks.extend(formula_checks(*lefschetz, presentation, report))

    extra = {}
    if with_series:
        extra = {
            "series": report.top.series(),
            "sub_hilbert": list(report.sub.values),
            "sub_start": report.sub.start,
        }

    return ResultEntry.from_report(report, checks=checks, extra=extra)


def _initial_entry(g: BiPoly, cap: int, j: int) -> ResultEntry:
    presentation = build_presentation(g, j)
    decomposition = initial_decomposition(presentation)
    report = cohomology_report(presentation, cap)

    return ResultEntry.from_report(
        report,
        checks=[
            macaulay_check(presentation, decomposition, cap),
            ledger_check(report, presentation),
        ],
        extra={"ideals": ideal_labels(decomposition)},
    )


def _components(config: RunConfig, progress: Progress | None) -> list[ResultEntry]:
    g = config.polynomial()
    lefschetz = (config.n, config.power) if config.lefschetz_family and config.n >= 2 else None

    if config.command == Command.initial:
        fn = partial(_initial_entry, g, config.cap)
    else:
        with_series = config.command == Command.hilbert
        fn = partial(_component_entry, g, config.cap, lefschetz, with_series)

    return _map_with_progress(fn, config.js(), config, progress)


def _betti(config: RunConfig, progress: Progress | None) -> list[ResultEntry]:
    if not config.lefschetz_family:
        raise ParameterError("betti applies to (sum lambda_i x_i y_i)^r; omit --f")
    config.polynomial()

    tasks = [
        LefschetzTask(
            n=config.n,
            r=config.power,
            j=j,
            field=config.field,
            cap=config.cap,
            lambdas=config.lambdas,
        )
        for j in config.js()
    ]
    nested = _map_with_progress(betti.run_task, tasks, config, progress)
    return [entry for entries in nested for entry in entries]


def _bound(config: RunConfig, progress: Progress | None) -> list[ResultEntry]:
    g = config.polynomial()
    js = config.js()
    fit = linear_bound_fit(g, js[0], js[-1], config.kind, config.cap)
    return fit_entries(g, fit, js, instance="", cap=config.cap)


def _map_with_progress(fn, items: list, config: RunConfig, progress: Progress | None) -> list:
    if progress is None:
        return map_ordered(fn, items, config.threads)

    progress_task = progress.add_task(f"[green]{config.command.value}", total=len(items))
    return map_ordered(
        fn,
        items,
        config.threads,
        on_done=lambda _: progress.advance(progress_task),
    )


def run(config: RunConfig, progress: Progress | None = None) -> Report:
    """Executes one command.

    Raises:
        LcregError: For invalid parameters or polynomial text.
    """
    start = perf_counter()
    echo = config.to_dict()

    if config.command == Command.verify:
        if config.suite is None:
            raise ParameterError("verify needs a suite")
        if config.n is not None and (config.j_range is not None or config.j is not None):
            config.js()

        params = SuiteParams(
            config=config.verify_config,
            seed=config.seed,
            n=config.n,
            r=config.r,
            j_range=config.j_range if config.j_range is not None else _single_j(config),
            lambdas=config.lambdas,
            field=config.field,
        )
        report = verify_suite(config.suite, params, config.threads, progress)
        report.config = {**echo, "grids": config.verify_config.to_dict()}
    else:
        handlers = {
            Command.hilbert: _components,
            Command.regularity: _components,
            Command.initial: _components,
            Command.betti: _betti,
            Command.bound: _bound,
        }
        results = handlers[config.command](config, progress)
        caveats = [config.field.caveat] if config.field.caveat is not None else []
        if config.command == Command.betti:
            caveats.append(betti.PRINTED_SIGN_CAVEAT)
        report = Report(config=echo, results=results, caveats=caveats)

    report.timing["total"] = round(perf_counter() - start, 3)

    logger.info(
        "%s: %d entries, %d failed checks",
        config.command.value,
        len(report.results),
        len(report.failures),
    )
    return report


def _single_j(config: RunConfig) -> tuple[int, int] | None:
    return (config.j, config.j) if config.j is not None else None
