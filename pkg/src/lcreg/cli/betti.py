from pathlib import Path
from typing import Optional

import typer

from lcreg.algebra.field import FieldSpec
from lcreg.cli import _options
from lcreg.cli._execute import execute, usage_errors
from lcreg.runner import Command, OutputFormat, RunConfig, parse_j_range


def command(
    n: int = typer.Option(..., "--n", "-n", help="Number of variables, `m = n >= 2`."),
    r: Optional[int] = _options.r_option(),
    j: Optional[int] = _options.j_option(),
    j_range: Optional[str] = _options.j_range_option(),
    field: str = _options.field_option(),
    cap: int = _options.cap_option(),
    threads: int = _options.threads_option(),
    lambdas: Optional[str] = _options.lambda_option(),
    output: Optional[Path] = _options.output_option(),
    format: OutputFormat = _options.format_option(),
):
    """Pure resolution of H^n(R)_j for `(sum lambda_i x_i y_i)^r`.

    Reports `beta_0`, the twists, the Herzog-Kuhl Betti numbers and multiplicity, and
    checks them against the oracle Hilbert function. The printed closed form for
    `beta_i` is listed next to them for comparison.
    """
    with usage_errors():
        config = RunConfig(
            command=Command.betti,
            n=n,
            r=r,
            j=j,
            j_range=parse_j_range(j_range) if j_range is not None else None,
            field=FieldSpec.parse(field),
            cap=cap,
            threads=threads,
            lambdas=_options.parse_lambdas(lambdas),
            output=output,
            format=format,
        )

    execute(config)
