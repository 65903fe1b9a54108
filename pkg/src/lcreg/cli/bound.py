from pathlib import Path
from typing import Optional

import typer

from lcreg.algebra.field import FieldSpec
from lcreg.cli import _options
from lcreg.cli._execute import execute, usage_errors
from lcreg.formulas.linear_bounds import BoundKind
from lcreg.runner import Command, OutputFormat, RunConfig, parse_j_range


def command(
    j_range: str = typer.Option(
        ...,
        "--j-range",
        "-jr",
        help="Inclusive range `a..b` of component indices, `b <= -n`.",
    ),
    f: Optional[str] = _options.f_option(),
    m: Optional[int] = _options.m_option(),
    n: Optional[int] = _options.n_option(),
    r: Optional[int] = _options.r_option(),
    kind: BoundKind = typer.Option(
        BoundKind.linear,
        "--kind",
        "-k",
        help="`general` (y-degree 1, slope A), `generic` (x-degree 1, slope B, offset at most -1) or `linear` (slope A*B).",  # noqa: E501
    ),
    field: str = _options.field_option(),
    cap: int = _options.cap_option(),
    lambdas: Optional[str] = _options.lambda_option(),
    output: Optional[Path] = _options.output_option(),
    format: OutputFormat = _options.format_option(),
):
    """Fits the offset `q` of `reg H^n(R)_j <= (-n-j+1) d + q` over a range of j.

    Components that are not of finite length below the cap are excluded and flagged.
    """
    with usage_errors():
        config = RunConfig(
            command=Command.bound,
            f=f,
            m=m,
            n=n,
            r=r,
            j_range=parse_j_range(j_range),
            field=FieldSpec.parse(field),
            cap=cap,
            lambdas=_options.parse_lambdas(lambdas),
            kind=kind,
            output=output,
            format=format,
        )

    execute(config)
