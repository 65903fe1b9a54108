from pathlib import Path
from typing import Optional

from lcreg.algebra.field import FieldSpec
from lcreg.cli import _options
from lcreg.cli._execute import execute, usage_errors
from lcreg.runner import Command, OutputFormat, RunConfig, parse_j_range


def command(
    f: Optional[str] = _options.f_option(),
    m: Optional[int] = _options.m_option(),
    n: Optional[int] = _options.n_option(),
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
    """Regularity of H^n(R)_j and first nonzero degree of H^{n-1}(R)_j.

    Leaves out the Hilbert series and the H^{n-1} window that `hilbert` prints.
    Without `--f`, also compares both with their closed forms for the Lefschetz form.
    """
    with usage_errors():
        config = RunConfig(
            command=Command.regularity,
            f=f,
            m=m,
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
