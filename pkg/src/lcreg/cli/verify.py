from pathlib import Path
from typing import Optional

import tomli
import typer
from dacite import DaciteError

from lcreg.algebra.field import FieldSpec
from lcreg.cli import _options
from lcreg.cli._execute import execute, usage_errors
from lcreg.runner import Command, OutputFormat, RunConfig, parse_j_range
from lcreg.verification.suites import Suite
from lcreg.verify_config import VerifyConfig


def _load_config(path: Optional[Path]) -> VerifyConfig:
    if path is None:
        return VerifyConfig.create_default()

    try:
        return VerifyConfig.from_toml(path)
    except (tomli.TOMLDecodeError, DaciteError) as e:
        raise typer.BadParameter(str(e), param_hint="--config-toml-path") from None


def command(
    suite: Suite = typer.Argument(..., help="Verification suite to run."),
    config_toml_path: Optional[Path] = typer.Option(
        None,
        "--config-toml-path",
        "-c",
        help="Path to a `verify.toml` file (see `lcreg config init`). Defaults to the built-in grids.",  # noqa: E501
        dir_okay=False,
        file_okay=True,
        exists=True,
    ),
    n: Optional[int] = _options.n_option(),
    r: Optional[int] = _options.r_option(),
    j: Optional[int] = _options.j_option(),
    j_range: Optional[str] = _options.j_range_option(),
    seed: int = typer.Option(0, "--seed", "-s", help="Seed of the pseudo-random instances."),
    field: str = _options.field_option(),
    threads: int = _options.threads_option(),
    lambdas: Optional[str] = _options.lambda_option(),
    output: Optional[Path] = _options.output_option(),
    format: OutputFormat = _options.format_option(),
):
    """Runs a verification suite and exits with status 1 if any check fails.

    `--n`, `--r` and `--j-range` narrow the grids of the configuration file; `all`
    runs every suite in turn.
    """
    verify_config = _load_config(config_toml_path)

    with usage_errors():
        config = RunConfig(
            command=Command.verify,
            suite=suite,
            n=n,
            r=r,
            j=j,
            j_range=parse_j_range(j_range) if j_range is not None else None,
            seed=seed,
            field=FieldSpec.parse(field),
            cap=verify_config.cap,
            threads=threads,
            lambdas=_options.parse_lambdas(lambdas),
            verify_config=verify_config,
            output=output,
            format=format,
        )

    execute(config)
