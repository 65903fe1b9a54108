from importlib import import_module
from pathlib import Path

import typer

from lcreg.cli._execute import configure_logging
from lcreg.env_vars import LCREG_LOG_LEVEL, LOG_LEVELS


def _include_cli_apps(app: typer.Typer):
    for path in Path(__file__).parent.iterdir():
        # ignore private entries, such as
        # __init__.py, _options.py, __pycache__/, etc.
        if path.stem.startswith("_") or path.suffix != ".py":
            continue

        cli_module_name = path.stem
        module = import_module(f"lcreg.cli.{cli_module_name}")
        name = cli_module_name.replace("_", "-")

        if hasattr(module, "app"):
            app.add_typer(module.app, name=name)
        else:
            app.command(name=name)(module.command)


app = typer.Typer(
    rich_markup_mode="markdown",
    pretty_exceptions_show_locals=False,
    help="Local cohomology of bigraded hypersurfaces: Hilbert functions, regularity, initial modules and verification suites.",  # noqa: E501
)


@app.callback()
def main(
    log_level: str = typer.Option(
        LCREG_LOG_LEVEL,
        "--log-level",
        help=f"Logging level on stderr, one of {', '.join(LOG_LEVELS)} (overrides `LCREG_LOG_LEVEL`).",  # noqa: E501
    ),
):
    level = log_level.upper()
    if level not in LOG_LEVELS:
        raise typer.BadParameter(f"unknown level {log_level!r}", param_hint="--log-level")

    configure_logging(level)


_include_cli_apps(app)


if __name__ == "__main__":
    app()
