import logging
from collections.abc import Iterator
from contextlib import contextmanager

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.progress import Progress

from lcreg.errors import LcregError
from lcreg.runner import OutputFormat, RunConfig, run

err_console = Console(stderr=True)


def configure_logging(level: str):
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


@contextmanager
def usage_errors() -> Iterator[None]:
    """Turns library errors into exit status 2 with the message on stderr."""
    try:
        yield
    except LcregError as e:
        err_console.print(f"[red]error:[/red] {escape(str(e))}")
        raise typer.Exit(code=2) from None


def execute(config: RunConfig):
    """Runs the command, writes the report and sets the exit status.

    0 when every check passes, 1 when any check fails, 2 on bad input.
    """
    with usage_errors():
        with Progress(console=err_console, transient=True) as progress:
            report = run(config, progress)

    text = report.to_json() + "\n" if config.format == OutputFormat.json else report.to_csv()

    if config.output is not None:
        config.output.write_text(text)
        err_console.print(f"[blue]Report written to {escape(str(config.output))}")
    else:
        typer.echo(text, nl=False)

    for entry, check in report.failures:
        label = f"{entry.instance} " if entry.instance else ""
        err_console.print(f"[red]FAIL[/red] {escape(label)}j={entry.j} {escape(check.name)}: {escape(check.detail)}")  # noqa: E501

    if not report.passed:
        raise typer.Exit(code=1)
