from typing import Optional

import typer

from lcreg.env_vars import LCREG_THREADS
from lcreg.runner import OutputFormat


def f_option():
    return typer.Option(
        None,
        "--f",
        "-f",
        help="Bihomogeneous polynomial in `x1..xm`, `y1..yn`, e.g. `x1*y1 + x2*y2`. Omit it to use `(sum lambda_i x_i y_i)^r` with `m = n`.",  # noqa: E501
    )


def m_option():
    return typer.Option(None, "--m", "-m", help="Number of x-variables.")


def n_option():
    return typer.Option(None, "--n", "-n", help="Number of y-variables.")


def r_option():
    return typer.Option(None, "--r", "-r", help="Power of the Lefschetz form (default 1).")


def j_option():
    return typer.Option(None, "--j", "-j", help="Component index, at most `-n`.")


def j_range_option():
    return typer.Option(
        None, "--j-range", "-jr", help="Inclusive range `a..b` of component indices, `b <= -n`."
    )


def field_option():
    return typer.Option(
        "QQ",
        "--field",
        "-F",
        help="Coefficient field: `QQ` or `GF(p)` for a prime `p`.",
    )


def cap_option():
    return typer.Option(60, "--cap", help="Degree cap of the Hilbert function scans.")


def threads_option():
    return typer.Option(
        LCREG_THREADS,
        "--threads",
        "-t",
        help="Worker processes (overrides `LCREG_THREADS`). Results do not depend on it.",
    )


def lambda_option():
    return typer.Option(
        None,
        "--lambda",
        "-l",
        help="Comma-separated nonzero integers `lambda_1,...,lambda_n` of the Lefschetz form.",  # noqa: E501
    )


def output_option():
    return typer.Option(
        None,
        "--output",
        "-o",
        help="Write the report here instead of standard output.",
        dir_okay=False,
    )


def format_option():
    return typer.Option(OutputFormat.json, "--format", help="Report format.")


def parse_lambdas(text: Optional[str]) -> Optional[tuple[int, ...]]:
    """Reads `1,2,-3`.

    Examples:
        >>> parse_lambdas("1, 2,-3")
        (1, 2, -3)
    """
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise typer.BadParameter(
            f"expected comma-separated integers, got {text!r}", param_hint="--lambda"
        ) from None

