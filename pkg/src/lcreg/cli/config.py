from pathlib import Path

import typer
from rich import print

from lcreg.verify_config import VerifyConfig

app = typer.Typer(rich_markup_mode="markdown", help="Create the `verify.toml` file.")


@app.command()
def init(
    path: Path = typer.Argument(
        Path.cwd() / "verify.toml",
        help="Path to where the configuration file will be created.",  # noqa: E501
        dir_okay=False,
        file_okay=True,
    ),
):
    """Initializes a `verify.toml` file with the default verification grids."""
    default_config = VerifyConfig.create_default()

    default_config.to_toml(path)
    print(f"Configuration written to {path}")


if __name__ == "__main__":
    app()
