"""
Root command line.

    revbound [--verbose] [--log-file] verify|sweep|extremal|demo ...
"""

import typer

from app_logging import configure_logging
from apps.harness import commands
from revbound import __version__, settings

app = typer.Typer(
    name="revbound",
    help="Evaluate, sweep and search the norm-sum inequalities and reverse uncertainty relations.",
    no_args_is_help=True,
    add_completion=False,
)


def _version(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at INFO level on stderr"),
    log_file: bool = typer.Option(settings.LOG_TO_FILE, "--log-file", help="Also write JSON-lines logs to LOG_DIR"),
    version: bool = typer.Option(False, "--version", callback=_version, is_eager=True, help="Print the version"),
) -> None:
    configure_logging(
        log_dir=settings.LOG_DIR,
        level="INFO" if verbose else settings.LOG_LEVEL,
        to_file=log_file,
    )


app.command("verify")(commands.verify)
app.command("sweep")(commands.sweep)
app.command("extremal")(commands.extremal)
app.command("demo")(commands.demo)
