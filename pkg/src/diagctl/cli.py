"""Root CLI group for diagctl with global flags and command registration."""

from __future__ import annotations

from pathlib import Path

import click
from pydantic import ValidationError

from diagctl import __version__
from diagctl.commands import register_commands
from diagctl.commands._base import DiagGroup
from diagctl.commands._context import AppContext
from diagctl.config.settings import DiagSettings


def _validation_message(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        where = ".".join(str(p) for p in err["loc"])
        parts.append(f"{where}: {err['msg']}")
    return "invalid configuration: " + "; ".join(parts)


@click.group(
    cls=DiagGroup,
    invoke_without_command=True,
    examples="""\
  diagctl info A5
  diagctl widths A5 --aut aut
  diagctl orbdiam A5 -k 3 --variant DkT
  diagctl --json verify-paper --suite widths""",
)
@click.version_option(version=__version__, prog_name="diagctl")
@click.option("--json", "json_output", is_flag=True, help="Shortcut for --format json.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["table", "json", "csv"]),
    default=None,
    help="Output format. Defaults to [run] format.",
)
@click.option("-q", "--quiet", is_flag=True, help="Minimal output.")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging and timing trees.")
@click.option("--log-json", is_flag=True, help="Structured JSON log output to stderr.")
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker threads.")
@click.option(
    "--max-seconds",
    type=click.FloatRange(min=0, min_open=True),
    default=None,
    help="Soft deadline; unfinished work is reported incomplete.",
)
@click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the rendered result to a file instead of stdout.",
)
@click.option("-c", "--config", "config_path", default=None, help="TOML config file.")
@click.pass_context
def cli(
    ctx: click.Context,
    json_output: bool,
    output_format: str | None,
    quiet: bool,
    verbose: bool,
    log_json: bool,
    threads: int | None,
    max_seconds: float | None,
    output: Path | None,
    config_path: str | None,
) -> None:
    """diagctl: conjugacy widths and orbital diameters of simple diagonal groups."""
    if json_output:
        output_format = "json"
    try:
        settings = DiagSettings.from_cli(
            config_path=config_path,
            run={
                "format": output_format,
                "threads": threads,
                "max_seconds": max_seconds,
                "output": output,
            },
            quiet=quiet,
            verbose=verbose,
            log_json=log_json,
        )
    except ValidationError as exc:
        raise click.UsageError(_validation_message(exc)) from exc
    app = AppContext(settings)
    ctx.obj = app
    ctx.call_on_close(app.close)
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


register_commands(cli)
