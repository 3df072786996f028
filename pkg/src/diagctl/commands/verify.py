"""Command: reproduce the published values."""

from __future__ import annotations

from typing import TYPE_CHECKING

import click

from diagctl.commands._base import DiagCommand
from diagctl.domain.types import VerifySuite

if TYPE_CHECKING:
    from diagctl.commands._context import AppContext


@click.command(
    "verify-paper",
    cls=DiagCommand,
    examples="""\
  diagctl verify-paper --suite widths
  diagctl verify-paper --suite diagonal --max-seconds 600
  diagctl --json -o checks.json verify-paper --suite all
  diagctl --format csv verify-paper --suite characters""",
)
@click.option(
    "--suite",
    type=click.Choice([*(s.value for s in VerifySuite), "all"]),
    default="all",
    show_default=True,
    help="Which group of checks to run.",
)
@click.pass_obj
def verify_paper(app: AppContext, suite: str) -> None:
    """Run reproducible checks; exit 0 only when every check passes."""
    from diagctl.services.verify import VerifyService

    app.emit(VerifyService(app.workspace).verify(suite))
