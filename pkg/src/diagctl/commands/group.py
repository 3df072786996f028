"""Commands: group construction summaries."""

from __future__ import annotations

from typing import TYPE_CHECKING

import click

from diagctl.commands._base import DiagCommand

if TYPE_CHECKING:
    from diagctl.commands._context import AppContext


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl info A5
  diagctl info "PSL2(7)"
  diagctl --json info "PSL3(3)"
  diagctl info file:groups/j1.gens""",
)
@click.argument("spec", required=False)
@click.pass_obj
def info(app: AppContext, spec: str | None) -> None:
    """Order, classes and automorphism realizations of SPEC."""
    from diagctl.services.group import GroupService

    app.emit(GroupService(app.workspace).info(spec))


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl classes A6
  diagctl --format csv classes "PSL2(11)\"""",
)
@click.argument("spec", required=False)
@click.pass_obj
def classes(app: AppContext, spec: str | None) -> None:
    """List the conjugacy classes of SPEC in canonical order."""
    from diagctl.services.group import GroupService

    app.emit(GroupService(app.workspace).classes(spec))
