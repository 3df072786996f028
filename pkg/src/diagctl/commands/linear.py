"""Command: the ν invariant of linear groups."""

from __future__ import annotations

from typing import TYPE_CHECKING

import click

from diagctl.commands._base import DiagCommand

if TYPE_CHECKING:
    from diagctl.commands._context import AppContext


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl nu -n 3 -q 3
  diagctl nu -n 3 -q 3 --compare
  diagctl nu -n 2 -q 13 --compare""",
)
@click.option("-n", "n", type=click.IntRange(min=2), required=True, help="Matrix dimension.")
@click.option("-q", "q", type=click.IntRange(min=2), required=True, help="Field size.")
@click.option("--compare", is_flag=True, help="Check c_A of PSL_n(q) against the ν bound.")
@click.pass_obj
def nu(app: AppContext, n: int, q: int, compare: bool) -> None:
    """ν of a transvection and a Singer element of SL_n(q)."""
    from diagctl.services.linear import LinearService

    app.emit(LinearService(app.workspace).nu(n, q, compare=compare))
