"""Commands: conjugacy widths, covering numbers and the combinatorial tests."""

from __future__ import annotations

from typing import TYPE_CHECKING

import click

from diagctl.commands._base import DiagCommand

if TYPE_CHECKING:
    from diagctl.commands._context import AppContext


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl widths A5
  diagctl widths A5 --aut aut
  diagctl widths "PSL2(13)" --aut aut --no-covering
  diagctl widths "PSL2(8)" --aut file:autos/field.gens
  diagctl --format csv -o a7.csv widths A7 --aut aut""",
)
@click.argument("spec", required=False)
@click.option(
    "--aut",
    default=None,
    help="Automorphism group X: inn, aut or file:<path>. Defaults to [run] aut.",
)
@click.option("--no-covering", is_flag=True, help="Skip covering numbers.")
@click.pass_obj
def widths(app: AppContext, spec: str | None, aut: str | None, no_covering: bool) -> None:
    """c, c_i and c_X per class of SPEC, with group maxima."""
    from diagctl.services.widths import WidthService

    app.emit(WidthService(app.workspace).widths(spec, aut=aut, include_covering=not no_covering))


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl covering A8
  diagctl --threads 8 covering "PSL3(4)\"""",
)
@click.argument("spec", required=False)
@click.pass_obj
def covering(app: AppContext, spec: str | None) -> None:
    """Covering number of every nontrivial class of SPEC."""
    from diagctl.services.widths import WidthService

    app.emit(WidthService(app.workspace).covering(spec))


@click.command(
    "strongly-real",
    cls=DiagCommand,
    examples="""\
  diagctl strongly-real A6
  diagctl strongly-real "PSL2(7)\"""",
)
@click.argument("spec", required=False)
@click.pass_obj
def strongly_real(app: AppContext, spec: str | None) -> None:
    """Whether every element of SPEC is a product of two involutions."""
    from diagctl.services.widths import WidthService

    app.emit(WidthService(app.workspace).strongly_real(spec))


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl cycles 7
  diagctl cycles 9 -l 5""",
)
@click.argument("n", type=click.IntRange(min=5))
@click.option("-l", "length", type=int, default=None, help="Single odd cycle length.")
@click.pass_obj
def cycles(app: AppContext, n: int, length: int | None) -> None:
    """Which odd l make every element of A_N a product of three l-cycles."""
    from diagctl.services.widths import WidthService

    app.emit(WidthService(app.workspace).cycles(n, length))


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl involution A5
  diagctl involution "PSL2(13)\"""",
)
@click.argument("spec", required=False)
@click.pass_obj
def involution(app: AppContext, spec: str | None) -> None:
    """A conjugate x of each involution u with u·u^x of order above 2."""
    from diagctl.services.widths import WidthService

    app.emit(WidthService(app.workspace).involution(spec))
