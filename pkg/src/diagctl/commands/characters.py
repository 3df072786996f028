"""Commands: character tables and character-sum counts."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

import click

from diagctl.commands._base import DiagCommand

if TYPE_CHECKING:
    from diagctl.commands._context import AppContext

_TABLE_FILE = click.Path(dir_okay=False, path_type=Path)


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl chartable A5
  diagctl chartable "PSL2(7)" --save psl27.json
  diagctl chartable file:groups/j1.gens --import j1-table.json""",
)
@click.argument("spec", required=False)
@click.option(
    "--import",
    "table_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Use a table from a JSON file instead of computing one.",
)
@click.option(
    "--save", "save_path", type=_TABLE_FILE, default=None, help="Write the table as JSON."
)
@click.pass_obj
def chartable(
    app: AppContext, spec: str | None, table_path: Path | None, save_path: Path | None
) -> None:
    """Character table of SPEC (Dixon's method unless imported)."""
    from diagctl.services.characters import CharacterService

    app.emit(
        CharacterService(app.workspace).chartable(spec, table_path=table_path, save_path=save_path)
    )


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl count A5 1 1
  diagctl count A5 1 1 --z 0
  diagctl count "PSL2(7)" 2 3 4 --no-bruteforce""",
)
@click.argument("spec")
@click.argument("class_ids", nargs=-1, required=True, type=int)
@click.option("--z", "z_class", type=int, default=None, help="Only this target class.")
@click.option(
    "--import",
    "table_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Character table JSON file.",
)
@click.option("--no-bruteforce", is_flag=True, help="Skip the convolution cross-check.")
@click.pass_obj
def count(
    app: AppContext,
    spec: str,
    class_ids: tuple[int, ...],
    z_class: int | None,
    table_path: Path | None,
    no_bruteforce: bool,
) -> None:
    """Solutions of x_1⋯x_d = z with x_i in the given CLASS_IDS."""
    from diagctl.services.characters import CharacterService

    app.emit(
        CharacterService(app.workspace).count(
            spec,
            list(class_ids),
            z_class=z_class,
            table_path=table_path,
            bruteforce=not no_bruteforce,
        )
    )


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl corollary A5 4 4 3
  diagctl corollary "PSL2(7)" 5 1 2""",
)
@click.argument("spec")
@click.argument("c_class", type=int)
@click.argument("d_class", type=int)
@click.argument("k", type=click.IntRange(min=1))
@click.option(
    "--import",
    "table_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Character table JSON file.",
)
@click.pass_obj
def corollary(
    app: AppContext, spec: str, c_class: int, d_class: int, k: int, table_path: Path | None
) -> None:
    """Character-sum test for D_CLASS ⊆ C_CLASS^K."""
    from diagctl.services.characters import CharacterService

    app.emit(
        CharacterService(app.workspace).corollary(spec, c_class, d_class, k, table_path=table_path)
    )
