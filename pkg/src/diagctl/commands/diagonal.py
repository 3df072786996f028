"""Commands: orbital graphs of simple diagonal actions."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

import click

from diagctl.commands._base import DiagCommand
from diagctl.domain.types import Variant

if TYPE_CHECKING:
    from diagctl.commands._context import AppContext

_VARIANTS = click.Choice([v.value for v in Variant])

_k_option = click.option(
    "-k",
    "k",
    type=click.IntRange(min=2),
    default=None,
    help="Number of factors. Defaults to [run] k.",
)
_variant_option = click.option(
    "--variant",
    type=_VARIANTS,
    default=None,
    help="Point-stabilizer shape. Defaults to [run] variant.",
)


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl orbdiam A5 -k 2 --variant Tk
  diagctl orbdiam A5 -k 2 --variant DkT
  diagctl orbdiam A5 -k 3 --variant DkT
  diagctl orbdiam A5 -k 3 --variant Tk --imprimitive
  diagctl orbdiam "PSL2(7)" -k 3 --variant custom --aut aut --coords s3.gens""",
)
@click.argument("spec", required=False)
@_k_option
@_variant_option
@click.option("--aut", default=None, help="Automorphisms for the custom variant.")
@click.option(
    "--coords",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Generator file of coordinate permutations (custom variant).",
)
@click.option("--imprimitive", is_flag=True, help="Allow an intransitive coordinate group.")
@click.pass_obj
def orbdiam(
    app: AppContext,
    spec: str | None,
    k: int | None,
    variant: str | None,
    aut: str | None,
    coords: Path | None,
    imprimitive: bool,
) -> None:
    """Diameter of every orbital graph of T^k.X on the cosets of its point stabilizer."""
    from diagctl.services.diagonal import DiagonalService

    app.emit(
        DiagonalService(app.workspace).orbdiam(
            spec, k=k, variant=variant, aut=aut, coords=coords, imprimitive=imprimitive
        )
    )


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl gamma0 A5 --t "(0 1 2)" -k 3 --variant DkT
  diagctl gamma0 A5 --t "(0 1)(2 3)" -k 2 --variant Tk --dot g.dot""",
)
@click.argument("spec", required=False)
@click.option("--t", "t", required=True, help="Element t in cycle notation.")
@_k_option
@_variant_option
@click.option("--aut", default=None, help="Automorphisms for the custom variant.")
@click.option(
    "--coords",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Generator file of coordinate permutations (custom variant).",
)
@click.option(
    "--dot",
    "dot_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the orbital graph in DOT format.",
)
@click.pass_obj
def gamma0(
    app: AppContext,
    spec: str | None,
    t: str,
    k: int | None,
    variant: str | None,
    aut: str | None,
    coords: Path | None,
    dot_path: Path | None,
) -> None:
    """Diameter of the orbital graph through (1, …, 1, t) with its bound certificate."""
    from diagctl.services.diagonal import DiagonalService

    app.emit(
        DiagonalService(app.workspace).gamma0(
            spec, t, k=k, variant=variant, aut=aut, coords=coords, dot_path=dot_path
        )
    )


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl path A5 --t "(0 1 2)" --target "(0 1 2 3 4)" -k 2 --variant Tk
  diagctl path A5 --t "(0 1 2)" --target "(0 2 4);(1 3)(2 4)" -k 3 --variant TkSk""",
)
@click.argument("spec", required=False)
@click.option("--t", "t", required=True, help="Element t in cycle notation.")
@click.option(
    "--target",
    required=True,
    help="Target point: k or k-1 cycle strings separated by ';'.",
)
@_k_option
@_variant_option
@click.pass_obj
def path(
    app: AppContext,
    spec: str | None,
    t: str,
    target: str,
    k: int | None,
    variant: str | None,
) -> None:
    """An explicit walk from the base point to TARGET in the orbital graph of t."""
    from diagctl.services.diagonal import DiagonalService

    app.emit(DiagonalService(app.workspace).path(spec, t, target, k=k, variant=variant))
