"""Subcommand modules for diagctl.

``register_commands()`` imports each module on registration but defers the
service imports into the command bodies, so ``diagctl --help`` never
loads numpy-heavy code.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    import click


def register_commands(cli: click.Group) -> None:
    """Attach every standalone command to the root group."""
    from diagctl.commands.characters import chartable, corollary, count
    from diagctl.commands.diagonal import gamma0, orbdiam, path
    from diagctl.commands.group import classes, info
    from diagctl.commands.linear import nu
    from diagctl.commands.schema import schema
    from diagctl.commands.verify import verify_paper
    from diagctl.commands.widths import covering, cycles, involution, strongly_real, widths

    for command in (
        info,
        classes,
        widths,
        covering,
        strongly_real,
        cycles,
        involution,
        chartable,
        count,
        corollary,
        orbdiam,
        gamma0,
        path,
        nu,
        verify_paper,
        schema,
    ):
        cli.add_command(command)
