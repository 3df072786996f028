"""Locate the ``diagctl.toml`` a run reads.

An explicit ``--config`` path wins, then ``DIAGCTL_CONFIG``, then the
nearest ``diagctl.toml`` in the start directory or one of its parents.
"""

from __future__ import annotations

import os
from pathlib import Path

import click

CONFIG_FILENAME = "diagctl.toml"
CONFIG_ENV_VAR = "DIAGCTL_CONFIG"


def find_config(start: Path | None = None) -> Path | None:
    """Nearest ``diagctl.toml`` at or above *start* (default: cwd).

    ``DIAGCTL_CONFIG`` replaces the walk; if it names a missing file no
    config is used at all.
    """
    if env_path := os.environ.get(CONFIG_ENV_VAR):
        named = Path(env_path).expanduser()
        return named if named.is_file() else None
    here = (start or Path.cwd()).resolve()
    candidates = (d / CONFIG_FILENAME for d in (here, *here.parents))
    return next((c for c in candidates if c.is_file()), None)


def resolve_config(explicit: str | None, start: Path | None = None) -> Path | None:
    """The file named by ``--config``, else the discovered one."""
    if not explicit:
        return find_config(start)
    path = Path(explicit).expanduser()
    if not path.is_file():
        raise click.UsageError(f"Config file not found: {explicit}")
    return path
