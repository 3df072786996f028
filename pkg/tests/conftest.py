"""Shared pytest fixtures for diagctl tests.

Group constructions are session-scoped: enumerating a group and building
its class data is the expensive part of most tests, and every consumer
treats the construction as read-only.
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Generator
from pathlib import Path
from types import SimpleNamespace

import pytest
from click.testing import CliRunner

from diagctl.config.settings import DiagSettings
from diagctl.domain.characters import CharacterTable, dixon_table
from diagctl.domain.constructions import Construction, make_alternating, make_psl2
from diagctl.infrastructure.workspace import Workspace
from diagctl.services.telemetry import _current_span, disable_telemetry


@pytest.fixture(scope="session")
def a5() -> Construction:
    return make_alternating(5)


@pytest.fixture(scope="session")
def psl27() -> Construction:
    return make_psl2(7)


@pytest.fixture(scope="session")
def a5_table(a5: Construction) -> CharacterTable:
    return dixon_table(a5.group)


@pytest.fixture
def cli_runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(autouse=True)
def _isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Generator[None]:
    """Run every test from an empty directory with no DIAGCTL_* variables set.

    Telemetry is switched off afterwards since ``-v`` turns it on globally.
    """
    for name in [n for n in os.environ if n.startswith("DIAGCTL_")]:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    yield
    disable_telemetry()
    _current_span.set(None)


@pytest.fixture
def workspace() -> Generator[Workspace]:
    """Single-threaded workspace with default caps."""
    settings = DiagSettings.from_cli(run={"threads": 1})
    ws = Workspace(settings)
    try:
        yield ws
    finally:
        ws.close()


@pytest.fixture
def ticking_clock(monkeypatch: pytest.MonkeyPatch) -> None:
    """Deadlines see ten seconds pass between consecutive clock reads."""
    ticks = itertools.count(0.0, 10.0)
    monkeypatch.setattr(
        "diagctl.services._helpers.time", SimpleNamespace(monotonic=lambda: next(ticks))
    )
