"""Rich console factory and the diagctl theme.

Consoles render into a StringIO buffer so every renderer returns a plain
string; outside a terminal rich drops the color codes.
"""

from __future__ import annotations

from io import StringIO

from rich.console import Console
from rich.theme import Theme

DIAG_THEME = Theme(
    {
        "diag.ok": "bold green",
        "diag.error": "bold red",
        "diag.warning": "bold yellow",
        "diag.op": "bold cyan",
        "diag.key": "dim",
        "diag.group": "bold",
        "diag.cycles": "blue",
        "diag.value": "magenta",
        "diag.path": "dim",
        "diag.check.pass": "green",
        "diag.check.fail": "bold red",
        "diag.check.skipped": "yellow",
    }
)

_STATUS_STYLES: dict[str, str] = {
    "pass": "diag.check.pass",
    "fail": "diag.check.fail",
    "skipped": "diag.check.skipped",
}


def create_console(*, no_color: bool = False, width: int | None = None) -> Console:
    return Console(
        file=StringIO(),
        theme=DIAG_THEME,
        no_color=no_color,
        highlight=False,
        width=width or 120,
    )


def get_output(console: Console) -> str:
    """Rendered text of a StringIO-backed console."""
    assert isinstance(console.file, StringIO)
    return console.file.getvalue()


def style_for_status(status: str) -> str:
    return _STATUS_STYLES.get(status, "")
