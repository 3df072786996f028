"""Format a ServiceResult as table, JSON or CSV text.

- **json**: ``model_dump_json(indent=2)`` of the whole envelope.
- **csv**: one row per class, orbital, check or item of the payload; scalar
  payloads become a single row.
- **table**: rich renderers keyed on ``result.op`` (``--quiet`` shortens
  them to one line or ids).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from diagctl.output.renderers import render_quiet, render_result

if TYPE_CHECKING:
    from diagctl.services.result import ServiceResult

# Payload key holding the row list, per operation.
_CSV_ROWS: dict[str, str] = {
    "classes": "items",
    "widths": "classes",
    "covering": "classes",
    "cycles": "items",
    "involution": "items",
    "count": "items",
    "orbdiam": "orbitals",
    "path": "steps",
    "nu": "classes",
    "verify_paper": "checks",
}


@dataclass(frozen=True)
class OutputSettings:
    format: str = "table"
    quiet: bool = False
    verbose: bool = False


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return ";".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={_cell(v)}" for k, v in value.items())
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def csv_rows(result: ServiceResult) -> list[dict[str, str]]:
    """Flatten the payload of *result* into CSV rows."""
    key = _CSV_ROWS.get(result.op)
    rows: list[Any] | None = result.data.get(key) if key else None
    if rows is None:
        scalars = {k: v for k, v in result.data.items() if not isinstance(v, (list, dict))}
        return [{k: _cell(v) for k, v in scalars.items()}] if scalars else []
    out = []
    for row in rows:
        if isinstance(row, dict):
            out.append({k: _cell(v) for k, v in row.items()})
        else:
            out.append({"step": _cell(row)})
    return out


def format_csv(result: ServiceResult) -> str:
    rows = csv_rows(result)
    if not rows:
        return render_quiet(result)
    columns: list[str] = []
    for row in rows:
        columns.extend(c for c in row if c not in columns)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def format_result(result: ServiceResult, *, settings: OutputSettings | None = None) -> str:
    """Format *result* for ``click.echo``."""
    settings = settings or OutputSettings()
    if settings.format == "json":
        return result.model_dump_json(indent=2)
    if settings.format == "csv":
        return format_csv(result)
    if settings.quiet:
        return render_quiet(result)
    return render_result(result, verbose=settings.verbose)
