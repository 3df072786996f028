"""Character table files (JSON) on disk."""

from __future__ import annotations

import json
from pathlib import Path

from diagctl.domain.characters import CharacterTable
from diagctl.domain.errors import ParseError


def load_table(path: Path) -> CharacterTable:
    """Read a table written by :func:`save_table` (or by hand in the same schema)."""
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ParseError(f"character table file not found: {path}", path=str(path)) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}", path=str(path)) from exc
    if not isinstance(data, dict):
        raise ParseError("character table file must hold a JSON object", path=str(path))
    return CharacterTable.from_dict(data)


def save_table(table: CharacterTable, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(table.to_dict(), indent=2) + "\n", encoding="utf-8")
    return path
