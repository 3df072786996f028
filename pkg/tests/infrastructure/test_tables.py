"""Tests for character table files."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from diagctl.domain.characters import CharacterTable
from diagctl.domain.errors import ParseError
from diagctl.infrastructure.tables import load_table, save_table


class TestTableFiles:
    def test_save_creates_parents(self, a5_table: CharacterTable, tmp_path: Path) -> None:
        path = save_table(a5_table, tmp_path / "deep" / "a5.json")
        assert path.is_file()
        loaded = load_table(path)
        assert loaded.degrees == a5_table.degrees
        np.testing.assert_allclose(loaded.values, a5_table.values, atol=1e-11)

    def test_missing(self, tmp_path: Path) -> None:
        with pytest.raises(ParseError, match="not found"):
            load_table(tmp_path / "missing.json")

    def test_invalid_json(self, tmp_path: Path) -> None:
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ParseError, match="invalid JSON"):
            load_table(path)

    def test_not_an_object(self, tmp_path: Path) -> None:
        path = tmp_path / "list.json"
        path.write_text("[1, 2]")
        with pytest.raises(ParseError, match="JSON object"):
            load_table(path)
