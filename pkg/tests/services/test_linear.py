"""Tests for LinearService."""

from __future__ import annotations

from diagctl.infrastructure.workspace import Workspace
from diagctl.services.linear import LinearService


class TestNu:
    def test_sl3_3(self, workspace: Workspace) -> None:
        result = LinearService(workspace).nu(3, 3)
        assert result.ok
        assert result.data["transvection"] == 1
        assert result.data["singer"] == 3
        assert result.data["ratio"] == "3"
        assert result.data["classes"] == []

    def test_sl2(self, workspace: Workspace) -> None:
        result = LinearService(workspace).nu(2, 7)
        assert (result.data["transvection"], result.data["singer"]) == (1, 2)

    def test_compare_psl27(self, workspace: Workspace) -> None:
        result = LinearService(workspace).nu(2, 7, compare=True)
        assert result.ok
        assert result.data["bound_holds"] is True
        assert result.data["c_a"] >= 2
        assert len(result.data["classes"]) == 5
        assert all(r["nu"] in (1, 2) for r in result.data["classes"])

    def test_compare_needs_small_n(self, workspace: Workspace) -> None:
        result = LinearService(workspace).nu(4, 2, compare=True)
        assert result.error is not None
        assert result.error.code == "PARSE_ERROR"

    def test_n_too_small(self, workspace: Workspace) -> None:
        result = LinearService(workspace).nu(1, 3)
        assert result.error is not None
        assert result.error.code == "PARSE_ERROR"

    def test_not_prime_power(self, workspace: Workspace) -> None:
        result = LinearService(workspace).nu(2, 6)
        assert result.error is not None
        assert result.error.code == "NOT_PRIME_POWER"
