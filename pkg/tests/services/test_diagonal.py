"""Tests for DiagonalService."""

from __future__ import annotations

from pathlib import Path

import pytest

from diagctl.infrastructure.workspace import Workspace
from diagctl.services.diagonal import DiagonalService


class TestOrbdiam:
    def test_inner_square(self, workspace: Workspace) -> None:
        result = DiagonalService(workspace).orbdiam("A5", k=2, variant="Tk")
        assert result.ok
        data = result.data
        assert data["orbdiam"] == 3
        assert data["omega_size"] == 60
        assert data["rank"] == 5
        assert data["strict_lower_bound"] is None
        assert all(item["representative"][0] == "()" for item in data["orbitals"])

    def test_full_automorphisms(self, workspace: Workspace) -> None:
        result = DiagonalService(workspace).orbdiam("A5", k=2, variant="DkT")
        assert result.data["orbdiam"] == 2
        assert result.data["rank"] == 4

    def test_default_variant_is_dkt(self, workspace: Workspace) -> None:
        assert DiagonalService(workspace).orbdiam("A5").data["variant"] == "DkT"

    def test_intransitive(self, workspace: Workspace) -> None:
        result = DiagonalService(workspace).orbdiam("A5", k=3, variant="Tk")
        assert result.error is not None
        assert result.error.code == "NON_TRANSITIVE_COORDINATES"

    @pytest.mark.slow
    def test_imprimitive_geometry_is_disconnected(self, workspace: Workspace) -> None:
        result = DiagonalService(workspace).orbdiam("A5", k=3, variant="Tk", imprimitive=True)
        assert not result.ok
        assert result.error is not None
        assert result.error.code == "DISCONNECTED"
        assert result.error.detail["points"] == 3600

    def test_unknown_variant(self, workspace: Workspace) -> None:
        result = DiagonalService(workspace).orbdiam("A5", variant="Sk")
        assert result.error is not None
        assert result.error.code == "PARSE_ERROR"

    def test_custom_coordinates(self, workspace: Workspace, tmp_path: Path) -> None:
        coords = tmp_path / "swap.gens"
        coords.write_text("degree 2\n(0 1)\n")
        result = DiagonalService(workspace).orbdiam(
            "A5", k=2, variant="custom", aut="aut", coords=coords
        )
        assert result.ok
        assert result.data["orbdiam"] == 2

    def test_custom_coordinate_degree(self, workspace: Workspace, tmp_path: Path) -> None:
        coords = tmp_path / "rot.gens"
        coords.write_text("degree 3\n(0 1 2)\n")
        result = DiagonalService(workspace).orbdiam("A5", k=2, variant="custom", coords=coords)
        assert result.error is not None
        assert result.error.code == "PARSE_ERROR"


class TestGamma0:
    def test_certificate(self, workspace: Workspace, tmp_path: Path) -> None:
        dot = tmp_path / "gamma.dot"
        result = DiagonalService(workspace).gamma0(
            "A5", "(0 1 2 3 4)", k=2, variant="Tk", dot_path=dot
        )
        assert result.ok
        data = result.data
        assert data["diameter"] == 3
        assert data["valency"] == 12
        assert data["certificate"]["holds"] is True
        assert data["certificate"]["lower"] == "3"
        assert data["dot"] == str(dot)
        assert dot.read_text().startswith("graph orbital {")

    def test_element_outside_group(self, workspace: Workspace) -> None:
        result = DiagonalService(workspace).gamma0("A5", "(0 1)", k=2, variant="Tk")
        assert result.error is not None
        assert result.error.code == "NOT_IN_GROUP"

    def test_identity(self, workspace: Workspace) -> None:
        result = DiagonalService(workspace).gamma0("A5", "()", k=2, variant="Tk")
        assert result.error is not None
        assert result.error.code == "IDENTITY_ELEMENT"


class TestPath:
    def test_short_target(self, workspace: Workspace) -> None:
        result = DiagonalService(workspace).path(
            "A5", "(0 1 2 3 4)", "(0 1)(2 3)", k=2, variant="Tk"
        )
        assert result.ok
        assert result.data["target"] == ["()", "(0 1)(2 3)"]
        assert result.data["length"] == 3
        assert result.data["steps"][-1] == ["()", "(0 1)(2 3)"]

    def test_full_target(self, workspace: Workspace) -> None:
        result = DiagonalService(workspace).path(
            "A5", "(0 1 2)", "(0 1 2); (0 1 2)", k=2, variant="Tk"
        )
        assert result.ok
        assert result.data["length"] == 0

    @pytest.mark.parametrize("target", ["();();()", ""])
    def test_wrong_coordinate_count(self, workspace: Workspace, target: str) -> None:
        result = DiagonalService(workspace).path("A5", "(0 1 2)", target, k=2, variant="Tk")
        assert result.error is not None
        assert result.error.code == "PARSE_ERROR"
