"""Tests for the ServiceResult envelope and BaseService failure mapping."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

import diagctl
from diagctl.domain.errors import CapExceeded, Disconnected, IdentityElement
from diagctl.infrastructure.workspace import Workspace
from diagctl.services.base import BaseService
from diagctl.services.result import ServiceError, ServiceResult


class TestServiceResult:
    def test_defaults(self) -> None:
        result = ServiceResult(ok=True, op="info")
        assert result.data == {}
        assert result.warnings == []
        assert result.error is None
        assert result.meta is None

    def test_frozen(self) -> None:
        result = ServiceResult(ok=True, op="info")
        with pytest.raises(ValidationError):
            result.ok = False  # type: ignore[misc]

    def test_error_dump(self) -> None:
        result = ServiceResult(
            ok=False, op="covering", error=ServiceError(code="CAP_EXCEEDED", message="too big")
        )
        dumped = result.model_dump(mode="json")
        assert dumped["error"] == {"code": "CAP_EXCEEDED", "message": "too big", "detail": {}}

    def test_error_from_exception(self) -> None:
        error = ServiceError.from_exception(
            Disconnected("graph is disconnected", reached=60, points=3600, suborbits=(1, 2))
        )
        assert error.code == "DISCONNECTED"
        assert error.detail == {"reached": 60, "points": 3600, "suborbits": "(1, 2)"}

    def test_failure(self) -> None:
        result = ServiceResult.failure("gamma0", IdentityElement("identity"), data={"k": 2})
        assert not result.ok
        assert result.data == {"k": 2}
        assert result.error is not None
        assert result.error.code == "IDENTITY_ELEMENT"

    def test_with_meta_keeps_other_entries(self) -> None:
        result = ServiceResult(ok=True, op="info", meta={"cache": "hit"})
        updated = result.with_meta("telemetry", {"name": "info"})
        assert updated.meta == {"cache": "hit", "telemetry": {"name": "info"}}
        assert result.meta == {"cache": "hit"}


class TestBaseService:
    def test_failure_carries_code_and_detail(self) -> None:
        exc = CapExceeded("order too large", cap=10, expected=60, group=object())
        result = BaseService._failure("info", exc, warnings=["w"])
        assert not result.ok
        assert result.op == "info"
        assert result.warnings == ["w"]
        assert result.error is not None
        assert result.error.code == "CAP_EXCEEDED"
        assert result.error.detail["cap"] == 10
        assert isinstance(result.error.detail["group"], str)

    def test_construction_falls_back_to_run_group(self) -> None:
        from diagctl.config.settings import DiagSettings

        ws = Workspace(DiagSettings.from_cli(run={"group": "A5", "threads": 1}))
        assert BaseService(ws)._construction(None).label == "A5"
        ws.close()

    def test_construction_without_group(self, workspace: Workspace) -> None:
        from diagctl.domain.errors import ParseError

        with pytest.raises(ParseError):
            BaseService(workspace)._construction(None)


class TestPublishedSchema:
    def test_bundled_schema_matches_model(self) -> None:
        bundled = json.loads(
            (Path(diagctl.__file__).parent / "schemas" / "service_result.schema.json").read_text()
        )
        generated = ServiceResult.model_json_schema()
        assert bundled["properties"].keys() == generated["properties"].keys()
        assert bundled["required"] == generated["required"]
        error = bundled["$defs"]["ServiceError"]
        assert error["required"] == generated["$defs"]["ServiceError"]["required"]
