"""Tests for typed payload contracts at the service boundary."""

from __future__ import annotations

import pytest
from pydantic import ValidationError

from diagctl.infrastructure.workspace import Workspace
from diagctl.services.contracts import (
    PAYLOAD_CONTRACTS,
    GroupInfoData,
    WidthMaxima,
    WidthsData,
    dump_validated,
)
from diagctl.services.group import GroupService
from diagctl.services.widths import WidthService


class TestPayloadContracts:
    def test_info_payload_conforms(self, workspace: Workspace) -> None:
        result = GroupService(workspace).info("A5")
        payload = GroupInfoData.model_validate(result.data)
        assert payload.order == 60

    def test_widths_payload_conforms(self, workspace: Workspace) -> None:
        result = WidthService(workspace).widths("A5", include_covering=False)
        payload = WidthsData.model_validate(result.data)
        assert payload.maxima.cn is None

    def test_maxima_reject_unknown_keys(self) -> None:
        with pytest.raises(ValidationError):
            WidthMaxima.model_validate({"c": 3, "c_i": 3, "c_x": 2, "c_y": 1})

    def test_dump_validated_rejects_missing_fields(self) -> None:
        with pytest.raises(ValidationError):
            dump_validated(GroupInfoData, {"group": "A5", "order": 60})

    def test_every_operation_has_a_contract(self) -> None:
        assert set(PAYLOAD_CONTRACTS) == {
            "info",
            "classes",
            "widths",
            "covering",
            "strongly_real",
            "cycles",
            "involution",
            "chartable",
            "count",
            "corollary",
            "orbdiam",
            "gamma0",
            "path",
            "nu",
            "verify_paper",
        }
