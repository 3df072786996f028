"""Tests for the per-invocation group registry."""

from __future__ import annotations

import pytest

from diagctl.domain.errors import CapExceeded, ParseError
from diagctl.infrastructure.registry import GroupRegistry


class TestGroupRegistry:
    def test_builds_once(self) -> None:
        registry = GroupRegistry(order_cap=10_000)
        first = registry.get("PSL2(7)")
        assert registry.get("PSL2( 7 )") is first
        assert len(registry) == 1
        assert "PSL2(7)" in registry

    def test_unknown_spec(self) -> None:
        with pytest.raises(ParseError):
            GroupRegistry(order_cap=10_000).get("M11")

    def test_cap_is_applied(self) -> None:
        registry = GroupRegistry(order_cap=100)
        with pytest.raises(CapExceeded):
            registry.get("A6")
        assert "A6" not in registry
