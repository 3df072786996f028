"""Tests for the configuration section models."""

import pytest
from pydantic import ValidationError

from diagctl.config.models import CapsConfig, RunConfig
from diagctl.domain.types import Variant


class TestCapsConfig:
    def test_defaults(self) -> None:
        caps = CapsConfig()
        assert caps.point_cap == 2**21
        assert caps.table_cap == 25_000
        assert caps.dot_cap == 5_000
        assert caps.bruteforce_cap == 10**8

    @pytest.mark.parametrize("field", ["order_cap", "point_cap", "cn_cap"])
    def test_positive(self, field: str) -> None:
        with pytest.raises(ValidationError):
            CapsConfig.model_validate({field: 0})


class TestRunConfig:
    def test_variant_from_string(self) -> None:
        assert RunConfig.model_validate({"variant": "TkSk"}).variant is Variant.TKSK

    def test_unknown_variant(self) -> None:
        with pytest.raises(ValidationError):
            RunConfig.model_validate({"variant": "Sk"})

    def test_k_at_least_two(self) -> None:
        with pytest.raises(ValidationError):
            RunConfig(k=1)

    @pytest.mark.parametrize("aut", ["inn", "aut", "file:outer.gens"])
    def test_aut_selectors(self, aut: str) -> None:
        assert RunConfig(aut=aut).aut == aut

    def test_bad_aut_selector(self) -> None:
        with pytest.raises(ValidationError, match="automorphism selector"):
            RunConfig(aut="outer")

    def test_format_choices(self) -> None:
        with pytest.raises(ValidationError):
            RunConfig.model_validate({"format": "yaml"})
