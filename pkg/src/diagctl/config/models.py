"""Pydantic configuration section models with code-baked defaults.

Sparse TOML contract: defaults live here, ``diagctl.toml`` only carries
overrides.  A typical file sets a default group and raises one cap::

    [run]
    group = "PSL2(13)"

    [run.caps]
    order_cap = 5000000

These section models are composed by :class:`~diagctl.config.settings.DiagSettings`.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, field_validator

from diagctl.domain.constructions import parse_aut_selector, parse_group_spec
from diagctl.domain.errors import ParseError
from diagctl.domain.types import Variant

OutputFormat = Literal["table", "json", "csv"]


class CapsConfig(BaseModel):
    """[run.caps] section."""

    model_config = {"frozen": True}

    order_cap: int = Field(default=2_000_000, gt=0)
    point_cap: int = Field(default=2**21, gt=0)
    cn_cap: int = Field(default=64, gt=0)
    table_cap: int = Field(default=25_000, gt=0)
    dot_cap: int = Field(default=5_000, gt=0)
    bruteforce_cap: int = Field(default=10**8, gt=0)


class RunConfig(BaseModel):
    """[run] section: defaults for every command."""

    model_config = {"frozen": True}

    group: str | None = None
    variant: Variant = Variant.DKT
    k: int = Field(default=2, ge=2)
    aut: str = "inn"
    format: OutputFormat = "table"
    threads: int | None = Field(default=None, gt=0)
    output: Path | None = None
    max_seconds: float | None = Field(default=None, gt=0)
    caps: CapsConfig = Field(default_factory=CapsConfig)

    @field_validator("group")
    @classmethod
    def _group_parses(cls, value: str | None) -> str | None:
        if value is not None:
            try:
                parse_group_spec(value)
            except ParseError as exc:
                raise ValueError(exc.message) from exc
        return value

    @field_validator("aut")
    @classmethod
    def _aut_parses(cls, value: str) -> str:
        try:
            parse_aut_selector(value)
        except ParseError as exc:
            raise ValueError(exc.message) from exc
        return value
