"""Unified settings: CLI flags, env vars, and TOML config in one object.

Priority chain (highest to lowest):
  1. Init kwargs:   CLI flags passed by Click
  2. Env vars:      ``DIAGCTL_*`` prefix, ``__`` for nesting
                    (``DIAGCTL_RUN__CAPS__ORDER_CAP=500000``)
  3. TOML file:     ``diagctl.toml`` discovered via walk-up or ``--config``
  4. Code defaults: baked into the section models

Nested sections are deep-merged across sources, so ``--threads 4`` on the
command line keeps the ``[run.caps]`` values from the TOML file.
"""

from __future__ import annotations

import threading
import tomllib
from pathlib import Path
from typing import Any

import click
from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource

from diagctl.config.discovery import resolve_config
from diagctl.config.models import RunConfig


class TomlSettingsSource(PydanticBaseSettingsSource):
    """Read settings from a ``diagctl.toml`` file."""

    def __init__(self, settings_cls: type[BaseSettings], toml_path: Path | None) -> None:
        super().__init__(settings_cls)
        self._data: dict[str, Any] = {}
        if toml_path and toml_path.is_file():
            raw = toml_path.read_text(encoding="utf-8")
            try:
                self._data = tomllib.loads(raw)
            except tomllib.TOMLDecodeError as exc:
                msg = f"Invalid TOML in {toml_path}: {exc}"
                raise click.UsageError(msg) from exc

    def get_field_value(self, field: Any, field_name: str) -> tuple[Any, str, bool]:
        val = self._data.get(field_name)
        return val, field_name, field_name in self._data

    def __call__(self) -> dict[str, Any]:
        return self._data


# Thread-local storage for the TOML path during construction.
_tls = threading.local()


class DiagSettings(BaseSettings):
    """Settings for one diagctl invocation, stored on the click context.

    Attributes:
        config_path: The TOML file that was read, if any.
        run: Defaults and caps shared by every command.
    """

    model_config = {
        "frozen": True,
        "env_prefix": "DIAGCTL_",
        "env_nested_delimiter": "__",
    }

    config_path: Path | None = None

    # --- presentation flags ---
    quiet: bool = False
    verbose: bool = False
    log_json: bool = False

    # --- [run] section ---
    run: RunConfig = Field(default_factory=RunConfig)

    @property
    def json_output(self) -> bool:
        return self.run.format == "json"

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Insert the TOML source between env vars and defaults."""
        toml_path = getattr(_tls, "toml_path", None)
        return (
            init_settings,
            env_settings,
            TomlSettingsSource(settings_cls, toml_path),
        )

    @classmethod
    def from_cli(
        cls,
        *,
        config_path: str | None = None,
        start: Path | None = None,
        run: dict[str, Any] | None = None,
        **cli_flags: Any,
    ) -> DiagSettings:
        """Construct settings from a CLI invocation.

        *run* holds the ``[run]`` overrides given as flags; entries that
        are None are dropped so they do not mask the file or env values.
        """
        toml_path = resolve_config(config_path, start)

        overrides = {k: v for k, v in (run or {}).items() if v is not None}
        init: dict[str, Any] = {"config_path": toml_path, **cli_flags}
        if overrides:
            init["run"] = overrides

        _tls.toml_path = toml_path
        try:
            return cls(**init)
        finally:
            _tls.toml_path = None
