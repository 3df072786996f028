"""Tests for DiagSettings: unified settings with TOML source."""

from pathlib import Path

import click
import pytest
from pydantic import ValidationError

from diagctl.config.settings import DiagSettings
from diagctl.domain.types import Variant


class TestDiagSettingsDefaults:
    def test_all_defaults(self) -> None:
        """With no TOML and no env vars, all fields use code defaults."""
        settings = DiagSettings.from_cli()
        assert settings.config_path is None
        assert settings.json_output is False
        assert settings.quiet is False
        assert settings.verbose is False
        assert settings.run.group is None
        assert settings.run.variant is Variant.DKT
        assert settings.run.k == 2
        assert settings.run.aut == "inn"
        assert settings.run.caps.order_cap == 2_000_000
        assert settings.run.caps.cn_cap == 64

    def test_frozen(self) -> None:
        settings = DiagSettings.from_cli()
        with pytest.raises(ValidationError):
            settings.quiet = True  # type: ignore[misc]


class TestTomlSource:
    def test_loads_from_toml(self, tmp_path: Path) -> None:
        (tmp_path / "diagctl.toml").write_text(
            '[run]\ngroup = "PSL2(13)"\nvariant = "Tk"\n[run.caps]\norder_cap = 5000\n'
        )
        settings = DiagSettings.from_cli(start=tmp_path)
        assert settings.run.group == "PSL2(13)"
        assert settings.run.variant is Variant.TK
        assert settings.run.caps.order_cap == 5000
        assert settings.run.caps.point_cap == 2**21
        assert settings.config_path == tmp_path / "diagctl.toml"

    def test_empty_toml_uses_defaults(self, tmp_path: Path) -> None:
        (tmp_path / "diagctl.toml").write_text("")
        settings = DiagSettings.from_cli(start=tmp_path)
        assert settings.run.k == 2

    def test_explicit_config_path(self, tmp_path: Path) -> None:
        custom = tmp_path / "custom" / "my.toml"
        custom.parent.mkdir(parents=True)
        custom.write_text("[run]\nk = 3\n")
        settings = DiagSettings.from_cli(config_path=str(custom))
        assert settings.run.k == 3
        assert settings.config_path == custom

    def test_missing_config_path(self, tmp_path: Path) -> None:
        with pytest.raises(click.UsageError, match="Config file not found"):
            DiagSettings.from_cli(config_path=str(tmp_path / "nope.toml"))

    def test_invalid_toml(self, tmp_path: Path) -> None:
        (tmp_path / "diagctl.toml").write_text("[run\n")
        with pytest.raises(click.UsageError, match="Invalid TOML"):
            DiagSettings.from_cli(start=tmp_path)

    def test_invalid_group_spec(self, tmp_path: Path) -> None:
        (tmp_path / "diagctl.toml").write_text('[run]\ngroup = "B7"\n')
        with pytest.raises(ValidationError, match="unrecognized group spec"):
            DiagSettings.from_cli(start=tmp_path)


class TestCliFlags:
    def test_flags_override(self) -> None:
        settings = DiagSettings.from_cli(quiet=True, verbose=True, run={"format": "json"})
        assert settings.quiet is True
        assert settings.verbose is True
        assert settings.json_output is True

    def test_none_flags_keep_file_values(self, tmp_path: Path) -> None:
        (tmp_path / "diagctl.toml").write_text("[run]\nthreads = 3\nmax_seconds = 60\n")
        settings = DiagSettings.from_cli(start=tmp_path, run={"threads": None, "max_seconds": 5})
        assert settings.run.threads == 3
        assert settings.run.max_seconds == 5

    def test_flags_keep_nested_caps(self, tmp_path: Path) -> None:
        (tmp_path / "diagctl.toml").write_text("[run.caps]\ncn_cap = 8\n")
        settings = DiagSettings.from_cli(start=tmp_path, run={"threads": 4})
        assert settings.run.threads == 4
        assert settings.run.caps.cn_cap == 8

    def test_threads_must_be_positive(self) -> None:
        with pytest.raises(ValidationError):
            DiagSettings.from_cli(run={"threads": 0})


class TestEnvVars:
    def test_env_var_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("DIAGCTL_QUIET", "true")
        assert DiagSettings.from_cli().quiet is True

    def test_nested_env_var_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("DIAGCTL_RUN__CAPS__ORDER_CAP", "500000")
        assert DiagSettings.from_cli().run.caps.order_cap == 500000

    def test_env_beats_toml(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        (tmp_path / "diagctl.toml").write_text("[run]\nk = 3\n")
        monkeypatch.setenv("DIAGCTL_RUN__K", "4")
        assert DiagSettings.from_cli(start=tmp_path).run.k == 4
