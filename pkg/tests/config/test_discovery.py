"""Tests for config discovery."""

from pathlib import Path

import click
import pytest

from diagctl.config.discovery import CONFIG_ENV_VAR, CONFIG_FILENAME, find_config, resolve_config


class TestFindConfig:
    def test_finds_in_current_dir(self, tmp_path: Path) -> None:
        config_file = tmp_path / CONFIG_FILENAME
        config_file.write_text("[run]\nk = 3\n")
        assert find_config(tmp_path) == config_file

    def test_walks_up(self, tmp_path: Path) -> None:
        config_file = tmp_path / CONFIG_FILENAME
        config_file.write_text("")
        child = tmp_path / "a" / "b" / "c"
        child.mkdir(parents=True)
        assert find_config(child) == config_file

    def test_returns_none_when_not_found(self, tmp_path: Path) -> None:
        child = tmp_path / "empty"
        child.mkdir()
        assert find_config(child) is None

    def test_env_var_override(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        config_file = tmp_path / "custom.toml"
        config_file.write_text("")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(config_file))
        assert find_config(tmp_path / "elsewhere") == config_file

    def test_env_var_missing_file(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        (tmp_path / CONFIG_FILENAME).write_text("")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(tmp_path / "gone.toml"))
        assert find_config(tmp_path) is None

    def test_env_var_expands_home(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        (tmp_path / "home.toml").write_text("")
        monkeypatch.setenv("HOME", str(tmp_path))
        monkeypatch.setenv(CONFIG_ENV_VAR, "~/home.toml")
        assert find_config(tmp_path / "elsewhere") == tmp_path / "home.toml"


class TestResolveConfig:
    def test_explicit_path_wins(self, tmp_path: Path) -> None:
        (tmp_path / CONFIG_FILENAME).write_text("")
        explicit = tmp_path / "other.toml"
        explicit.write_text("")
        assert resolve_config(str(explicit), tmp_path) == explicit

    def test_falls_back_to_discovery(self, tmp_path: Path) -> None:
        config_file = tmp_path / CONFIG_FILENAME
        config_file.write_text("")
        assert resolve_config(None, tmp_path) == config_file

    def test_missing_explicit_path(self, tmp_path: Path) -> None:
        with pytest.raises(click.UsageError, match="Config file not found"):
            resolve_config(str(tmp_path / "gone.toml"), tmp_path)
