"""Tests for the rich console factory and theme."""

from io import StringIO

from diagctl.output.console import DIAG_THEME, create_console, get_output, style_for_status


class TestCreateConsole:
    def test_returns_console_with_stringio(self) -> None:
        console = create_console()
        assert isinstance(console.file, StringIO)

    def test_no_color_disables_ansi(self) -> None:
        console = create_console(no_color=True)
        console.print("[diag.error]boom[/diag.error]")
        output = get_output(console)
        assert "\x1b" not in output
        assert "boom" in output

    def test_custom_width(self) -> None:
        assert create_console(width=80).width == 80

    def test_default_width(self) -> None:
        assert create_console().width == 120


class TestTheme:
    def test_check_styles_are_themed(self) -> None:
        for status in ("pass", "fail", "skipped"):
            assert f"diag.check.{status}" in DIAG_THEME.styles

    def test_style_for_status(self) -> None:
        assert style_for_status("pass") == "diag.check.pass"
        assert style_for_status("fail") == "diag.check.fail"
        assert style_for_status("skipped") == "diag.check.skipped"

    def test_unknown_status_is_unstyled(self) -> None:
        assert style_for_status("pending") == ""
