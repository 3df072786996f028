"""Tests for the --examples flag on every command.

Parametrized over the root group and all standalone commands.
"""

from __future__ import annotations

import pytest
from click.testing import CliRunner

from diagctl.cli import cli

# (CLI args, expected keywords in output)
EXAMPLES_COMMANDS: list[tuple[list[str], list[str]]] = [
    (["--examples"], ["diagctl info A5", "verify-paper --suite widths"]),
    (["info", "--examples"], ["diagctl info A5", "file:groups/j1.gens"]),
    (["classes", "--examples"], ["diagctl classes A6"]),
    (["widths", "--examples"], ["--aut aut", "--no-covering"]),
    (["covering", "--examples"], ["diagctl covering A8"]),
    (["strongly-real", "--examples"], ["diagctl strongly-real A6"]),
    (["cycles", "--examples"], ["diagctl cycles 9 -l 5"]),
    (["involution", "--examples"], ["diagctl involution A5"]),
    (["chartable", "--examples"], ["--save psl27.json", "--import"]),
    (["count", "--examples"], ["diagctl count A5 1 1", "--no-bruteforce"]),
    (["corollary", "--examples"], ["diagctl corollary A5 4 4 3"]),
    (["orbdiam", "--examples"], ["--variant DkT", "--imprimitive", "--coords"]),
    (["gamma0", "--examples"], ["--dot g.dot"]),
    (["path", "--examples"], ["--target"]),
    (["nu", "--examples"], ["--compare"]),
    (["verify-paper", "--examples"], ["--max-seconds 600", "--suite all"]),
    (["schema", "--examples"], ["diagctl schema --op widths"]),
]


def _examples_id(item: tuple[list[str], list[str]]) -> str:
    args, _ = item
    return "_".join(a for a in args if a != "--examples") or "root"


@pytest.mark.parametrize(
    "args,expected_keywords",
    EXAMPLES_COMMANDS,
    ids=[_examples_id(item) for item in EXAMPLES_COMMANDS],
)
def test_examples_flag(
    cli_runner: CliRunner, args: list[str], expected_keywords: list[str]
) -> None:
    result = cli_runner.invoke(cli, args)
    assert result.exit_code == 0
    assert result.output.startswith("Examples for ")
    for kw in expected_keywords:
        assert kw in result.output, f"Expected '{kw}' in examples output for {args}"


class TestExamplesInHelp:
    @pytest.mark.parametrize("command", ["info", "widths", "orbdiam", "verify-paper", "schema"])
    def test_examples_in_help(self, cli_runner: CliRunner, command: str) -> None:
        result = cli_runner.invoke(cli, [command, "--help"])
        assert result.exit_code == 0
        assert "--examples" in result.output

    def test_examples_does_not_need_arguments(self, cli_runner: CliRunner) -> None:
        # count requires SPEC and CLASS_IDS, but --examples is eager
        result = cli_runner.invoke(cli, ["count", "--examples"])
        assert result.exit_code == 0
