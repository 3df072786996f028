"""Command: print the JSON schemas of the result envelope and payloads."""

from __future__ import annotations

import json

import click

from diagctl.commands._base import DiagCommand


@click.command(
    cls=DiagCommand,
    examples="""\
  diagctl schema
  diagctl schema --op widths
  diagctl schema --op verify_paper > verify.schema.json""",
)
@click.option("--op", "op", default=None, help="Only the payload schema of this operation.")
def schema(op: str | None) -> None:
    """JSON schema of ServiceResult and of every operation payload."""
    from diagctl.services.contracts import PAYLOAD_CONTRACTS
    from diagctl.services.result import ServiceResult

    if op is not None:
        model = PAYLOAD_CONTRACTS.get(op)
        if model is None:
            choices = ", ".join(sorted(PAYLOAD_CONTRACTS))
            raise click.BadParameter(
                f"unknown op {op!r}; expected one of {choices}", param_hint="--op"
            )
        click.echo(json.dumps(model.model_json_schema(), indent=2))
        return
    document = {
        "envelope": ServiceResult.model_json_schema(),
        "payloads": {name: m.model_json_schema() for name, m in sorted(PAYLOAD_CONTRACTS.items())},
    }
    click.echo(json.dumps(document, indent=2))
