"""AppContext: the object every command receives through ``@click.pass_obj``.

Holds the settings, builds the :class:`Workspace` on first use and owns
result emission: format selection, ``-o`` redirection, stderr routing and
the exit status derived from the error code.
"""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

import click

from diagctl.output.formatters import OutputSettings, format_result
from diagctl.output.renderers import render_quiet

if TYPE_CHECKING:
    from diagctl.config.settings import DiagSettings
    from diagctl.infrastructure.workspace import Workspace
    from diagctl.services.result import ServiceResult

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_EXIT_BY_CODE = {
    "PARSE_ERROR": EXIT_USAGE,
    "CAP_EXCEEDED": EXIT_CAP,
}


def exit_code_for(result: ServiceResult) -> int:
    if result.ok:
        return EXIT_OK
    code = result.error.code if result.error else ""
    return _EXIT_BY_CODE.get(code, EXIT_FAILURE)


class AppContext:
    """Shared state for one invocation.

    The workspace (worker pool, group registry) is created lazily so
    ``--help``, ``--examples`` and ``schema`` stay instant.
    """

    def __init__(self, settings: DiagSettings) -> None:
        self.settings = settings
        self._workspace: Workspace | None = None

        from diagctl.config.logging import configure_logging

        configure_logging(verbose=settings.verbose, log_json=settings.log_json)

        if settings.verbose:
            from diagctl.services.telemetry import enable_telemetry

            enable_telemetry()

    @property
    def workspace(self) -> Workspace:
        if self._workspace is None:
            from diagctl.infrastructure.workspace import Workspace

            self._workspace = Workspace(self.settings)
        return self._workspace

    @property
    def output_settings(self) -> OutputSettings:
        return OutputSettings(
            format=self.settings.run.format,
            quiet=self.settings.quiet,
            verbose=self.settings.verbose,
        )

    def emit(self, result: ServiceResult) -> None:
        """Write *result* and exit with its status.

        Successful output goes to stdout (or the ``-o`` file) with warnings
        on stderr in non-JSON modes.  Failed results still write their
        rendering (to the ``-o`` file too, so partial verification data is
        kept) and exit 1, 2 or 3 depending on the error code.
        """
        settings = self.output_settings
        output = format_result(result, settings=settings)
        target: Path | None = self.settings.run.output
        if target is not None:
            target.write_text(output + "\n", encoding="utf-8")
        elif result.ok:
            click.echo(output)
        if result.ok:
            if settings.format != "json":
                for warning in result.warnings:
                    click.echo(f"WARNING: {warning}", err=True)
            return
        click.echo(output if target is None else render_quiet(result), err=True)
        raise SystemExit(exit_code_for(result))

    def close(self) -> None:
        if self._workspace is not None:
            self._workspace.close()
