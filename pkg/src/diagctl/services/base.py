"""BaseService: foundation for all diagctl services.

Every service receives a :class:`Workspace` at construction time and turns
domain exceptions into failed :class:`ServiceResult` values; services never
raise :class:`~diagctl.domain.errors.DiagError` to their callers.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Any

from diagctl.domain.constructions import Construction
from diagctl.domain.errors import DiagError, ParseError
from diagctl.services._helpers import Deadline
from diagctl.services.result import ServiceResult

if TYPE_CHECKING:
    from diagctl.domain.groups import ChunkMapper
    from diagctl.infrastructure.workspace import Workspace

logger = logging.getLogger(__name__)


class BaseService:
    """Base for the service-layer classes.

    Usage::

        class WidthService(BaseService):
            def widths(self, spec: str | None) -> ServiceResult:
                try:
                    construction = self._construction(spec)
                    ...
                except DiagError as exc:
                    return self._failure("widths", exc)
    """

    def __init__(self, workspace: Workspace) -> None:
        self._ws = workspace

    @property
    def _mapper(self) -> ChunkMapper:
        return self._ws.mapper

    def _deadline(self) -> Deadline:
        return Deadline(self._ws.settings.run.max_seconds)

    def _construction(self, spec: str | None) -> Construction:
        """The group named by *spec*, falling back to ``[run] group``."""
        text = spec or self._ws.settings.run.group
        if not text:
            raise ParseError("no group given; pass a group spec or set [run] group")
        return self._ws.registry.get(text)

    @staticmethod
    def _failure(
        op: str,
        exc: DiagError,
        *,
        data: dict[str, Any] | None = None,
        warnings: list[str] | None = None,
    ) -> ServiceResult:
        logger.debug("%s failed: %s (%s)", op, exc.message, exc.code)
        return ServiceResult.failure(op, exc, data=data, warnings=warnings)
