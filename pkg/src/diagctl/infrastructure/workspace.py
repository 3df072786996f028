"""Workspace: the single dependency injected into every service.

Owns the settings, the worker pool and the group registry for one CLI
invocation.  Pool and registry are created on first use so ``--help`` and
``schema`` never start threads or enumerate anything.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from diagctl.domain.characters import CharacterTable
from diagctl.domain.groups import ChunkMapper
from diagctl.infrastructure.registry import GroupRegistry
from diagctl.infrastructure.workers import WorkerPool

if TYPE_CHECKING:
    from diagctl.config.models import CapsConfig
    from diagctl.config.settings import DiagSettings

logger = logging.getLogger(__name__)


class Workspace:
    def __init__(self, settings: DiagSettings) -> None:
        self.settings = settings
        self._pool: WorkerPool | None = None
        self._registry: GroupRegistry | None = None
        # Character tables by group label, shared between services.
        self.tables: dict[str, CharacterTable] = {}

    @property
    def caps(self) -> CapsConfig:
        return self.settings.run.caps

    @property
    def pool(self) -> WorkerPool:
        if self._pool is None:
            self._pool = WorkerPool(self.settings.run.threads)
        return self._pool

    @property
    def mapper(self) -> ChunkMapper:
        """Ordered map used by the chunked kernels."""
        return self.pool.map

    @property
    def registry(self) -> GroupRegistry:
        if self._registry is None:
            self._registry = GroupRegistry(self.caps.order_cap)
        return self._registry

    def close(self) -> None:
        if self._pool is not None:
            self._pool.close()
