"""WorkerPool: thread pool with an order-preserving map.

numpy releases the GIL inside the gather kernels, so threads give real
parallelism for the chunked products.  :meth:`WorkerPool.map` has the
:data:`~diagctl.domain.groups.ChunkMapper` signature and always returns
results in input order, so output never depends on the thread count.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Any

logger = logging.getLogger(__name__)


def default_threads() -> int:
    """Available parallelism for this process."""
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


class WorkerPool:
    """Lazily started thread pool; ``threads == 1`` runs inline."""

    def __init__(self, threads: int | None = None) -> None:
        self.threads = threads or default_threads()
        self._executor: ThreadPoolExecutor | None = None

    def map(self, fn: Callable[[Any], Any], items: Sequence[Any]) -> list[Any]:
        if self.threads == 1 or len(items) <= 1:
            return [fn(item) for item in items]
        if self._executor is None:
            logger.debug("starting worker pool with %d threads", self.threads)
            self._executor = ThreadPoolExecutor(
                max_workers=self.threads, thread_name_prefix="diagctl"
            )
        return list(self._executor.map(fn, items))

    def close(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None

    def __enter__(self) -> WorkerPool:
        return self

    def __exit__(self, *exc: object) -> None:
        self.close()
