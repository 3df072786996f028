"""Shared service-layer helpers: soft deadlines, work estimates, cycle rendering."""

from __future__ import annotations

import time
from collections.abc import Sequence

import structlog

from diagctl.domain.errors import DeadlineExceeded
from diagctl.domain.groups import EnumeratedGroup
from diagctl.services.telemetry import get_current_span

log = structlog.get_logger("diagctl.work")

# Estimates above this many elementary products print without --verbose.
LOUD_WORK = 10**8


class Deadline:
    """Soft wall-clock deadline; ``None`` means unlimited.

    Only decides whether to *start* more work.  It never appears in
    outputs except as the ``incomplete`` flag, so results stay deterministic.
    """

    def __init__(self, max_seconds: float | None) -> None:
        self.max_seconds = max_seconds
        self._start = time.monotonic()

    def expired(self) -> bool:
        if self.max_seconds is None:
            return False
        return time.monotonic() - self._start >= self.max_seconds

    def check(self, what: str) -> None:
        if self.expired():
            raise DeadlineExceeded(
                f"--max-seconds={self.max_seconds} reached before {what}",
                max_seconds=self.max_seconds,
            )


def log_work_estimate(kind: str, products: int, **fields: object) -> None:
    """Emit a ``work.estimate`` event and charge it to the current span."""
    span = get_current_span()
    if span is not None:
        span.add_work(products)
    if products > LOUD_WORK:
        log.warning("work.estimate", kind=kind, products=products, **fields)
    else:
        log.debug("work.estimate", kind=kind, products=products, **fields)


def cycles_of(group: EnumeratedGroup, index: int) -> str:
    return group.element(index).to_cycles()


def tuple_cycles(group: EnumeratedGroup, indices: Sequence[int]) -> list[str]:
    return [cycles_of(group, int(i)) for i in indices]
