"""Tests for the order-preserving worker pool."""

from __future__ import annotations

import threading
import time

from diagctl.infrastructure.workers import WorkerPool, default_threads


class TestWorkerPool:
    def test_default_threads(self) -> None:
        assert default_threads() >= 1
        assert WorkerPool().threads == default_threads()

    def test_inline_when_single_threaded(self) -> None:
        seen: set[str] = set()

        def record(x: int) -> int:
            seen.add(threading.current_thread().name)
            return x * x

        pool = WorkerPool(1)
        assert pool.map(record, [1, 2, 3]) == [1, 4, 9]
        assert seen == {threading.current_thread().name}
        assert pool._executor is None

    def test_preserves_input_order(self) -> None:
        def slow_first(x: int) -> int:
            time.sleep(0.02 if x == 0 else 0)
            return x

        with WorkerPool(4) as pool:
            assert pool.map(slow_first, list(range(8))) == list(range(8))

    def test_close_is_idempotent(self) -> None:
        pool = WorkerPool(2)
        pool.map(abs, [-1, -2])
        pool.close()
        pool.close()
        assert pool._executor is None
