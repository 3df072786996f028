"""GroupRegistry: group spec strings to built constructions, cached."""

from __future__ import annotations

import logging
import threading

from diagctl.domain.constructions import Construction, build_construction, parse_group_spec

logger = logging.getLogger(__name__)


class GroupRegistry:
    """Builds each group once per invocation.

    Keys are the canonical spec labels, so ``PSL2(7)`` and ``PSL2( 7 )``
    share an entry.
    """

    def __init__(self, order_cap: int) -> None:
        self.order_cap = order_cap
        self._cache: dict[str, Construction] = {}
        self._lock = threading.Lock()

    def get(self, spec_text: str) -> Construction:
        spec = parse_group_spec(spec_text)
        with self._lock:
            cached = self._cache.get(spec.label)
            if cached is None:
                logger.debug("building %s", spec.label)
                cached = build_construction(spec, self.order_cap)
                self._cache[spec.label] = cached
            return cached

    def __contains__(self, spec_text: str) -> bool:
        return parse_group_spec(spec_text).label in self._cache

    def __len__(self) -> int:
        return len(self._cache)
