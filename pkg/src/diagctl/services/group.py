"""GroupService: construction reports for a single group."""

from __future__ import annotations

from typing import Any

from diagctl.domain.characters import group_exponent
from diagctl.domain.errors import DiagError
from diagctl.domain.groups import EnumeratedGroup, conjugacy_classes, inverse_classes
from diagctl.domain.widths import real_classes
from diagctl.services.base import BaseService
from diagctl.services.contracts import ClassesData, GroupInfoData, dump_validated
from diagctl.services.result import ServiceResult
from diagctl.services.telemetry import traced


def class_rows(group: EnumeratedGroup) -> list[dict[str, Any]]:
    inverse_of = inverse_classes(group)
    return [
        {
            "id": c.id,
            "size": c.size,
            "order": c.order,
            "rep_cycles": group.element(c.representative).to_cycles(),
            "inverse": int(inverse_of[c.id]),
            "real": bool(inverse_of[c.id] == c.id),
        }
        for c in conjugacy_classes(group)
    ]


class GroupService(BaseService):
    """Builds groups and describes them."""

    @traced
    def info(self, spec: str | None) -> ServiceResult:
        """Order, class count, class sizes and representative orders."""
        try:
            construction = self._construction(spec)
            group = construction.group
            classes = conjugacy_classes(group)
            data = {
                "group": construction.label,
                "order": group.order,
                "degree": group.degree,
                "generators": [g.to_cycles() for g in group.generators],
                "class_count": len(classes),
                "class_sizes": [c.size for c in classes],
                "rep_orders": [c.order for c in classes],
                "real_classes": real_classes(group),
                "exponent": group_exponent(group),
                "automorphisms": [
                    {"label": a.label, "kind": a.kind.value} for a in construction.realizations
                ],
            }
        except DiagError as exc:
            return self._failure("info", exc)
        return ServiceResult(ok=True, op="info", data=dump_validated(GroupInfoData, data))

    @traced
    def classes(self, spec: str | None) -> ServiceResult:
        """Conjugacy classes with orders, inverse classes and reality."""
        try:
            construction = self._construction(spec)
            rows = class_rows(construction.group)
        except DiagError as exc:
            return self._failure("classes", exc)
        data = {
            "group": construction.label,
            "order": construction.group.order,
            "count": len(rows),
            "items": rows,
        }
        return ServiceResult(ok=True, op="classes", data=dump_validated(ClassesData, data))
