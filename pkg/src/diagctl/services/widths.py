"""WidthService: conjugacy widths, covering numbers and the combinatorial tests.

Work is spread over conjugacy classes with the workspace pool; each
class-level BFS runs serially inside its worker so the pool is never
re-entered.
"""

from __future__ import annotations

from typing import Any

from diagctl.domain.constructions import parse_aut_selector, resolve_automorphisms
from diagctl.domain.errors import DiagError, IdentityElement, InvariantViolation
from diagctl.domain.groups import conjugacy_classes
from diagctl.domain.widths import (
    covering_number_of_class,
    group_widths,
    involution_classes,
    noncommuting_conjugate,
    strongly_real_test,
    three_l_cycles_test,
)
from diagctl.services._helpers import cycles_of, log_work_estimate
from diagctl.services.base import BaseService
from diagctl.services.contracts import (
    CoveringData,
    CyclesData,
    InvolutionData,
    StronglyRealData,
    WidthsData,
    dump_validated,
)
from diagctl.services.result import ServiceResult
from diagctl.services.telemetry import trace_span, traced


class WidthService(BaseService):
    """Width reports per group."""

    @traced
    def widths(
        self,
        spec: str | None,
        *,
        aut: str | None = None,
        include_covering: bool = True,
    ) -> ServiceResult:
        """``c``, ``c_i``, ``c_X`` (and ``cn``) for every nontrivial class.

        ``aut`` selects ``X``: ``inn``, ``aut`` or ``file:<path>``.  With
        ``aut`` the maxima also carry ``c_a``.
        """
        op = "widths"
        try:
            construction = self._construction(spec)
            selector = parse_aut_selector(aut or self._ws.settings.run.aut)
            model, auts = resolve_automorphisms(construction, selector)
            group = model.group
            classes = conjugacy_classes(group)
            log_work_estimate(
                op,
                3 * len(classes) * group.order,
                group=construction.label,
                classes=len(classes),
            )
            self._deadline().check(op)
            with trace_span("group_widths") as span:
                if span is not None:
                    span.annotate("classes", len(classes))
                report = group_widths(
                    group,
                    auts,
                    label=construction.label,
                    x_label=str(selector),
                    cn_cap=self._ws.caps.cn_cap,
                    include_covering=include_covering,
                    class_mapper=self._mapper,
                )
            violations = report.chain_violations()
            if violations:
                raise InvariantViolation(
                    "width chain c_X ≤ c_i ≤ c ≤ cn is violated",
                    violations=violations,
                )
        except DiagError as exc:
            return self._failure(op, exc)

        maxima: dict[str, Any] = {
            "c": report.c,
            "c_i": report.c_i,
            "c_x": report.c_x,
            "cn": report.cn,
        }
        if selector.kind == "aut":
            maxima["c_a"] = report.c_x
        data = {
            "group": construction.label,
            "model": model.label,
            "order": report.order,
            "x": report.x_label,
            "classes": [
                {
                    "class_id": r.class_id,
                    "rep_cycles": r.rep_cycles,
                    "size": r.size,
                    "order": r.order,
                    "c": r.c,
                    "c_i": r.c_i,
                    "c_x": r.c_x,
                    "cn": r.cn,
                }
                for r in report.classes
            ],
            "maxima": maxima,
        }
        warnings = []
        if model is not construction:
            warnings.append(f"computed in the {model.label} model of {construction.label}")
        return ServiceResult(
            ok=True, op=op, data=dump_validated(WidthsData, data), warnings=warnings
        )

    @traced
    def covering(self, spec: str | None) -> ServiceResult:
        """``cn(G, C)`` per nontrivial class and ``cn(G)``."""
        op = "covering"
        try:
            construction = self._construction(spec)
            group = construction.group
            nontrivial = [c for c in conjugacy_classes(group) if c.representative != group.identity]
            if not nontrivial:
                raise IdentityElement("the trivial group has no nontrivial classes")
            self._deadline().check(op)
            cap = self._ws.caps.cn_cap
            values = self._mapper(
                lambda cid: covering_number_of_class(group, cid, cap), [c.id for c in nontrivial]
            )
        except DiagError as exc:
            return self._failure(op, exc)
        rows = [
            {
                "class_id": c.id,
                "rep_cycles": cycles_of(group, c.representative),
                "size": c.size,
                "cn": cn,
            }
            for c, cn in zip(nontrivial, values, strict=True)
        ]
        data = {
            "group": construction.label,
            "order": group.order,
            "classes": rows,
            "cn": max(values),
        }
        return ServiceResult(ok=True, op=op, data=dump_validated(CoveringData, data))

    @traced
    def strongly_real(self, spec: str | None) -> ServiceResult:
        """Whether every element is a product of at most two involutions."""
        op = "strongly_real"
        try:
            construction = self._construction(spec)
            group = construction.group
            holds = strongly_real_test(group, mapper=self._mapper)
        except DiagError as exc:
            return self._failure(op, exc)
        data = {
            "group": construction.label,
            "order": group.order,
            "involution_classes": involution_classes(group),
            "strongly_real": holds,
        }
        return ServiceResult(ok=True, op=op, data=dump_validated(StronglyRealData, data))

    @traced
    def cycles(self, n: int, l: int | None = None) -> ServiceResult:  # noqa: E741
        """Three ``l``-cycle predicate on ``A_n``; every odd ``l`` when none is given."""
        op = "cycles"
        ls = [l] if l is not None else list(range(3, n + 1, 2))
        try:
            group = self._ws.registry.get(f"A{n}").group
            rows = []
            for length in ls:
                holds = three_l_cycles_test(n, length, group=group, mapper=self._mapper)
                rows.append({"n": n, "l": length, "holds": holds})
        except DiagError as exc:
            return self._failure(op, exc)
        data = {"count": len(rows), "items": rows}
        return ServiceResult(ok=True, op=op, data=dump_validated(CyclesData, data))

    @traced
    def involution(self, spec: str | None) -> ServiceResult:
        """For each involution class, a conjugate ``u^x`` with ``u·u^x`` of order > 2."""
        op = "involution"
        try:
            construction = self._construction(spec)
            group = construction.group
            classes = conjugacy_classes(group)
            rows = []
            for cid in involution_classes(group):
                u = classes[cid].representative
                x = noncommuting_conjugate(group, u)
                y = int(group.multiply(u, group.conjugate(u, x)))
                rows.append(
                    {
                        "class_id": cid,
                        "u": cycles_of(group, u),
                        "x": cycles_of(group, x),
                        "product_order": group.element(y).order(),
                    }
                )
        except DiagError as exc:
            return self._failure(op, exc)
        data = {"group": construction.label, "count": len(rows), "items": rows}
        return ServiceResult(ok=True, op=op, data=dump_validated(InvolutionData, data))
