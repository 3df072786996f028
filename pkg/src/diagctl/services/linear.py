"""LinearService: the ν invariant and the width lower bound it gives."""

from __future__ import annotations

from typing import Any

from diagctl.domain.constructions import (
    AutSelector,
    element_nus,
    nu,
    nu_ratio_bound,
    resolve_automorphisms,
    singer_matrix,
    transvection_matrix,
)
from diagctl.domain.errors import BoundViolation, DiagError, ParseError
from diagctl.domain.widths import group_widths
from diagctl.services._helpers import cycles_of
from diagctl.services.base import BaseService
from diagctl.services.contracts import NuData, dump_validated
from diagctl.services.result import ServiceResult
from diagctl.services.telemetry import trace_span, traced

_LINEAR_SPECS = {2: "PSL2({q})", 3: "PSL3({q})"}


class LinearService(BaseService):
    @traced
    def nu(self, n: int, q: int, *, compare: bool = False) -> ServiceResult:
        """ν of a transvection and a Singer element of ``SL_n(q)``.

        With *compare*, also builds ``PSL_n(q)`` (``n ∈ {2, 3}``), computes
        ``c_A`` per class and checks ``c_A(T, s) ≥ ν(Singer)/ν(s)`` for every
        nontrivial class ``s``; a breach is ``BOUND_VIOLATION``.
        """
        op = "nu"
        try:
            if n < 2:
                raise ParseError("n must be at least 2", n=n)
            nu_t = nu(transvection_matrix(n, q))
            nu_s = nu(singer_matrix(n, q))
            ratio = nu_ratio_bound(nu_s, nu_t)
            data: dict[str, Any] = {
                "n": n,
                "q": q,
                "transvection": nu_t,
                "singer": nu_s,
                "ratio": str(ratio),
            }
            if compare:
                data |= self._compare(n, q, nu_s)
        except DiagError as exc:
            return self._failure(op, exc)
        if data.get("bound_holds") is False:
            breaches = [r["class_id"] for r in data["classes"] if not r["holds"]]
            return self._failure(
                op,
                BoundViolation("a class is narrower than its ν bound", classes=breaches),
                data=dump_validated(NuData, data),
            )
        return ServiceResult(ok=True, op=op, data=dump_validated(NuData, data))

    def _compare(self, n: int, q: int, nu_max: int) -> dict[str, Any]:
        template = _LINEAR_SPECS.get(n)
        if template is None:
            raise ParseError("width comparison is available for n = 2 and n = 3 only", n=n)
        construction = self._ws.registry.get(template.format(q=q))
        model, auts = resolve_automorphisms(construction, AutSelector("aut"))
        with trace_span("widths"):
            report = group_widths(
                model.group,
                auts,
                label=construction.label,
                x_label="aut",
                include_covering=False,
                class_mapper=self._mapper,
            )
        nus = element_nus(construction)
        group = construction.group
        rows = []
        for record in report.classes:
            value = int(nus[record.class_id])
            bound = nu_ratio_bound(nu_max, value) if value else None
            rows.append(
                {
                    "class_id": record.class_id,
                    "rep_cycles": cycles_of(group, record.representative),
                    "nu": value,
                    "c_a": record.c_x,
                    "bound": str(bound) if bound is not None else "-",
                    "holds": bound is None or record.c_x >= bound,
                }
            )
        return {
            "c_a": report.c_x,
            "bound_holds": all(r["holds"] for r in rows),
            "classes": rows,
        }
