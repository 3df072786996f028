"""CharacterService: Dixon tables, table import/export and solution counts."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Any

from diagctl.domain.characters import (
    CharacterTable,
    align_table,
    corollary_membership,
    dixon_prime,
    dixon_table,
    frobenius_count,
    group_exponent,
    structure_counts,
)
from diagctl.domain.constructions import Construction
from diagctl.domain.errors import CapExceeded, DiagError, ParseError
from diagctl.infrastructure.tables import load_table, save_table
from diagctl.services._helpers import log_work_estimate
from diagctl.services.base import BaseService
from diagctl.services.contracts import (
    CharacterTableData,
    CorollaryData,
    CountData,
    dump_validated,
)
from diagctl.services.result import ServiceError, ServiceResult
from diagctl.services.telemetry import trace_span, traced


class CharacterService(BaseService):
    """Character tables and the character-sum solution counts."""

    def _table(self, construction: Construction, path: Path | None) -> CharacterTable:
        """Imported (and aligned) table when *path* is given, else the Dixon table."""
        if path is not None:
            return align_table(load_table(path), construction.group)
        cached = self._ws.tables.get(construction.label)
        if cached is None:
            with trace_span("dixon_table") as span:
                cached = dixon_table(construction.group, self._ws.caps.table_cap)
                if span is not None:
                    span.annotate("classes", cached.class_count)
            self._ws.tables[construction.label] = cached
        return cached

    @staticmethod
    def _check_classes(table: CharacterTable, class_ids: Sequence[int]) -> None:
        bad = [c for c in class_ids if not 0 <= c < table.class_count]
        if bad:
            raise ParseError(
                f"class ids must lie in 0..{table.class_count - 1}", bad=bad
            )

    @traced
    def chartable(
        self,
        spec: str | None,
        *,
        table_path: Path | None = None,
        save_path: Path | None = None,
    ) -> ServiceResult:
        """Compute (or import and align) the table; optionally write it to *save_path*."""
        op = "chartable"
        try:
            construction = self._construction(spec)
            group = construction.group
            table = self._table(construction, table_path)
            if save_path is not None:
                save_table(table, save_path)
        except DiagError as exc:
            return self._failure(op, exc)
        payload = table.to_dict()
        data = {
            "group": construction.label,
            "order": table.order,
            "source": "file" if table_path is not None else "dixon",
            "prime": None
            if table_path is not None
            else dixon_prime(group.order, group_exponent(group)),
            "degrees": payload["degrees"],
            "classes": payload["classes"],
            "values": payload["values"],
            "row_residual": table.row_residual(),
            "column_residual": table.column_residual(),
            "path": str(save_path) if save_path is not None else None,
        }
        return ServiceResult(ok=True, op=op, data=dump_validated(CharacterTableData, data))

    @traced
    def count(
        self,
        spec: str | None,
        class_ids: Sequence[int],
        *,
        z_class: int | None = None,
        table_path: Path | None = None,
        bruteforce: bool = True,
    ) -> ServiceResult:
        """Solutions of ``x_1⋯x_d = z`` with ``x_i ∈ C_i``, by characters and by convolution.

        Without *z_class* every class is a target.  When the brute-force
        work exceeds the cap only the character count is reported.
        """
        op = "count"
        warnings: list[str] = []
        try:
            construction = self._construction(spec)
            group = construction.group
            table = self._table(construction, table_path)
            self._check_classes(table, [*class_ids, *([z_class] if z_class is not None else [])])
            targets = [z_class] if z_class is not None else list(range(table.class_count))
            counts = None
            if bruteforce:
                try:
                    cap = self._ws.caps.bruteforce_cap
                    log_work_estimate(op, group.order * len(class_ids), group=construction.label)
                    counts = structure_counts(group, class_ids, cap)
                except CapExceeded as exc:
                    warnings.append(f"brute-force count skipped: {exc.message}")
            classes, _ = group.class_data()
            rows = []
            for z in targets:
                sol = frobenius_count(table, class_ids, z)
                brute = int(counts[classes[z].representative]) if counts is not None else None
                rows.append(
                    {
                        "z_class": z,
                        "frobenius": sol.value.real,
                        "rounded": sol.rounded,
                        "residual": sol.residual,
                        "bruteforce": brute,
                        "match": None if brute is None else brute == sol.rounded,
                    }
                )
        except DiagError as exc:
            return self._failure(op, exc, warnings=warnings)
        data = {
            "group": construction.label,
            "class_ids": list(class_ids),
            "count": len(rows),
            "items": rows,
        }
        if any(r["match"] is False for r in rows):
            return ServiceResult(
                ok=False,
                op=op,
                data=dump_validated(CountData, data),
                warnings=warnings,
                error=_mismatch(rows),
            )
        return ServiceResult(
            ok=True, op=op, data=dump_validated(CountData, data), warnings=warnings
        )

    @traced
    def corollary(
        self,
        spec: str | None,
        c_class: int,
        d_class: int,
        k: int,
        *,
        table_path: Path | None = None,
    ) -> ServiceResult:
        """Character-sum test for ``D ⊆ C^k``, cross-checked against the class products."""
        op = "corollary"
        try:
            construction = self._construction(spec)
            table = self._table(construction, table_path)
            self._check_classes(table, [c_class, d_class])
            magnitude, implied = corollary_membership(
                table, c_class, d_class, k, group=construction.group
            )
        except DiagError as exc:
            return self._failure(op, exc)
        data = {
            "group": construction.label,
            "c_class": c_class,
            "d_class": d_class,
            "k": k,
            "magnitude": magnitude,
            "implied": implied,
        }
        return ServiceResult(ok=True, op=op, data=dump_validated(CorollaryData, data))


def _mismatch(rows: list[dict[str, Any]]) -> ServiceError:
    bad = [r["z_class"] for r in rows if r["match"] is False]
    return ServiceError(
        code="COUNT_MISMATCH",
        message="character count disagrees with the brute-force count",
        detail={"z_classes": bad},
    )
