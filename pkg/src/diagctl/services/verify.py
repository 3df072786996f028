"""VerifyService: reproducible checks of the published width and diameter values.

Each suite is a list of :class:`Check` records run in order.  A check
computes a value, compares it with its expectation and records
``pass``/``fail``; a domain error is a ``fail`` with the error noted.  Once
the soft deadline (``--max-seconds``) passes, remaining checks are
``skipped`` and the run is marked incomplete.
"""

from __future__ import annotations

import itertools
import operator
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from diagctl.domain.characters import (
    CharacterTable,
    corollary_membership,
    dixon_table,
    frobenius_count,
    structure_counts,
)
from diagctl.domain.constructions import (
    AutSelector,
    Construction,
    nu,
    nu_ratio_bound,
    resolve_automorphisms,
    singer_matrix,
    transvection_matrix,
)
from diagctl.domain.diagonal import (
    bound_certificate,
    inverse_conjugacy_width,
    make_geometry,
    orbdiam,
)
from diagctl.domain.errors import BoundViolation, DiagError, ParseError
from diagctl.domain.groups import conjugacy_classes, element_order
from diagctl.domain.types import CheckStatus, Variant, VerifySuite
from diagctl.domain.widths import (
    WidthReport,
    covering_number_of_class,
    group_widths,
    involution_classes,
    noncommuting_conjugate,
    strongly_real_test,
    three_l_cycles_test,
)
from diagctl.services.base import BaseService
from diagctl.services.contracts import VerifyData, dump_validated
from diagctl.services.result import ServiceError, ServiceResult
from diagctl.services.telemetry import trace_span, traced

SUITES = tuple(s.value for s in VerifySuite)


@dataclass(frozen=True)
class Check:
    id: str
    source: str
    expected: Any
    compute: Callable[[], Any]
    accept: Callable[[Any, Any], bool] = operator.eq


def _at_least(expected: Any, computed: Any) -> bool:
    return bool(computed >= expected)


class VerifyService(BaseService):
    """Runs the verification suites."""

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._reports: dict[tuple[str, str, bool], WidthReport] = {}

    # ------------------------------------------------------------------
    # Cached building blocks
    # ------------------------------------------------------------------

    def _build(self, spec: str) -> Construction:
        return self._ws.registry.get(spec)

    def _report(self, spec: str, aut: str = "inn", covering: bool = False) -> WidthReport:
        key = (spec, aut, covering)
        if key not in self._reports:
            construction = self._build(spec)
            model, auts = resolve_automorphisms(construction, AutSelector(aut))
            self._reports[key] = group_widths(
                model.group,
                auts,
                label=construction.label,
                x_label=aut,
                cn_cap=self._ws.caps.cn_cap,
                include_covering=covering,
                class_mapper=self._mapper,
            )
        return self._reports[key]

    def _covering(self, spec: str) -> int:
        group = self._build(spec).group
        ids = [c.id for c in conjugacy_classes(group) if c.representative != group.identity]
        cap = self._ws.caps.cn_cap
        return max(self._mapper(lambda cid: covering_number_of_class(group, cid, cap), ids))

    def _table(self, spec: str) -> CharacterTable:
        construction = self._build(spec)
        cached = self._ws.tables.get(construction.label)
        if cached is None:
            cached = dixon_table(construction.group, self._ws.caps.table_cap)
            self._ws.tables[construction.label] = cached
        return cached

    # ------------------------------------------------------------------
    # Suites
    # ------------------------------------------------------------------

    def _widths_suite(self) -> list[Check]:
        src = "conjugacy widths of small simple groups"
        checks: list[Check] = []
        for spec in ("A5", "A6", "A7", "PSL2(7)", "PSL3(2)", "PSL3(3)"):
            for name in ("c", "c_i"):
                checks.append(
                    Check(
                        f"widths.{spec}.{name}",
                        src,
                        3,
                        lambda s=spec, n=name: getattr(self._report(s), n),
                    )
                )
        chain = ["A8", *(f"PSL2({q})" for q in (4, 5, 7, 8, 9, 11, 13, 16, 17, 19)), "PSL3(4)"]
        for spec in ("A5", "A6", "A7", *chain):
            checks.append(
                Check(
                    f"widths.{spec}.chain",
                    "c_A ≤ c_i ≤ c ≤ cn",
                    [],
                    lambda s=spec: self._report(s, "aut", covering=True).chain_violations(),
                )
            )
        return checks

    def _covering_suite(self) -> list[Check]:
        src = "covering numbers"
        expected = {
            "A5": 3,
            "A6": 3,
            "A7": 3,
            "A8": 4,
            **{f"PSL2({q})": 3 for q in (4, 5, 7, 8, 9, 11, 13)},
            "PSL3(2)": 3,
            "PSL3(3)": 3,
            "PSL3(4)": 3,
        }
        return [
            Check(f"covering.{spec}", src, value, lambda s=spec: self._covering(s))
            for spec, value in expected.items()
        ]

    def _aut_suite(self) -> list[Check]:
        expected = {
            "A5": 2,
            "A6": 2,
            "A7": 3,
            **{f"PSL2({q})": 2 for q in (4, 5, 9, 13, 16, 17)},
            **{f"PSL2({q})": 3 for q in (7, 8, 11, 19)},
            "PSL3(2)": 3,
            "PSL3(3)": 3,
        }
        return [
            Check(
                f"aut.{spec}.c_a",
                "automorphism width: 2 iff q ≡ 1 mod 4 or q an even power of 2",
                value,
                lambda s=spec: self._report(s, "aut").c_x,
            )
            for spec, value in expected.items()
        ]

    def _strongly_real_suite(self) -> list[Check]:
        expected = {
            "A5": True,
            "A6": True,
            "PSL2(8)": True,
            "PSL2(9)": True,
            "PSL2(17)": True,
            "A7": False,
            "A8": False,
            "PSL2(7)": False,
            "PSL2(11)": False,
        }
        return [
            Check(
                f"strongly-real.{spec}",
                "products of two involutions",
                value,
                lambda s=spec: strongly_real_test(self._build(s).group, mapper=self._mapper),
            )
            for spec, value in expected.items()
        ]

    def _cycles_suite(self) -> list[Check]:
        checks = []
        for n in range(5, 10):
            for l in range(3, n + 1, 2):  # noqa: E741
                checks.append(
                    Check(
                        f"cycles.A{n}.l{l}",
                        "three l-cycles: 2l ≥ n or (n, l) = (7, 3)",
                        2 * l >= n or (n, l) == (7, 3),
                        lambda n=n, l=l: three_l_cycles_test(  # noqa: E741
                            n, l, group=self._build(f"A{n}").group, mapper=self._mapper
                        ),
                    )
                )
        return checks

    def _count_mismatches(self, spec: str, d: int) -> int:
        """Class tuples of length *d* and targets where the two counts differ."""
        group = self._build(spec).group
        table = self._table(spec)
        classes, _ = group.class_data()
        bad = 0
        for combo in itertools.product(range(len(classes)), repeat=d):
            counts = structure_counts(group, combo, self._ws.caps.bruteforce_cap)
            for z, cls in enumerate(classes):
                sol = frobenius_count(table, combo, z)
                if sol.residual >= 1e-4 or sol.rounded != int(counts[cls.representative]):
                    bad += 1
        return bad

    def _corollary_sound(self, spec: str, max_k: int) -> int:
        """Implied containments across all nontrivial pairs; raises if one is false."""
        group = self._build(spec).group
        table = self._table(spec)
        implied = 0
        ids = range(1, len(conjugacy_classes(group)))
        for c, d, k in itertools.product(ids, ids, range(1, max_k + 1)):
            implied += corollary_membership(table, c, d, k, group=group)[1]
        return implied

    def _characters_suite(self) -> list[Check]:
        checks = []
        degrees = {"A5": [1, 3, 3, 4, 5], "PSL2(7)": [1, 3, 3, 6, 7, 8]}
        for spec, value in degrees.items():
            checks.append(
                Check(
                    f"characters.{spec}.degrees",
                    "Dixon table",
                    value,
                    lambda s=spec: sorted(self._table(s).degrees),
                )
            )
            checks.append(
                Check(
                    f"characters.{spec}.residual",
                    "orthogonality relations",
                    1e-8,
                    lambda s=spec: max(
                        self._table(s).row_residual(), self._table(s).column_residual()
                    ),
                    accept=lambda e, c: c < e,
                )
            )
            for d in (1, 2, 3):
                checks.append(
                    Check(
                        f"characters.{spec}.counts.d{d}",
                        "character-sum count equals brute force",
                        0,
                        lambda s=spec, d=d: self._count_mismatches(s, d),
                    )
                )
        checks.append(
            Check(
                "characters.A5.involution-pairs",
                "character-sum count",
                15,
                lambda: frobenius_count(
                    self._table("A5"),
                    [involution_classes(self._build("A5").group)[0]] * 2,
                    0,
                ).rounded,
            )
        )
        checks.append(
            Check(
                "characters.A5.corollary",
                "character bound never claims a missing class",
                0,
                lambda: self._corollary_sound("A5", 4),
                accept=lambda e, c: c > e,
            )
        )
        return checks

    def _nu_check(self) -> bool:
        construction = self._build("PSL3(3)")
        bound = nu_ratio_bound(nu(singer_matrix(3, 3)), nu(transvection_matrix(3, 3)))
        c_a = self._report(construction.label, "aut").c_x
        if c_a < bound:
            raise BoundViolation("c_A below the ν ratio", c_a=c_a, bound=str(bound))
        return True

    def _nu_suite(self) -> list[Check]:
        src = "eigenspace codimension"
        return [
            Check("nu.SL3(3).transvection", src, 1, lambda: nu(transvection_matrix(3, 3))),
            Check("nu.SL3(3).singer", src, 3, lambda: nu(singer_matrix(3, 3))),
            Check(
                "nu.SL3(3).ratio",
                src,
                "3",
                lambda: str(nu_ratio_bound(nu(singer_matrix(3, 3)), nu(transvection_matrix(3, 3)))),
            ),
            Check("nu.PSL3(3).bound", "c_A ≥ ν ratio", True, self._nu_check),
        ]

    def _involutions_found(self, spec: str) -> bool:
        """Whether every involution class has a conjugate with a non-involution product."""
        group = self._build(spec).group
        classes = conjugacy_classes(group)
        ids = involution_classes(group)
        found = 0
        for cid in ids:
            u = classes[cid].representative
            x = noncommuting_conjugate(group, u)
            y = int(group.multiply(u, group.conjugate(u, x)))
            found += element_order(group, y) > 2
        return found == len(ids)

    def _involutions_suite(self) -> list[Check]:
        specs = ["A5", "A6", "A7", "A8", *(f"PSL2({q})" for q in (4, 5, 7, 8, 9, 11, 13))]
        return [
            Check(
                f"involutions.{spec}",
                "noncommuting conjugate of every involution",
                True,
                lambda s=spec: self._involutions_found(s),
            )
            for spec in specs
        ]

    def _orbdiam(self, spec: str, k: int, variant: Variant) -> int:
        construction = self._build(spec)
        model, auts = construction, ()
        if variant is Variant.DKT:
            model, auts = resolve_automorphisms(construction, AutSelector("aut"))
        geometry = make_geometry(
            model.group, k, variant, automorphisms=auts, point_cap=self._ws.caps.point_cap
        )
        return orbdiam(geometry, mapper=self._mapper).orbdiam

    def _sandwich_failures(self, spec: str, k: int, variant: Variant) -> list[str]:
        """Classes ``t`` whose ``Γ_0^t`` leaves the bound interval."""
        construction = self._build(spec)
        model, auts = construction, ()
        if variant is Variant.DKT:
            model, auts = resolve_automorphisms(construction, AutSelector("aut"))
        group = model.group
        geometry = make_geometry(
            group, k, variant, automorphisms=auts, point_cap=self._ws.caps.point_cap
        )
        c_i = inverse_conjugacy_width(group)
        failures = []
        for cls in conjugacy_classes(group)[1:]:
            try:
                bound_certificate(geometry, cls.representative, c_i=c_i, mapper=self._mapper)
            except BoundViolation as exc:
                failures.append(f"{exc.detail['t']}: {exc.message}")
        return failures

    def _diagonal_suite(self) -> list[Check]:
        checks = []
        equalities = {
            ("A5", Variant.TK): 3,
            ("A5", Variant.DKT): 2,
            ("PSL2(7)", Variant.TK): 3,
            ("PSL2(7)", Variant.DKT): 3,
        }
        for (spec, variant), value in equalities.items():
            checks.append(
                Check(
                    f"diagonal.{spec}.k2.{variant.value}.orbdiam",
                    "orbdiam of T² equals c_i; of D(2, T) equals c_A",
                    value,
                    lambda s=spec, v=variant: self._orbdiam(s, 2, v),
                )
            )
        sandwiches = [
            (2, Variant.TK),
            (2, Variant.TKSK),
            (2, Variant.DKT),
            (3, Variant.TKSK),
            (3, Variant.DKT),
        ]
        for k, variant in sandwiches:
            checks.append(
                Check(
                    f"diagonal.A5.k{k}.{variant.value}.bounds",
                    "lower and upper diameter bounds",
                    [],
                    lambda k=k, v=variant: self._sandwich_failures("A5", k, v),
                )
            )
        checks.append(
            Check(
                "diagonal.A5.k3.DkT.strict",
                "orbdiam ≥ k + 1 when c_A = 2",
                4,
                lambda: self._orbdiam("A5", 3, Variant.DKT),
                accept=_at_least,
            )
        )
        return checks

    def _suite(self, name: str) -> list[Check]:
        builders: dict[str, Callable[[], list[Check]]] = {
            "widths": self._widths_suite,
            "covering": self._covering_suite,
            "aut": self._aut_suite,
            "strongly-real": self._strongly_real_suite,
            "cycles": self._cycles_suite,
            "characters": self._characters_suite,
            "nu": self._nu_suite,
            "involutions": self._involutions_suite,
            "diagonal": self._diagonal_suite,
        }
        if name == "all":
            return [c for suite in SUITES for c in builders[suite]()]
        if name not in builders:
            raise ParseError(f"unknown suite {name!r}", choices=[*SUITES, "all"])
        return builders[name]()

    # ------------------------------------------------------------------
    # Runner
    # ------------------------------------------------------------------

    @traced
    def verify(self, suite: str) -> ServiceResult:
        """Run *suite*; ok only when every check passes."""
        op = "verify_paper"
        try:
            checks = self._suite(suite)
        except DiagError as exc:
            return self._failure(op, exc)
        deadline = self._deadline()
        records: list[dict[str, Any]] = []
        for check in checks:
            record: dict[str, Any] = {
                "id": check.id,
                "source": check.source,
                "expected": check.expected,
            }
            if deadline.expired():
                record["status"] = CheckStatus.SKIPPED
                records.append(record)
                continue
            with trace_span(check.id):
                try:
                    computed = check.compute()
                    record["computed"] = computed
                    ok = check.accept(check.expected, computed)
                    record["status"] = CheckStatus.PASS if ok else CheckStatus.FAIL
                except DiagError as exc:
                    record["status"] = CheckStatus.FAIL
                    record["note"] = f"{exc.code}: {exc.message}"
            records.append(record)

        tally = {s: sum(r["status"] is s for r in records) for s in CheckStatus}
        data = dump_validated(
            VerifyData,
            {
                "suite": suite,
                "checks": records,
                "passed": tally[CheckStatus.PASS],
                "failed": tally[CheckStatus.FAIL],
                "skipped": tally[CheckStatus.SKIPPED],
                "incomplete": tally[CheckStatus.SKIPPED] > 0,
            },
        )
        if data["failed"]:
            error = ServiceError(
                code="VERIFICATION_FAILED",
                message=f"{data['failed']} of {len(records)} checks failed",
                detail={"failed": [r["id"] for r in records if r["status"] is CheckStatus.FAIL]},
            )
            return ServiceResult(ok=False, op=op, data=data, error=error)
        if data["incomplete"]:
            error = ServiceError(
                code="DEADLINE_EXCEEDED",
                message=f"{data['skipped']} checks skipped after --max-seconds",
                detail={"max_seconds": deadline.max_seconds},
            )
            return ServiceResult(ok=False, op=op, data=data, error=error)
        return ServiceResult(ok=True, op=op, data=data)

