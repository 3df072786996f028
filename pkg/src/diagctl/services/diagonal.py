"""DiagonalService: orbital diameters, single orbital graphs and explicit paths."""

from __future__ import annotations

from pathlib import Path
from typing import Any

from diagctl.domain.constructions import (
    AutSelector,
    Construction,
    parse_aut_selector,
    resolve_automorphisms,
)
from diagctl.domain.diagonal import (
    DiagonalGeometry,
    bound_certificate,
    construct_path,
    make_geometry,
    orbdiam,
    orbital_graph,
    strict_lower_bound_holds,
    to_dot,
)
from diagctl.domain.errors import DiagError, ParseError
from diagctl.domain.groups import EnumeratedGroup
from diagctl.domain.permutations import Permutation, load_generator_file
from diagctl.domain.types import Variant
from diagctl.services._helpers import log_work_estimate, tuple_cycles
from diagctl.services.base import BaseService
from diagctl.services.contracts import Gamma0Data, OrbdiamData, PathData, dump_validated
from diagctl.services.result import ServiceResult
from diagctl.services.telemetry import trace_span, traced


def parse_element(group: EnumeratedGroup, text: str) -> int:
    """Element index of a cycle-notation string."""
    return group.index_of(Permutation.from_cycles(text, group.degree))


def parse_variant(text: str | Variant) -> Variant:
    try:
        return Variant(text)
    except ValueError as exc:
        choices = ", ".join(v.value for v in Variant)
        raise ParseError(f"unknown variant {text!r}; expected one of {choices}") from exc


class DiagonalService(BaseService):
    """Simple diagonal actions ``T^k.X`` and their orbital graphs."""

    def _geometry(
        self,
        spec: str | None,
        k: int | None,
        variant: str | Variant | None,
        *,
        aut: str | None = None,
        coords: Path | None = None,
        imprimitive: bool = False,
    ) -> tuple[Construction, Construction, DiagonalGeometry]:
        """``(construction, model, geometry)``.

        ``DkT`` always uses the full automorphism realizations (so ``A_6``
        switches to its ``PSL_2(9)`` model); ``custom`` takes the automorphism
        selector and a generator file of coordinate permutations.
        """
        run = self._ws.settings.run
        construction = self._construction(spec)
        kind = parse_variant(variant or run.variant)
        k = k or run.k
        model, auts = construction, ()
        coordinate_group = None
        if kind is Variant.DKT:
            model, auts = resolve_automorphisms(construction, AutSelector("aut"))
        elif kind is Variant.CUSTOM:
            model, auts = resolve_automorphisms(
                construction, parse_aut_selector(aut or run.aut)
            )
            if coords is not None:
                degree, coordinate_group = load_generator_file(coords)
                if degree != k:
                    raise ParseError(f"coordinate file has degree {degree}, k = {k}")
        geometry = make_geometry(
            model.group,
            k,
            kind,
            automorphisms=auts,
            coordinate_group=coordinate_group,
            point_cap=self._ws.caps.point_cap,
            imprimitive=imprimitive,
            label=construction.label,
        )
        return construction, model, geometry

    def _digits(self, geometry: DiagonalGeometry, point: int) -> list[str]:
        return tuple_cycles(geometry.group, geometry.full_tuple(point))

    @traced
    def orbdiam(
        self,
        spec: str | None,
        *,
        k: int | None = None,
        variant: str | None = None,
        aut: str | None = None,
        coords: Path | None = None,
        imprimitive: bool = False,
    ) -> ServiceResult:
        """Diameter of every orbital graph; ``orbdiam`` is their maximum."""
        op = "orbdiam"
        try:
            construction, model, geometry = self._geometry(
                spec, k, variant, aut=aut, coords=coords, imprimitive=imprimitive
            )
            log_work_estimate(
                op,
                geometry.size * geometry.size,
                points=geometry.size,
                group=construction.label,
            )
            self._deadline().check(op)
            with trace_span("orbital_diameters") as span:
                report = orbdiam(geometry, mapper=self._mapper)
                if span is not None:
                    span.annotate("rank", report.rank)
        except DiagError as exc:
            return self._failure(op, exc)
        data: dict[str, Any] = {
            "group": construction.label,
            "model": model.label,
            "k": geometry.k,
            "variant": geometry.variant.value,
            "omega_size": report.omega_size,
            "rank": report.rank,
            "orbitals": [
                {
                    "suborbit_ids": list(r.suborbit_ids),
                    "representative": self._digits(geometry, r.representative),
                    "suborbit_size": r.suborbit_size,
                    "valency": r.valency,
                    "diameter": r.diameter,
                    "paired": r.paired,
                }
                for r in report.orbitals
            ],
            "orbdiam": report.orbdiam,
            "strict_lower_bound": strict_lower_bound_holds(geometry, report.orbdiam)
            if geometry.k >= 3
            else None,
        }
        return ServiceResult(ok=True, op=op, data=dump_validated(OrbdiamData, data))

    @traced
    def gamma0(
        self,
        spec: str | None,
        t: str,
        *,
        k: int | None = None,
        variant: str | None = None,
        aut: str | None = None,
        coords: Path | None = None,
        dot_path: Path | None = None,
    ) -> ServiceResult:
        """Diameter of ``Γ_0^t`` with its lower/upper bound certificate.

        A failing bound is reported as ``BOUND_VIOLATION``.
        """
        op = "gamma0"
        try:
            construction, model, geometry = self._geometry(
                spec, k, variant, aut=aut, coords=coords
            )
            element = parse_element(geometry.group, t)
            self._deadline().check(op)
            with trace_span("bound_certificate"):
                cert = bound_certificate(geometry, element, mapper=self._mapper)
            graph = orbital_graph(geometry, geometry.defining_point(element))
            if dot_path is not None:
                dot_path.write_text(to_dot(graph, self._ws.caps.dot_cap), encoding="utf-8")
        except DiagError as exc:
            return self._failure(op, exc)
        data = {
            "group": construction.label,
            "model": model.label,
            "k": geometry.k,
            "variant": geometry.variant.value,
            "t": cert.t_cycles,
            "omega_size": geometry.size,
            "valency": graph.valency,
            "diameter": cert.measured,
            "certificate": {
                "lower": str(cert.lower),
                "upper": cert.upper,
                "upper_quadratic": cert.upper_quadratic,
                "c_x_t": cert.c_x_t,
                "c_i": cert.c_i,
                "holds": cert.holds(),
            },
            "dot": str(dot_path) if dot_path is not None else None,
        }
        return ServiceResult(ok=True, op=op, data=dump_validated(Gamma0Data, data))

    @traced
    def path(
        self,
        spec: str | None,
        t: str,
        target: str,
        *,
        k: int | None = None,
        variant: str | None = None,
    ) -> ServiceResult:
        """Explicit walk ``ω₀ → target`` in ``Γ_0^t``.

        *target* lists ``k`` (or ``k − 1``, first coordinate omitted) cycle
        strings separated by ``;``.
        """
        op = "path"
        try:
            construction, _, geometry = self._geometry(spec, k, variant)
            group = geometry.group
            element = parse_element(group, t)
            parts = [p for p in target.split(";") if p.strip()]
            coords = [parse_element(group, p) for p in parts]
            if len(coords) == geometry.arity:
                coords = [group.identity, *coords]
            if len(coords) != geometry.k:
                raise ParseError(
                    f"target needs {geometry.k} or {geometry.arity} coordinates",
                    got=len(coords),
                )
            point = geometry.point(coords)
            steps = construct_path(geometry, element, point, mapper=self._mapper)
        except DiagError as exc:
            return self._failure(op, exc)
        data = {
            "group": construction.label,
            "k": geometry.k,
            "variant": geometry.variant.value,
            "t": group.element(element).to_cycles(),
            "target": self._digits(geometry, point),
            "length": len(steps),
            "steps": [self._digits(geometry, s) for s in steps],
        }
        return ServiceResult(ok=True, op=op, data=dump_validated(PathData, data))
