"""Tests for simple diagonal geometries and their orbital graphs."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from diagctl.domain.constructions import AutSelector, Construction, resolve_automorphisms
from diagctl.domain.diagonal import (
    DiagonalGeometry,
    act_tk,
    bound_certificate,
    construct_path,
    graph_diameter,
    lower_bound,
    make_geometry,
    orbdiam,
    orbital_graph,
    sample_eccentricities,
    strict_lower_bound_holds,
    suborbits,
    to_dot,
)
from diagctl.domain.errors import (
    CapExceeded,
    DiagonalPair,
    Disconnected,
    InvariantViolation,
    NonTransitiveCoordinates,
)
from diagctl.domain.groups import conjugacy_classes
from diagctl.domain.types import Variant

FIVE_A, INVOLUTIONS = 1, 3


def _rep(construction: Construction, class_id: int) -> int:
    return conjugacy_classes(construction.group)[class_id].representative


@pytest.fixture
def tk2(a5: Construction) -> DiagonalGeometry:
    return make_geometry(a5.group, 2, Variant.TK, label="A5")


@pytest.fixture
def dkt2(a5: Construction) -> DiagonalGeometry:
    _, auts = resolve_automorphisms(a5, AutSelector("aut"))
    return make_geometry(a5.group, 2, Variant.DKT, automorphisms=auts, label="A5")


class TestGeometry:
    def test_size(self, tk2: DiagonalGeometry) -> None:
        assert tk2.size == 60
        assert tk2.arity == 1

    def test_point_canonicalizes_first_coordinate(self, tk2: DiagonalGeometry) -> None:
        g = tk2.group
        h, x = 7, 11
        assert tk2.point([g.identity, h]) == h
        assert tk2.point([x, int(g.multiply(x, h))]) == h
        assert tk2.full_tuple(h) == [g.identity, h]

    def test_wrong_arity(self, tk2: DiagonalGeometry) -> None:
        with pytest.raises(InvariantViolation):
            tk2.point([0, 0, 0])

    def test_needs_two_coordinates(self, a5: Construction) -> None:
        with pytest.raises(InvariantViolation):
            make_geometry(a5.group, 1, Variant.TK)

    def test_intransitive_coordinates(self, a5: Construction) -> None:
        with pytest.raises(NonTransitiveCoordinates):
            make_geometry(a5.group, 3, Variant.TK)
        geo = make_geometry(a5.group, 3, Variant.TK, imprimitive=True)
        assert geo.size == 3600

    def test_act_tk_multiplies_each_coordinate(self, tk2: DiagonalGeometry) -> None:
        g = tk2.group
        h, t1, t2 = 7, 11, 23
        moved = act_tk(tk2, [tk2.point([g.identity, h])], [t1, t2])
        assert int(moved[0]) == tk2.point([t1, int(g.multiply(h, t2))])

    def test_act_tk_diagonal_fixes_base_point(self, tk2: DiagonalGeometry) -> None:
        base = tk2.point([tk2.group.identity] * 2)
        assert int(act_tk(tk2, [base], [5, 5])[0]) == base

    def test_act_tk_arity(self, tk2: DiagonalGeometry) -> None:
        with pytest.raises(InvariantViolation):
            act_tk(tk2, [0], [1, 2, 3])

    def test_point_cap(self, a5: Construction) -> None:
        with pytest.raises(CapExceeded):
            make_geometry(a5.group, 3, Variant.TKSK, point_cap=1000)


class TestSuborbits:
    def test_inner_suborbits_are_conjugacy_classes(self, tk2: DiagonalGeometry) -> None:
        orbits = suborbits(tk2)
        assert orbits.rank == 5
        assert sorted(orbits.sizes.tolist()) == [1, 12, 12, 15, 20]
        assert orbits.labels[0] == 0

    def test_automorphisms_fuse_suborbits(self, dkt2: DiagonalGeometry) -> None:
        orbits = suborbits(dkt2)
        assert orbits.rank == 4
        assert sorted(orbits.sizes.tolist()) == [1, 15, 20, 24]

    def test_diagonal_orbital_rejected(self, tk2: DiagonalGeometry) -> None:
        with pytest.raises(DiagonalPair):
            orbital_graph(tk2, 0)


class TestOrbitalGraphs:
    def test_orbdiam_inner(self, tk2: DiagonalGeometry) -> None:
        report = orbdiam(tk2)
        assert report.omega_size == 60
        assert report.rank == 5
        assert report.orbdiam == 3
        assert sorted(r.diameter for r in report.orbitals) == [2, 2, 3, 3]

    def test_orbdiam_with_automorphisms(self, dkt2: DiagonalGeometry) -> None:
        assert orbdiam(dkt2).orbdiam == 2

    def test_edges_are_symmetric(self, tk2: DiagonalGeometry, a5: Construction) -> None:
        graph = orbital_graph(tk2, _rep(a5, FIVE_A))
        assert graph.valency == 12
        for a in range(0, 60, 7):
            for b in graph.neighbors_of(a).tolist():
                assert graph.is_edge(a, b)
                assert graph.is_edge(b, a)

    def test_vertex_transitive(self, tk2: DiagonalGeometry, a5: Construction) -> None:
        graph = orbital_graph(tk2, _rep(a5, FIVE_A))
        diameter = graph_diameter(graph)
        assert all(ecc == diameter for _, ecc in sample_eccentricities(graph, count=10))

    def test_dot_export(self, tk2: DiagonalGeometry, a5: Construction) -> None:
        text = to_dot(orbital_graph(tk2, _rep(a5, INVOLUTIONS)))
        lines = text.splitlines()
        assert lines[:2] == ["graph orbital {", "  node [shape=point];"]
        assert lines[-1] == "}"
        assert sum(" -- " in line for line in lines) == 60 * 15 // 2

    def test_dot_cap(self, tk2: DiagonalGeometry, a5: Construction) -> None:
        with pytest.raises(CapExceeded):
            to_dot(orbital_graph(tk2, _rep(a5, INVOLUTIONS)), dot_cap=10)


class TestBounds:
    @pytest.mark.parametrize(
        ("k", "c", "expected"),
        [(2, 3, Fraction(3)), (3, 2, Fraction(3)), (4, 3, Fraction(6)), (5, 3, Fraction(7))],
    )
    def test_lower_bound(self, k: int, c: int, expected: Fraction) -> None:
        assert lower_bound(k, c) == expected

    def test_certificate(self, tk2: DiagonalGeometry, a5: Construction) -> None:
        cert = bound_certificate(tk2, _rep(a5, FIVE_A))
        assert (cert.measured, cert.c_x_t, cert.c_i) == (3, 3, 3)
        assert cert.lower == 3
        assert cert.upper == 3
        assert cert.upper_quadratic is None
        assert cert.holds()

    def test_certificate_involution(self, tk2: DiagonalGeometry, a5: Construction) -> None:
        cert = bound_certificate(tk2, _rep(a5, INVOLUTIONS), c_i=3)
        assert cert.measured == 2
        assert cert.lower == 2

    def test_strict_bound(self, tk2: DiagonalGeometry) -> None:
        assert strict_lower_bound_holds(tk2, 3)
        assert not strict_lower_bound_holds(tk2, 2)


class TestPaths:
    def test_path_reaches_target(self, tk2: DiagonalGeometry, a5: Construction) -> None:
        t = _rep(a5, FIVE_A)
        graph = orbital_graph(tk2, tk2.defining_point(t))
        target = _rep(a5, INVOLUTIONS)
        path = construct_path(tk2, t, target, graph=graph)
        assert path[-1] == target
        assert len(path) == 3
        points = [0, *path]
        for a, b in zip(points, points[1:], strict=False):
            assert graph.is_edge(a, b)

    def test_path_to_origin_is_empty(self, tk2: DiagonalGeometry, a5: Construction) -> None:
        assert construct_path(tk2, _rep(a5, FIVE_A), 0) == []


@pytest.mark.slow
class TestThreeCoordinates:
    def test_dkt_on_a5(self, a5: Construction) -> None:
        _, auts = resolve_automorphisms(a5, AutSelector("aut"))
        geo = make_geometry(a5.group, 3, Variant.DKT, automorphisms=auts)
        report = orbdiam(geo)
        assert report.omega_size == 3600
        assert report.rank == 17
        assert report.orbdiam == 4
        assert strict_lower_bound_holds(geo, report.orbdiam)
        # every suborbit is self-paired, so one graph per suborbit
        assert len(report.orbitals) == 16
        assert not any(r.paired for r in report.orbitals)
        assert sorted(r.diameter for r in report.orbitals) == [2] * 7 + [3] * 4 + [4] * 5
        sizes = sorted(r.suborbit_size for r in report.orbitals)
        assert sizes == [20, 30, 45, 60, 72, 72, 120, 120, 180] + [360] * 6 + [720]

    def test_tk_without_symmetric_coordinates_is_disconnected(self, a5: Construction) -> None:
        geo = make_geometry(a5.group, 3, Variant.TK, imprimitive=True)
        with pytest.raises(Disconnected) as info:
            orbdiam(geo)
        assert info.value.detail["points"] == 3600
        assert info.value.detail["reached"] < 3600

    def test_path_in_three_coordinates(self, a5: Construction) -> None:
        geo = make_geometry(a5.group, 3, Variant.TKSK)
        t = _rep(a5, FIVE_A)
        target = geo.point([a5.group.identity, 5, 17])
        path = construct_path(geo, t, target)
        assert path[-1] == target
        assert len(path) <= 6
        assert np.unique(path).size == len(path)
