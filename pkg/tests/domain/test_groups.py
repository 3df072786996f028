"""Tests for group enumeration, conjugacy classes and Cayley BFS."""

from __future__ import annotations

import numpy as np
import pytest

from diagctl.domain.constructions import Construction
from diagctl.domain.errors import CapExceeded, InvariantViolation, NotAnAutomorphism, NotInGroup
from diagctl.domain.groups import (
    cayley_ball,
    cayley_eccentricity,
    class_eccentricity,
    class_union,
    conjugacy_classes,
    element_order,
    element_set,
    enumerate_group,
    inverse_classes,
    normal_set_classes,
    set_product,
)
from diagctl.domain.permutations import Permutation


class TestEnumeration:
    def test_a5_order(self, a5: Construction) -> None:
        assert a5.group.order == 60
        assert a5.group.identity == 0
        assert a5.group.element(0).is_identity()

    def test_index_of_round_trips(self, a5: Construction) -> None:
        g = a5.group
        for i in (1, 17, 59):
            assert g.index_of(g.element(i)) == i

    def test_non_member(self, a5: Construction) -> None:
        with pytest.raises(NotInGroup):
            a5.group.index_of(Permutation.from_cycles("(0 1)", 5))
        assert not a5.group.contains(Permutation.from_cycles("(0 1)", 5))

    def test_order_cap(self) -> None:
        gens = [Permutation.from_cycles("(0 1)", 6), Permutation.from_cycles("(0 1 2 3 4 5)", 6)]
        with pytest.raises(CapExceeded):
            enumerate_group(gens, order_cap=100)

    def test_enumeration_is_reproducible(self) -> None:
        gens = [Permutation.from_cycles("(0 1 2)", 4), Permutation.from_cycles("(1 2 3)", 4)]
        first = enumerate_group(gens)
        second = enumerate_group(gens)
        assert np.array_equal(first.elements, second.elements)
        assert first.order == 12


class TestArithmetic:
    def test_multiply_matches_permutations(self, a5: Construction) -> None:
        g = a5.group
        a, b = 7, 23
        assert g.element(int(g.multiply(a, b))) == g.element(a) * g.element(b)

    def test_inverse(self, a5: Construction) -> None:
        g = a5.group
        everything = np.arange(g.order)
        assert np.all(g.multiply(everything, g.inverse) == g.identity)

    def test_right_translation(self, a5: Construction) -> None:
        g = a5.group
        shifted = g.right_translation(9)
        assert np.array_equal(shifted, g.multiply(np.arange(g.order), 9))
        assert np.unique(shifted).size == g.order

    def test_conjugate(self, a5: Construction) -> None:
        g = a5.group
        t, x = 5, 11
        expected = g.element(t).conjugate_by(g.element(x))
        assert g.element(int(g.conjugate(t, x))) == expected

    def test_word_spells_element(self, psl27: Construction) -> None:
        g = psl27.group
        for i in (0, 3, 100, 167):
            acc = g.identity
            for j in g.word(i):
                acc = int(g.multiply(acc, g.generator_indices[j]))
            assert acc == i

    def test_identity_extends_to_identity_map(self, a5: Construction) -> None:
        g = a5.group
        phi = g.extend_homomorphism(g.generator_indices)
        assert np.array_equal(phi, np.arange(g.order))

    def test_bad_generator_images(self, a5: Construction) -> None:
        g = a5.group
        with pytest.raises(NotAnAutomorphism):
            g.extend_homomorphism([g.identity] * len(g.generators))


class TestConjugacyClasses:
    def test_a5_classes(self, a5: Construction) -> None:
        classes = conjugacy_classes(a5.group)
        assert [c.size for c in classes] == [1, 12, 12, 15, 20]
        assert [c.order for c in classes] == [1, 5, 5, 2, 3]
        assert classes[0].representative == a5.group.identity

    def test_psl27_classes(self, psl27: Construction) -> None:
        classes = conjugacy_classes(psl27.group)
        assert psl27.group.order == 168
        assert sorted(c.size for c in classes) == [1, 21, 24, 24, 42, 56]

    def test_a5_is_real(self, a5: Construction) -> None:
        inv = inverse_classes(a5.group)
        assert inv.tolist() == list(range(5))

    def test_psl27_swaps_order_seven_classes(self, psl27: Construction) -> None:
        classes = conjugacy_classes(psl27.group)
        inv = inverse_classes(psl27.group)
        sevens = [c.id for c in classes if c.order == 7]
        assert len(sevens) == 2
        assert inv[sevens[0]] == sevens[1]

    def test_element_order(self, a5: Construction) -> None:
        classes = conjugacy_classes(a5.group)
        assert element_order(a5.group, classes[4].representative) == 3


class TestCayleyBfs:
    @pytest.mark.parametrize("class_id", [1, 3, 4])
    def test_class_and_element_bfs_agree(self, a5: Construction, class_id: int) -> None:
        g = a5.group
        connection = class_union(g, [class_id])
        width, class_dist = class_eccentricity(g, connection)
        element_width, dist = cayley_eccentricity(g, connection)
        assert width == element_width
        owner = g.class_data()[1]
        assert np.array_equal(class_dist[owner], dist)

    @pytest.mark.parametrize("class_id", [1, 2, 3, 4, 5])
    def test_distances_match_set_product_powers(
        self, psl27: Construction, class_id: int
    ) -> None:
        g = psl27.group
        connection = class_union(g, [class_id])
        ball = cayley_ball(g, connection)
        width, class_dist = class_eccentricity(g, connection)
        assert width == ball.width
        assert np.array_equal(class_dist[g.class_data()[1]], ball.dist)

        reached = element_set(g, [g.identity])
        power = element_set(g, [g.identity])
        for m in range(1, ball.width + 1):
            power = set_product(g, power, connection)
            layer = power & ~reached
            assert layer.any()
            assert np.array_equal(np.flatnonzero(layer), np.flatnonzero(ball.dist == m))
            reached |= power
        assert reached.all()

    def test_normal_set_required(self, a5: Construction) -> None:
        with pytest.raises(InvariantViolation):
            normal_set_classes(a5.group, element_set(a5.group, [1]))

    def test_set_product_of_involutions(self, a5: Construction) -> None:
        g = a5.group
        involutions = class_union(g, [3])
        square = set_product(g, involutions, involutions)
        # products of two involutions in A5 reach every element
        assert square.all()
