"""Tests for Dixon character tables and class-product counting."""

from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from diagctl.domain.characters import (
    CharacterTable,
    align_table,
    corollary_membership,
    dixon_prime,
    dixon_table,
    frobenius_count,
    group_exponent,
    structure_constants,
    structure_count_bruteforce,
    structure_counts,
    table_structure_constants,
)
from diagctl.domain.constructions import Construction
from diagctl.domain.errors import CapExceeded, ParseError, TableMismatch

FIVE_A, INVOLUTIONS, THREE_CYCLES = 1, 3, 4


class TestDixonTable:
    def test_a5_degrees(self, a5_table: CharacterTable) -> None:
        assert a5_table.degrees == (1, 3, 3, 4, 5)
        assert a5_table.class_sizes == (1, 12, 12, 15, 20)
        assert a5_table.rep_orders == (1, 5, 5, 2, 3)

    def test_orthogonality(self, a5_table: CharacterTable) -> None:
        assert a5_table.row_residual() < 1e-8
        assert a5_table.column_residual() < 1e-8

    def test_known_values(self, a5_table: CharacterTable) -> None:
        values = a5_table.values
        np.testing.assert_allclose(values[:, INVOLUTIONS].real, [1, -1, -1, 0, 1], atol=1e-9)
        np.testing.assert_allclose(values[:, THREE_CYCLES].real, [1, 0, 0, 1, -1], atol=1e-9)
        golden = (1 + math.sqrt(5)) / 2
        fives = sorted(values[1:3, FIVE_A].real)
        np.testing.assert_allclose(fives, [1 - golden, golden], atol=1e-9)

    def test_psl27_degrees(self, psl27: Construction) -> None:
        table = dixon_table(psl27.group)
        assert table.degrees == (1, 3, 3, 6, 7, 8)
        assert np.max(np.abs(table.values.imag)) > 0.5

    def test_order_cap(self, psl27: Construction) -> None:
        with pytest.raises(CapExceeded):
            dixon_table(psl27.group, order_cap=100)

    def test_prime_choice(self, a5: Construction) -> None:
        exponent = group_exponent(a5.group)
        assert exponent == 30
        p = dixon_prime(a5.group.order, exponent)
        assert p == 31
        assert (p - 1) % exponent == 0
        assert p > 2 * math.sqrt(a5.group.order)


class TestSerialization:
    def test_dict_form(self, a5_table: CharacterTable) -> None:
        data = a5_table.to_dict()
        assert data["degrees"] == [1, 3, 3, 4, 5]
        assert data["classes"]["sizes"] == [1, 12, 12, 15, 20]
        restored = CharacterTable.from_dict(data)
        np.testing.assert_allclose(restored.values, a5_table.values, atol=1e-11)

    def test_order_defaults_to_class_sizes(self, a5_table: CharacterTable) -> None:
        data = a5_table.to_dict()
        del data["order"]
        assert CharacterTable.from_dict(data).order == 60

    @pytest.mark.parametrize(
        "data",
        [
            {},
            {"classes": {"sizes": [1], "rep_orders": [1]}, "degrees": [1], "values": "x"},
            {
                "classes": {"sizes": [1, 1], "rep_orders": [1, 2]},
                "degrees": [1],
                "values": [[[1, 0]]],
            },
        ],
    )
    def test_malformed(self, data: dict) -> None:
        with pytest.raises(ParseError):
            CharacterTable.from_dict(data)


class TestCounting:
    def test_involution_pairs_with_trivial_product(
        self, a5: Construction, a5_table: CharacterTable
    ) -> None:
        pair = [INVOLUTIONS, INVOLUTIONS]
        assert frobenius_count(a5_table, pair, 0).rounded == 15
        assert structure_count_bruteforce(a5.group, pair, a5.group.identity) == 15

    def test_character_formula_matches_convolution(
        self, a5: Construction, a5_table: CharacterTable
    ) -> None:
        group = a5.group
        classes, _ = group.class_data()
        for i in range(1, 5):
            for j in range(1, 5):
                counts = structure_counts(group, [i, j])
                for z, cls in enumerate(classes):
                    result = frobenius_count(a5_table, [i, j], z)
                    assert result.rounded == counts[cls.representative]
                    assert result.residual < 1e-6

    @pytest.mark.slow
    @pytest.mark.parametrize("d", [2, 3])
    def test_psl27_formula_matches_convolution_exhaustively(
        self, psl27: Construction, d: int
    ) -> None:
        group = psl27.group
        table = dixon_table(group)
        classes, _ = group.class_data()
        for ids in itertools.product(range(1, len(classes)), repeat=d):
            counts = structure_counts(group, list(ids))
            assert counts.sum() == math.prod(classes[c].size for c in ids)
            for z, cls in enumerate(classes):
                result = frobenius_count(table, list(ids), z)
                assert result.rounded == counts[cls.representative], (ids, z)
                assert result.residual < 1e-6

    def test_three_factors(self, a5: Construction, a5_table: CharacterTable) -> None:
        ids = [FIVE_A, FIVE_A, FIVE_A]
        counts = structure_counts(a5.group, ids)
        assert counts.sum() == 12**3
        rep = a5.group.class_data()[0][INVOLUTIONS].representative
        assert frobenius_count(a5_table, ids, INVOLUTIONS).rounded == counts[rep]

    def test_structure_constants_agree_with_table(
        self, a5: Construction, a5_table: CharacterTable
    ) -> None:
        expected = structure_constants(a5.group)
        np.testing.assert_allclose(table_structure_constants(a5_table), expected, atol=1e-6)

    def test_bruteforce_cap(self, a5: Construction) -> None:
        with pytest.raises(CapExceeded):
            structure_counts(a5.group, [FIVE_A, FIVE_A, FIVE_A], cap=10)

    def test_no_classes(self, a5: Construction) -> None:
        with pytest.raises(ParseError):
            structure_counts(a5.group, [])


class TestCorollary:
    def test_squares_of_five_cycles_miss_involutions(self, a5_table: CharacterTable) -> None:
        magnitude, implied = corollary_membership(a5_table, FIVE_A, INVOLUTIONS, 2)
        assert magnitude == pytest.approx(1.0)
        assert implied is False

    def test_cubes_reach_involutions(self, a5: Construction, a5_table: CharacterTable) -> None:
        magnitude, implied = corollary_membership(
            a5_table, FIVE_A, INVOLUTIONS, 3, group=a5.group
        )
        assert magnitude == pytest.approx(4 / 9)
        assert implied is True


class TestAlignment:
    def test_restores_class_order(self, a5: Construction, a5_table: CharacterTable) -> None:
        shuffled = a5_table.reordered([0, 1, 2, 4, 3])
        aligned = align_table(shuffled, a5.group)
        assert aligned.class_sizes == a5_table.class_sizes
        np.testing.assert_allclose(
            aligned.values[:, INVOLUTIONS], a5_table.values[:, INVOLUTIONS], atol=1e-9
        )

    def test_wrong_group(self, psl27: Construction, a5_table: CharacterTable) -> None:
        with pytest.raises(TableMismatch):
            align_table(a5_table, psl27.group)
