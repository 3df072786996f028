"""Tests for finite fields, polynomials and matrices over F_q."""

from __future__ import annotations

import pytest

from diagctl.domain.errors import InvariantViolation, NotPrimePower
from diagctl.domain.fields import (
    MatrixFq,
    ProjectiveSpace,
    companion,
    elementary,
    field,
    is_irreducible,
    least_irreducible,
    order_of_matrix,
    prime_power,
)


class TestPrimePowers:
    @pytest.mark.parametrize(
        ("q", "expected"), [(2, (2, 1)), (8, (2, 3)), (9, (3, 2)), (13, (13, 1))]
    )
    def test_split(self, q: int, expected: tuple[int, int]) -> None:
        assert prime_power(q) == expected

    @pytest.mark.parametrize("q", [1, 6, 12])
    def test_rejected(self, q: int) -> None:
        with pytest.raises(NotPrimePower):
            prime_power(q)


class TestGaloisField:
    @pytest.mark.parametrize("q", [4, 8, 9, 16, 25])
    def test_multiplicative_group_is_cyclic(self, q: int) -> None:
        fq = field(q)
        assert fq.multiplicative_order(fq.primitive) == q - 1

    @pytest.mark.parametrize("q", [4, 9])
    def test_inverses(self, q: int) -> None:
        fq = field(q)
        for a in fq.nonzero():
            assert fq.mul[a, fq.inv[a]] == 1
            assert fq.add[a, fq.neg[a]] == 0

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
    def test_field_axioms(self, q: int) -> None:
        fq = field(q)
        add, mul = fq.add, fq.mul
        elems = range(q)
        assert (add == add.T).all()
        assert (mul == mul.T).all()
        assert add[0].tolist() == list(elems)
        assert mul[1].tolist() == list(elems)
        for a in elems:
            assert add[a, fq.neg[a]] == 0
            if a:
                assert mul[a, fq.inv[a]] == 1
            for b in elems:
                for c in elems:
                    assert add[add[a, b], c] == add[a, add[b, c]]
                    assert mul[mul[a, b], c] == mul[a, mul[b, c]]
                    assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]

    def test_frobenius_fixes_prime_field(self) -> None:
        fq = field(9)
        assert fq.frobenius[1] == 1
        assert fq.frobenius[2] == 2
        assert sorted(fq.frobenius.tolist()) == list(range(9))

    def test_field_is_cached(self) -> None:
        assert field(7) is field(7)

    def test_zero_has_no_order(self) -> None:
        with pytest.raises(InvariantViolation):
            field(5).multiplicative_order(0)


class TestPolynomials:
    def test_irreducibility_over_f2(self) -> None:
        f2 = field(2)
        assert is_irreducible(f2, [1, 1, 1])  # x^2 + x + 1
        assert not is_irreducible(f2, [1, 0, 1])  # (x + 1)^2

    def test_least_irreducible_cubic_over_f3(self) -> None:
        f3 = field(3)
        poly = least_irreducible(f3, 3)
        assert len(poly) == 4 and poly[-1] == 1
        assert is_irreducible(f3, poly)


class TestMatrices:
    def test_rank_and_det(self) -> None:
        f5 = field(5)
        m = MatrixFq.of(f5, [[1, 2], [2, 4]])
        assert m.rank() == 1
        assert m.det() == 0
        assert MatrixFq.of(f5, [[2, 0], [0, 3]]).det() == 1

    def test_inverse(self) -> None:
        f7 = field(7)
        m = MatrixFq.of(f7, [[1, 2], [3, 4]])
        assert m @ m.inverse() == MatrixFq.identity(f7, 2)

    def test_singular_inverse(self) -> None:
        f3 = field(3)
        with pytest.raises(InvariantViolation):
            MatrixFq.of(f3, [[1, 1], [1, 1]]).inverse()

    def test_transvection_order_is_p(self) -> None:
        assert order_of_matrix(elementary(field(9), 2, 0, 1, 1)) == 3

    def test_singer_order(self) -> None:
        f2 = field(2)
        singer = companion(f2, least_irreducible(f2, 3))
        assert order_of_matrix(singer) == 7


class TestProjectiveSpace:
    @pytest.mark.parametrize(("q", "n", "size"), [(7, 2, 8), (3, 3, 13), (4, 3, 21)])
    def test_point_count(self, q: int, n: int, size: int) -> None:
        assert len(ProjectiveSpace(field(q), n)) == size

    def test_matrix_acts_as_permutation(self) -> None:
        space = ProjectiveSpace(field(5), 2)
        images = space.permutation_of(elementary(field(5), 2, 0, 1, 1))
        assert sorted(images) == list(range(len(space)))
