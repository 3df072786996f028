"""Finite fields F_q as numpy operation tables, and small matrices over them.

An element of F_{p^e} is encoded as the integer ``c_0 + c_1 p + ... + c_{e-1} p^{e-1}``
where ``c_0 + c_1 x + ...`` is its residue modulo the field's defining
polynomial.  The defining polynomial is the least monic irreducible of degree
``e`` in lexicographic order of its lower coefficients, so encodings are
reproducible.  For prime ``q`` the encoding is the residue itself.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from sympy import factorint

from diagctl.domain.errors import InvariantViolation, NotPrimePower

type IntMatrix = npt.NDArray[np.int64]


def prime_power(q: int) -> tuple[int, int]:
    """Split *q* as ``(p, e)`` with ``q = p^e``; raise :class:`NotPrimePower`."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power", q=q)
    factors = factorint(q)
    if len(factors) != 1:
        raise NotPrimePower(f"{q} is not a prime power", q=q)
    ((p, e),) = factors.items()
    return int(p), int(e)


def _digits(value: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        value, r = divmod(value, p)
        out.append(r)
    return out


def _residue_product(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    """Product of two residues modulo a monic *modulus* (coefficients low first)."""
    e = len(modulus) - 1
    prod = [0] * (2 * e - 1) if e else [0]
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, e - 1, -1):
        lead = prod[deg]
        if lead:
            for j in range(e + 1):
                prod[deg - e + j] = (prod[deg - e + j] - lead * modulus[j]) % p
    return prod[:e]


def _tables_for(p: int, e: int, modulus: list[int]) -> tuple[IntMatrix, IntMatrix]:
    q = p**e
    digits = np.array([_digits(v, p, e) for v in range(q)], dtype=np.int64)
    weights = p ** np.arange(e, dtype=np.int64)
    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
    mul = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        da = digits[a].tolist()
        for b in range(a, q):
            value = _residue_product(da, digits[b].tolist(), modulus, p)
            code = sum(c * int(w) for c, w in zip(value, weights, strict=True))
            mul[a, b] = mul[b, a] = code
    return add, mul


def _is_field(mul: IntMatrix) -> bool:
    # No zero divisors: every nonzero row hits zero only at column 0.
    return bool(np.all(mul[1:, 1:] != 0))


@functools.cache
def _defining_polynomial(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    for code in range(p**e):
        modulus = [*_digits(code, p, e), 1]
        if modulus[0] == 0:
            continue
        _, mul = _tables_for(p, e, modulus)
        if _is_field(mul):
            return tuple(modulus)
    raise InvariantViolation(f"no irreducible polynomial of degree {e} over F_{p}")


class GaloisField:
    """The field F_q with add/mul/neg/inv tables over integer encodings."""

    def __init__(self, q: int) -> None:
        self.p, self.e = prime_power(q)
        self.q = q
        self.modulus: tuple[int, ...] = _defining_polynomial(self.p, self.e)
        self.add, self.mul = _tables_for(self.p, self.e, list(self.modulus))
        self.neg = np.argmin(self.add, axis=1).astype(np.int64)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = np.argmax(self.mul[1:] == 1, axis=1)
        self.inv = inv
        self.primitive = self._find_primitive()
        self.frobenius = np.array([self.power(x, self.p) for x in range(q)], dtype=np.int64)

    def __repr__(self) -> str:
        return f"GaloisField({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GaloisField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    # --- scalar arithmetic ---

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def power(self, a: int, n: int) -> int:
        if n < 0:
            a, n = int(self.inv[a]), -n
        result = 1
        while n:
            if n & 1:
                result = int(self.mul[result, a])
            a = int(self.mul[a, a])
            n >>= 1
        return result

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise InvariantViolation("zero has no multiplicative order")
        n = self.q - 1
        order = n
        for prime in factorint(n):
            while order % prime == 0 and self.power(a, order // prime) == 1:
                order //= prime
        return order

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        for a in range(1, self.q):
            if self.multiplicative_order(a) == self.q - 1:
                return a
        raise InvariantViolation(f"F_{self.q} has no primitive element")

    def nonzero(self) -> range:
        return range(1, self.q)

    def basis(self) -> list[int]:
        """An F_p-basis ``1, x, ..., x^{e-1}`` as encodings."""
        return [self.p**i for i in range(self.e)]

    # --- vector helpers ---

    def dot(self, a: Sequence[int], b: Sequence[int]) -> int:
        acc = 0
        for x, y in zip(a, b, strict=True):
            acc = int(self.add[acc, self.mul[x, y]])
        return acc

    def scale(self, c: int, v: npt.ArrayLike) -> IntMatrix:
        return self.mul[c, np.asarray(v, dtype=np.int64)]


@functools.cache
def field(q: int) -> GaloisField:
    """Shared :class:`GaloisField` instance for *q*."""
    return GaloisField(q)


# ---------------------------------------------------------------------------
# Polynomials over F_q (coefficient lists, low degree first)
# ---------------------------------------------------------------------------


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def poly_mod(fq: GaloisField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    rem = _trim(list(a))
    div = _trim(list(b))
    if not div:
        raise InvariantViolation("polynomial division by zero")
    lead_inv = int(fq.inv[div[-1]])
    while len(rem) >= len(div):
        coef = int(fq.mul[rem[-1], lead_inv])
        shift = len(rem) - len(div)
        for i, d in enumerate(div):
            rem[shift + i] = fq.sub(rem[shift + i], int(fq.mul[coef, d]))
        _trim(rem)
    return rem


def monic_polynomials(fq: GaloisField, degree: int) -> Iterator[list[int]]:
    """Monic polynomials of *degree* in lexicographic order of lower coefficients."""
    for lower in itertools.product(range(fq.q), repeat=degree):
        yield [*reversed(lower), 1]


def is_irreducible(fq: GaloisField, poly: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree ≤ deg/2."""
    f = _trim(list(poly))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if f[0] == 0:
        return False
    for d in range(1, n // 2 + 1):
        for g in monic_polynomials(fq, d):
            if not poly_mod(fq, f, g):
                return False
    return True


def least_irreducible(fq: GaloisField, degree: int) -> list[int]:
    for poly in monic_polynomials(fq, degree):
        if is_irreducible(fq, poly):
            return poly
    raise InvariantViolation(f"no irreducible polynomial of degree {degree} over F_{fq.q}")


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class MatrixFq:
    """Square matrix over F_q with entries as field encodings."""

    fq: GaloisField
    entries: IntMatrix

    def __post_init__(self) -> None:
        arr = np.asarray(self.entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InvariantViolation("matrix must be square", shape=list(arr.shape))
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def of(cls, fq: GaloisField, rows: Iterable[Iterable[int]]) -> MatrixFq:
        return cls(fq, np.array([list(r) for r in rows], dtype=np.int64))

    @classmethod
    def identity(cls, fq: GaloisField, n: int) -> MatrixFq:
        return cls(fq, np.eye(n, dtype=np.int64))

    @classmethod
    def scalar(cls, fq: GaloisField, n: int, value: int) -> MatrixFq:
        return cls(fq, np.eye(n, dtype=np.int64) * value)

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatrixFq)
            and other.fq == self.fq
            and np.array_equal(other.entries, self.entries)
        )

    def __hash__(self) -> int:
        return hash((self.fq.q, self.entries.tobytes()))

    def __matmul__(self, other: MatrixFq) -> MatrixFq:
        prods = self.fq.mul[self.entries[:, :, None], other.entries[None, :, :]]
        acc = prods[:, 0, :]
        for k in range(1, self.n):
            acc = self.fq.add[acc, prods[:, k, :]]
        return MatrixFq(self.fq, acc)

    def transpose(self) -> MatrixFq:
        return MatrixFq(self.fq, self.entries.T.copy())

    def scaled(self, c: int) -> MatrixFq:
        return MatrixFq(self.fq, self.fq.mul[c, self.entries])

    def minus_identity_times(self, lam: int) -> MatrixFq:
        """``λ·x − I``."""
        scaled = self.fq.mul[lam, self.entries].copy()
        for i in range(self.n):
            scaled[i, i] = self.fq.sub(int(scaled[i, i]), 1)
        return MatrixFq(self.fq, scaled)

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Column action ``x·v``."""
        return tuple(self.fq.dot(row, vector) for row in self.entries.tolist())

    # --- elimination ---

    def rank(self) -> int:
        return row_reduce(self.fq, self.entries)[1]

    def det(self) -> int:
        return row_reduce(self.fq, self.entries)[2]

    def kernel_dimension(self) -> int:
        return self.n - self.rank()

    def inverse(self) -> MatrixFq:
        n = self.n
        work = np.concatenate([self.entries, np.eye(n, dtype=np.int64)], axis=1)
        reduced, _, _ = row_reduce(self.fq, work, pivot_columns=n)
        if not np.array_equal(reduced[:, :n], np.eye(n, dtype=np.int64)):
            raise InvariantViolation("matrix is singular")
        return MatrixFq(self.fq, reduced[:, n:])

    def inverse_transpose(self) -> MatrixFq:
        return self.inverse().transpose()

    def __repr__(self) -> str:
        return f"MatrixFq(q={self.fq.q}, {self.entries.tolist()})"


def row_reduce(
    fq: GaloisField, matrix: IntMatrix, *, pivot_columns: int | None = None
) -> tuple[IntMatrix, int, int]:
    """Reduced row echelon form, rank and determinant (0 unless square and full rank).

    Pivots are searched in the first *pivot_columns* columns only.
    """
    work = np.array(matrix, dtype=np.int64)
    rows, cols = work.shape
    det = 1
    rank = 0
    for col in range(cols if pivot_columns is None else pivot_columns):
        pivot = next((r for r in range(rank, rows) if work[r, col]), None)
        if pivot is None:
            continue
        if pivot != rank:
            work[[rank, pivot]] = work[[pivot, rank]]
            det = int(fq.neg[det])
        lead = int(work[rank, col])
        det = int(fq.mul[det, lead])
        work[rank] = fq.mul[int(fq.inv[lead]), work[rank]]
        for r in range(rows):
            if r != rank and work[r, col]:
                factor = int(fq.neg[work[r, col]])
                work[r] = fq.add[work[r], fq.mul[factor, work[rank]]]
        rank += 1
        if rank == rows:
            break
    return work, rank, det if rank == rows == cols else 0


def elementary(fq: GaloisField, n: int, i: int, j: int, value: int) -> MatrixFq:
    """``I + value·E_ij``."""
    entries = np.eye(n, dtype=np.int64)
    entries[i, j] = value
    return MatrixFq(fq, entries)


def diagonal(fq: GaloisField, values: Sequence[int]) -> MatrixFq:
    return MatrixFq(fq, np.diag(np.asarray(values, dtype=np.int64)))


def companion(fq: GaloisField, poly: Sequence[int]) -> MatrixFq:
    """Companion matrix of a monic polynomial (coefficients low first)."""
    n = len(poly) - 1
    entries = np.zeros((n, n), dtype=np.int64)
    for i in range(1, n):
        entries[i, i - 1] = 1
    for i in range(n):
        entries[i, n - 1] = fq.neg[poly[i]]
    return MatrixFq(fq, entries)


# ---------------------------------------------------------------------------
# Projective space
# ---------------------------------------------------------------------------


class ProjectiveSpace:
    """Points of PG(n-1, q) with the last nonzero coordinate scaled to 1."""

    def __init__(self, fq: GaloisField, n: int) -> None:
        self.fq = fq
        self.n = n
        points: list[tuple[int, ...]] = []
        for vec in itertools.product(range(fq.q), repeat=n):
            nz = [c for c in vec if c]
            if nz and nz[-1] == 1:
                points.append(vec)
        points.sort(key=lambda v: tuple(reversed(v)))
        self.points = points
        self.index = {p: i for i, p in enumerate(points)}

    def __len__(self) -> int:
        return len(self.points)

    def normalize(self, vector: Sequence[int]) -> tuple[int, ...]:
        last = next((c for c in reversed(vector) if c), 0)
        if not last:
            raise InvariantViolation("zero vector has no projective point")
        scale = int(self.fq.inv[last])
        return tuple(int(self.fq.mul[scale, c]) for c in vector)

    def permutation_of(self, matrix: MatrixFq) -> list[int]:
        """Point images under the column action of *matrix*."""
        return [self.index[self.normalize(matrix.apply(p))] for p in self.points]

    def field_permutation(self, table: npt.NDArray[np.int64]) -> list[int]:
        """Point images under a coordinatewise field automorphism."""
        return [self.index[tuple(int(table[c]) for c in p)] for p in self.points]


def order_of_matrix(matrix: MatrixFq, limit: int = 10**6) -> int:
    current = matrix
    ident = MatrixFq.identity(matrix.fq, matrix.n)
    for m in range(1, limit + 1):
        if current == ident:
            return m
        current = current @ matrix
    raise InvariantViolation("matrix order exceeds search limit", limit=limit)


def random_matrices(
    fq: GaloisField, n: int, count: int, seed: int = 0, *, special: bool = True
) -> list[MatrixFq]:
    """Deterministic sample of invertible matrices, rescaled into SL when possible."""
    rng = np.random.default_rng(seed)
    out: list[MatrixFq] = []
    while len(out) < count:
        m = MatrixFq(fq, rng.integers(0, fq.q, size=(n, n), dtype=np.int64))
        d = m.det()
        if d == 0:
            continue
        if special and d != 1:
            m = diagonal(fq, [int(fq.inv[d])] + [1] * (n - 1)) @ m
        out.append(m)
    return out
