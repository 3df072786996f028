"""Character tables and class-product counting.

Tables come from the Burnside–Dixon method: the class-sum matrices of the
group algebra are diagonalized simultaneously over GF(p) for a prime
``p ≡ 1 (mod exponent)`` above ``2√|G|``, and each modular character is
lifted to complex values through its eigenvalue multiplicities on cyclic
subgroups.  Counts of solutions to ``x_1⋯x_d = z`` with ``x_i ∈ C_i`` are
evaluated both by the character formula and by direct convolution.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
from sympy import isprime, primitive_root

from diagctl.domain.errors import (
    CapExceeded,
    LiftFailure,
    ParseError,
    ResidualTooLarge,
    SoundnessViolation,
    TableMismatch,
)
from diagctl.domain.groups import EnumeratedGroup, IndexArray, class_products, inverse_classes

logger = logging.getLogger(__name__)

DEFAULT_TABLE_ORDER_CAP = 25_000
DEFAULT_BRUTEFORCE_CAP = 10**8
TOLERANCE = 1e-8
COROLLARY_EPSILON = 1e-6
_MAX_ALIGNMENTS = 40_320


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Irreducible characters as rows, classes as columns."""

    order: int
    class_sizes: tuple[int, ...]
    rep_orders: tuple[int, ...]
    degrees: tuple[int, ...]
    values: npt.NDArray[np.complex128]
    tolerance: float = TOLERANCE

    @property
    def class_count(self) -> int:
        return len(self.class_sizes)

    def row_residual(self) -> float:
        """``max |⟨χ_i, χ_j⟩ − δ_ij|``."""
        sizes = np.asarray(self.class_sizes, dtype=np.float64)
        gram = (self.values * sizes) @ self.values.conj().T / self.order
        return float(np.max(np.abs(gram - np.eye(len(self.degrees)))))

    def column_residual(self) -> float:
        """``max |Σ_χ χ(c_i) conj χ(c_j) · |C_i|/|G| − δ_ij|``."""
        sizes = np.asarray(self.class_sizes, dtype=np.float64)
        gram = self.values.conj().T @ self.values * sizes[:, None] / self.order
        return float(np.max(np.abs(gram - np.eye(self.class_count))))

    def validate(self) -> None:
        """Raise :class:`LiftFailure` unless both orthogonality relations hold."""
        if len(self.degrees) != self.class_count:
            raise LiftFailure(
                f"{len(self.degrees)} characters for {self.class_count} classes",
                characters=len(self.degrees),
                classes=self.class_count,
            )
        if sum(d * d for d in self.degrees) != self.order:
            raise LiftFailure("degrees squared do not sum to the group order")
        if any(self.order % d for d in self.degrees):
            raise LiftFailure("a degree does not divide the group order")
        if not np.allclose(self.values[0], 1.0, atol=self.tolerance):
            raise LiftFailure("first row is not the trivial character")
        rows, cols = self.row_residual(), self.column_residual()
        if rows > self.tolerance or cols > self.tolerance:
            raise LiftFailure(
                "orthogonality residual above tolerance",
                row_residual=rows,
                column_residual=cols,
                tolerance=self.tolerance,
            )

    def reordered(self, columns: Sequence[int]) -> CharacterTable:
        """Table whose column ``j`` is column ``columns[j]`` of this one."""
        idx = list(columns)
        return CharacterTable(
            order=self.order,
            class_sizes=tuple(self.class_sizes[i] for i in idx),
            rep_orders=tuple(self.rep_orders[i] for i in idx),
            degrees=self.degrees,
            values=self.values[:, idx],
            tolerance=self.tolerance,
        )

    # --- serialization ---

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "classes": {"sizes": list(self.class_sizes), "rep_orders": list(self.rep_orders)},
            "degrees": list(self.degrees),
            "values": [
                [[_clean(v.real), _clean(v.imag)] for v in row] for row in self.values.tolist()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> CharacterTable:
        try:
            classes = data["classes"]
            sizes = tuple(int(s) for s in classes["sizes"])
            orders = tuple(int(o) for o in classes["rep_orders"])
            degrees = tuple(int(d) for d in data["degrees"])
            values = np.array(
                [[complex(re, im) for re, im in row] for row in data["values"]],
                dtype=np.complex128,
            )
            order = int(data.get("order", sum(sizes)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed character table: {exc}") from exc
        if values.shape != (len(degrees), len(sizes)) or len(orders) != len(sizes):
            raise ParseError("character table dimensions disagree", shape=list(values.shape))
        return cls(
            order=order, class_sizes=sizes, rep_orders=orders, degrees=degrees, values=values
        )


def _clean(x: float) -> float:
    r = round(x, 12)
    return 0.0 if r == 0 else r


# ---------------------------------------------------------------------------
# Class algebra
# ---------------------------------------------------------------------------


def structure_constants(group: EnumeratedGroup) -> npt.NDArray[np.int64]:
    """``a[i, j, k] = #{(x, y) ∈ C_i × C_j : xy = z_k}`` for class representatives ``z_k``."""
    classes, owner = group.class_data()
    r = len(classes)
    everything = np.arange(group.order)
    inv = group.inverse
    out = np.zeros((r, r, r), dtype=np.int64)
    for k, cls in enumerate(classes):
        partner = owner[group.multiply(inv[everything], cls.representative)]
        flat = np.bincount(owner * r + partner, minlength=r * r)
        out[:, :, k] = flat.reshape(r, r)
    return out


def group_exponent(group: EnumeratedGroup) -> int:
    classes, _ = group.class_data()
    return math.lcm(*(c.order for c in classes))


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime ``p ≡ 1 (mod exponent)`` with ``p > 2√order``."""
    bound = 2 * math.isqrt(order) + 1
    p = exponent + 1
    while p <= bound or not isprime(p):
        p += exponent
    return p


def _nullspace_mod(matrix: npt.NDArray[np.int64], p: int) -> npt.NDArray[np.int64]:
    """Basis of ``{v : matrix·v = 0}`` mod *p*, as columns."""
    work = matrix.copy() % p
    rows, cols = work.shape
    pivots: list[int] = []
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if work[r, col]), None)
        if pivot is None:
            continue
        work[[rank, pivot]] = work[[pivot, rank]]
        work[rank] = work[rank] * pow(int(work[rank, col]), -1, p) % p
        others = [r for r in range(rows) if r != rank and work[r, col]]
        if others:
            work[others] = (work[others] - np.outer(work[others, col], work[rank])) % p
        pivots.append(col)
        rank += 1
        if rank == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-work[i, f]) % p
    return basis


def _column_echelon(
    basis: npt.NDArray[np.int64], p: int
) -> tuple[npt.NDArray[np.int64], list[int]]:
    """Reduce columns so that some rows of *basis* form an identity block."""
    work = basis.T.copy() % p
    pivots: list[int] = []
    rank = 0
    for col in range(work.shape[1]):
        pivot = next((r for r in range(rank, work.shape[0]) if work[r, col]), None)
        if pivot is None:
            continue
        work[[rank, pivot]] = work[[pivot, rank]]
        work[rank] = work[rank] * pow(int(work[rank, col]), -1, p) % p
        for r in range(work.shape[0]):
            if r != rank and work[r, col]:
                work[r] = (work[r] - work[r, col] * work[rank]) % p
        pivots.append(col)
        rank += 1
        if rank == work.shape[0]:
            break
    return work.T, pivots


def _split(
    matrix: npt.NDArray[np.int64], basis: npt.NDArray[np.int64], p: int
) -> list[npt.NDArray[np.int64]]:
    """Eigenspaces of *matrix* restricted to the invariant span of *basis*."""
    reduced, pivots = _column_echelon(basis, p)
    restricted = (matrix @ reduced % p)[pivots, :]
    d = reduced.shape[1]
    pieces: list[npt.NDArray[np.int64]] = []
    found = 0
    for lam in range(p):
        shifted = (restricted - lam * np.eye(d, dtype=np.int64)) % p
        kernel = _nullspace_mod(shifted, p)
        if kernel.shape[1]:
            pieces.append(reduced @ kernel % p)
            found += kernel.shape[1]
            if found == d:
                break
    if found != d:
        raise LiftFailure("class matrix is not diagonalizable over GF(p)", p=p)
    return pieces


def _power_classes(group: EnumeratedGroup) -> list[list[int]]:
    """``powers[k][l]`` is the class of ``z_k^l`` for ``0 ≤ l < order(z_k)``."""
    classes, owner = group.class_data()
    out = []
    for cls in classes:
        g = cls.representative
        acc = group.identity
        row = []
        for _ in range(cls.order):
            row.append(int(owner[acc]))
            acc = int(group.multiply(acc, g))
        out.append(row)
    return out


def dixon_table(group: EnumeratedGroup, order_cap: int = DEFAULT_TABLE_ORDER_CAP) -> CharacterTable:
    """Irreducible character table of *group*, validated before return."""
    if group.order > order_cap:
        raise CapExceeded(
            f"character tables are computed for |G| ≤ {order_cap}",
            cap=order_cap,
            order=group.order,
        )
    classes, _ = group.class_data()
    r = len(classes)
    sizes = np.array([c.size for c in classes], dtype=np.int64)
    exponent = group_exponent(group)
    p = dixon_prime(group.order, exponent)
    logger.debug("dixon: %d classes, exponent %d, prime %d", r, exponent, p)

    constants = structure_constants(group) % p
    spaces = [np.eye(r, dtype=np.int64)]
    for i in range(1, r):
        if all(s.shape[1] == 1 for s in spaces):
            break
        nxt: list[npt.NDArray[np.int64]] = []
        for space in spaces:
            nxt.extend(_split(constants[i], space, p) if space.shape[1] > 1 else [space])
        spaces = nxt
    if any(s.shape[1] != 1 for s in spaces):
        raise LiftFailure("class matrices do not separate the characters", p=p)

    inverse_of = inverse_classes(group)
    size_inv = np.array([pow(int(s), -1, p) for s in sizes], dtype=np.int64)
    powers = _power_classes(group)
    root = int(primitive_root(p))
    rows: list[tuple[int, npt.NDArray[np.complex128]]] = []
    for space in spaces:
        omega = space[:, 0] % p
        if omega[0] == 0:
            raise LiftFailure("central character vanishes on the identity class", p=p)
        omega = omega * pow(int(omega[0]), -1, p) % p
        norm = int(np.sum(omega * omega[inverse_of] % p * size_inv % p) % p)
        if norm == 0:
            raise LiftFailure("degenerate central character", p=p)
        square = group.order * pow(norm, -1, p) % p
        degree = next(
            (d for d in range(1, math.isqrt(group.order) + 1) if d * d % p == square),
            None,
        )
        if degree is None or group.order % degree:
            raise LiftFailure("no integral degree for a modular character", p=p)
        modular = omega * degree % p * size_inv % p
        rows.append((degree, _lift(modular, powers, classes, p, root, degree)))

    rows.sort(key=_row_key)
    table = CharacterTable(
        order=group.order,
        class_sizes=tuple(int(s) for s in sizes),
        rep_orders=tuple(c.order for c in classes),
        degrees=tuple(d for d, _ in rows),
        values=np.array([v for _, v in rows], dtype=np.complex128),
    )
    table.validate()
    return table


def _lift(
    modular: npt.NDArray[np.int64],
    powers: list[list[int]],
    classes: Sequence[Any],
    p: int,
    root: int,
    degree: int,
) -> npt.NDArray[np.complex128]:
    values = np.empty(len(classes), dtype=np.complex128)
    for k, cls in enumerate(classes):
        o = cls.order
        zeta = pow(root, (p - 1) // o, p)
        o_inv = pow(o, -1, p)
        total = 0j
        mult_sum = 0
        for j in range(o):
            m = sum(int(modular[powers[k][s]]) * pow(zeta, -j * s % o, p) for s in range(o))
            m = m * o_inv % p
            mult_sum += m
            total += m * complex(math.cos(2 * math.pi * j / o), math.sin(2 * math.pi * j / o))
        if mult_sum != degree:
            raise LiftFailure("eigenvalue multiplicities do not sum to the degree", p=p)
        values[k] = total
    return values


def _row_key(row: tuple[int, npt.NDArray[np.complex128]]) -> tuple[Any, ...]:
    degree, values = row
    trivial = bool(np.allclose(values, 1.0))
    rounded = tuple((round(v.real, 6), round(v.imag, 6)) for v in values.tolist())
    return (not trivial, degree, rounded)


# ---------------------------------------------------------------------------
# Counting solutions
# ---------------------------------------------------------------------------


def structure_counts(
    group: EnumeratedGroup,
    class_ids: Sequence[int],
    cap: int = DEFAULT_BRUTEFORCE_CAP,
) -> IndexArray:
    """``counts[z] = #{(x_1, …, x_d) ∈ C_1 × … × C_d : x_1⋯x_d = z}`` for every ``z``."""
    if not class_ids:
        raise ParseError("at least one class is required")
    classes, owner = group.class_data()
    work = math.prod(classes[c].size for c in class_ids[:-1])
    if work > cap:
        raise CapExceeded(f"brute-force work {work} exceeds cap {cap}", cap=cap, work=work)
    counts = (owner == class_ids[0]).astype(np.int64)
    everything = np.arange(group.order)
    for cid in class_ids[1:]:
        members = classes[cid].members
        inv_members = group.inverse[members]
        step = max(1, (1 << 22) // max(group.order, 1))
        nxt = np.zeros(group.order, dtype=np.int64)
        for start in range(0, members.size, step):
            chunk = inv_members[start : start + step]
            # next[h] = Σ_c counts[h c^{-1}]
            nxt += counts[group.multiply(everything[:, None], chunk[None, :])].sum(axis=1)
        counts = nxt
    return counts


def structure_count_bruteforce(
    group: EnumeratedGroup,
    class_ids: Sequence[int],
    z: int,
    cap: int = DEFAULT_BRUTEFORCE_CAP,
) -> int:
    return int(structure_counts(group, class_ids, cap)[z])


@dataclass(frozen=True)
class SolutionCount:
    value: complex
    rounded: int
    residual: float


def frobenius_count(table: CharacterTable, class_ids: Sequence[int], z_class: int) -> SolutionCount:
    """Character-formula count of ``x_1⋯x_d = z`` with ``x_i ∈ C_i``."""
    d = len(class_ids)
    degrees = np.asarray(table.degrees, dtype=np.float64)
    terms = np.prod(table.values[:, list(class_ids)], axis=1) * table.values[:, z_class].conj()
    total = np.sum(terms / degrees ** (d - 1))
    scale = math.prod(table.class_sizes[c] for c in class_ids) / table.order
    value = complex(total * scale)
    rounded = round(value.real)
    residual = abs(value - rounded)
    if residual >= 0.5:
        raise ResidualTooLarge(
            "character sum is not near an integer",
            value=[value.real, value.imag],
            residual=residual,
        )
    return SolutionCount(value=value, rounded=int(rounded), residual=residual)


def class_power_classes(group: EnumeratedGroup, class_id: int, k: int) -> IndexArray:
    """Classes in the exact ``k``-fold product ``C^k``."""
    members = group.class_data()[0][class_id].members
    power = np.array([class_id], dtype=np.int64)
    for _ in range(k - 1):
        power = class_products(group, power, members)
    return power


def corollary_membership(
    table: CharacterTable,
    c_class: int,
    d_class: int,
    k: int,
    *,
    group: EnumeratedGroup | None = None,
    epsilon: float = COROLLARY_EPSILON,
) -> tuple[float, bool]:
    """Nontrivial character sum magnitude and whether it forces ``D ⊆ C^k``.

    With *group* given, an implied containment is checked against the
    class-level product ``C^k``; a disagreement raises
    :class:`SoundnessViolation`.
    """
    degrees = np.asarray(table.degrees, dtype=np.float64)
    terms = table.values[1:, c_class] ** k * table.values[1:, d_class].conj()
    magnitude = float(abs(np.sum(terms / degrees[1:] ** (k - 1))))
    implied = magnitude < 1 - epsilon
    if implied and group is not None:
        power = class_power_classes(group, c_class, k)
        if d_class not in set(power.tolist()):
            raise SoundnessViolation(
                "character bound implies D ⊆ C^k but the product misses D",
                c_class=c_class,
                d_class=d_class,
                k=k,
            )
    return magnitude, implied


# ---------------------------------------------------------------------------
# Aligning an imported table with an enumerated group
# ---------------------------------------------------------------------------


def table_structure_constants(table: CharacterTable) -> npt.NDArray[np.float64]:
    """Structure constants predicted by the table, ``a[i, j, k]``."""
    degrees = np.asarray(table.degrees, dtype=np.float64)
    v = table.values
    sizes = np.asarray(table.class_sizes, dtype=np.float64)
    a = np.einsum("xi,xj,xk,x->ijk", v, v, v.conj(), 1 / degrees)
    return np.real(a * sizes[:, None, None] * sizes[None, :, None] / table.order)


def align_table(table: CharacterTable, group: EnumeratedGroup) -> CharacterTable:
    """Reorder an imported table's columns to match the group's classes.

    Classes are matched by ``(size, representative order)``; blocks with
    several candidates are resolved by trying column permutations until the
    table's structure constants agree with the group's.
    """
    classes, _ = group.class_data()
    if table.order != group.order or table.class_count != len(classes):
        raise TableMismatch(
            "table does not fit the group",
            table_order=table.order,
            group_order=group.order,
        )
    signature = [(c.size, c.order) for c in classes]
    blocks: dict[tuple[int, int], list[int]] = {}
    for col, sig in enumerate(zip(table.class_sizes, table.rep_orders, strict=True)):
        blocks.setdefault(sig, []).append(col)
    targets: dict[tuple[int, int], list[int]] = {}
    for cid, sig in enumerate(signature):
        targets.setdefault(sig, []).append(cid)
    if {k: len(v) for k, v in blocks.items()} != {k: len(v) for k, v in targets.items()}:
        raise TableMismatch("class sizes and orders do not match the group")

    keys = sorted(targets)
    choices = [list(itertools.permutations(blocks[key])) for key in keys]
    if math.prod(len(c) for c in choices) > _MAX_ALIGNMENTS:
        raise TableMismatch("too many ambiguous classes to align the table")
    expected = structure_constants(group).astype(np.float64)
    for combo in itertools.product(*choices):
        columns = [0] * len(classes)
        for key, perm in zip(keys, combo, strict=True):
            for cid, col in zip(targets[key], perm, strict=True):
                columns[cid] = col
        candidate = table.reordered(columns)
        if np.allclose(table_structure_constants(candidate), expected, atol=1e-6):
            candidate.validate()
            return candidate
    raise TableMismatch("no class correspondence reproduces the structure constants")
