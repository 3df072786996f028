"""Conjugacy widths, covering numbers and the small combinatorial tests.

Every connection set handled here is a union of conjugacy classes, so all
BFS work runs at class level (see :func:`~diagctl.domain.groups.class_eccentricity`).
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from diagctl.domain.constructions import AutRealization, make_alternating
from diagctl.domain.errors import (
    CapExceeded,
    IdentityElement,
    InvalidInvolution,
    InvariantViolation,
    NotFound,
)
from diagctl.domain.groups import (
    DEFAULT_ORDER_CAP,
    ChunkMapper,
    ElementSet,
    EnumeratedGroup,
    IndexArray,
    cayley_ball,
    class_eccentricity,
    class_of,
    class_products,
    class_union,
    conjugacy_classes,
    inverse_classes,
    serial_map,
)
from diagctl.domain.types import FusionSpec

logger = logging.getLogger(__name__)

DEFAULT_CN_CAP = 64


@dataclass(frozen=True, eq=False)
class FusedClass:
    """``t^T``, ``t^{±T}`` or ``t^{±X}`` as a union of conjugacy classes."""

    representative: int
    spec: FusionSpec
    class_ids: IndexArray
    members: ElementSet
    realizations: tuple[AutRealization, ...] = ()

    @property
    def size(self) -> int:
        return int(np.count_nonzero(self.members))


def fuse_class(
    group: EnumeratedGroup,
    t: int,
    spec: FusionSpec = FusionSpec.CLASS,
    auts: Sequence[AutRealization] = (),
) -> FusedClass:
    """Close the class of *t* under the listed automorphisms and inversion.

    Automorphisms permute conjugacy classes, so applying each one to a
    single representative per class is enough.
    """
    if t == group.identity:
        raise IdentityElement("the identity has no conjugacy width")
    classes, owner = group.class_data()
    inverse_of = inverse_classes(group)
    start = int(owner[t])
    found = {start}
    queue = [start]
    while queue:
        c = queue.pop()
        neighbors: list[int] = []
        if spec is FusionSpec.AUTOMORPHISM:
            rep = classes[c].representative
            neighbors.extend(int(owner[alpha.image(group, rep)]) for alpha in auts)
        if spec is not FusionSpec.CLASS:
            neighbors.append(int(inverse_of[c]))
        for nb in neighbors:
            if nb not in found:
                found.add(nb)
                queue.append(nb)
    ids = np.array(sorted(found), dtype=np.int64)
    return FusedClass(
        representative=t,
        spec=spec,
        class_ids=ids,
        members=class_union(group, ids),
        realizations=tuple(auts) if spec is FusionSpec.AUTOMORPHISM else (),
    )


def width_of(group: EnumeratedGroup, fused: FusedClass, *, mapper: ChunkMapper = serial_map) -> int:
    """Width of the Cayley graph with connection set *fused*."""
    width, _ = class_eccentricity(group, fused.members, mapper=mapper)
    return width


def length_l(
    group: EnumeratedGroup,
    t: int,
    spec: FusionSpec,
    auts: Sequence[AutRealization],
    g: int,
    *,
    mapper: ChunkMapper = serial_map,
) -> int:
    """Least number of factors from the fused class of *t* whose product is *g*."""
    fused = fuse_class(group, t, spec, auts)
    _, dist = class_eccentricity(group, fused.members, mapper=mapper)
    return int(dist[class_of(group)[g]])


def covering_number_of_class(
    group: EnumeratedGroup,
    class_id: int,
    cap: int = DEFAULT_CN_CAP,
    *,
    mapper: ChunkMapper = serial_map,
) -> int:
    """Least ``r`` with ``C^r = G`` (exact ``r``-fold products)."""
    classes, _ = group.class_data()
    cls = classes[class_id]
    if cls.representative == group.identity:
        raise IdentityElement("covering number of the identity class is undefined")
    everything = len(classes)
    power = np.array([class_id], dtype=np.int64)
    r = 1
    while power.size < everything:
        if r >= cap:
            raise CapExceeded(
                f"C^r ≠ G for every r ≤ {cap}",
                cap=cap,
                class_id=class_id,
            )
        power = class_products(group, power, cls.members, mapper=mapper)
        r += 1
    return r


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassWidths:
    class_id: int
    representative: int
    rep_cycles: str
    size: int
    order: int
    c: int
    c_i: int
    c_x: int
    cn: int | None


@dataclass(frozen=True)
class WidthReport:
    group: str
    order: int
    x_label: str
    classes: tuple[ClassWidths, ...]
    c: int
    c_i: int
    c_x: int
    cn: int | None
    notes: tuple[str, ...] = field(default=())

    def chain_violations(self) -> list[str]:
        """Breaches of ``c_X ≤ c_i ≤ c ≤ cn``, per class and at the maxima."""
        out: list[str] = []
        rows: list[tuple[str, int, int, int, int | None]] = [
            (f"class {r.class_id}", r.c_x, r.c_i, r.c, r.cn) for r in self.classes
        ]
        rows.append(("maxima", self.c_x, self.c_i, self.c, self.cn))
        for name, c_x, c_i, c, cn in rows:
            if not c_x <= c_i <= c:
                out.append(f"{name}: c_x={c_x} c_i={c_i} c={c}")
            if cn is not None and c > cn:
                out.append(f"{name}: c={c} > cn={cn}")
        return out


def group_widths(
    group: EnumeratedGroup,
    auts: Sequence[AutRealization],
    *,
    label: str = "",
    x_label: str = "inn",
    cn_cap: int = DEFAULT_CN_CAP,
    include_covering: bool = True,
    mapper: ChunkMapper = serial_map,
    class_mapper: ChunkMapper = serial_map,
) -> WidthReport:
    """All width invariants, computed once per nontrivial class.

    *class_mapper* distributes classes; *mapper* distributes BFS chunks
    inside one class.  Results are assembled in class order either way.
    """
    classes = conjugacy_classes(group)
    nontrivial = [c for c in classes if c.representative != group.identity]

    def one(cls_id: int) -> ClassWidths:
        cls = classes[cls_id]
        t = cls.representative
        widths = [
            width_of(group, fuse_class(group, t, spec, auts), mapper=mapper)
            for spec in (FusionSpec.CLASS, FusionSpec.INVERSE, FusionSpec.AUTOMORPHISM)
        ]
        cn = None
        if include_covering:
            cn = covering_number_of_class(group, cls_id, cn_cap, mapper=mapper)
        return ClassWidths(
            class_id=cls_id,
            representative=t,
            rep_cycles=group.element(t).to_cycles(),
            size=cls.size,
            order=cls.order,
            c=widths[0],
            c_i=widths[1],
            c_x=widths[2],
            cn=cn,
        )

    rows = tuple(class_mapper(one, [c.id for c in nontrivial]))
    if not rows:
        raise IdentityElement("the trivial group has no nontrivial classes")
    return WidthReport(
        group=label,
        order=group.order,
        x_label=x_label,
        classes=rows,
        c=max(r.c for r in rows),
        c_i=max(r.c_i for r in rows),
        c_x=max(r.c_x for r in rows),
        cn=max(r.cn for r in rows if r.cn is not None) if include_covering else None,
    )


def real_classes(group: EnumeratedGroup) -> list[int]:
    """Classes closed under inversion."""
    inverse_of = inverse_classes(group)
    return [c for c in range(inverse_of.size) if inverse_of[c] == c]


# ---------------------------------------------------------------------------
# Combinatorial tests
# ---------------------------------------------------------------------------


def involution_classes(group: EnumeratedGroup) -> list[int]:
    return [c.id for c in conjugacy_classes(group) if c.order == 2]


def strongly_real_test(group: EnumeratedGroup, *, mapper: ChunkMapper = serial_map) -> bool:
    """Whether every element is a product of at most two involutions."""
    inv_ids = np.array(involution_classes(group), dtype=np.int64)
    if inv_ids.size == 0:
        return group.order == 1
    classes = conjugacy_classes(group)
    involutions = np.flatnonzero(class_union(group, inv_ids)).astype(np.int64)
    squares = class_products(group, inv_ids, involutions, mapper=mapper)
    covered = set(squares.tolist()) | set(inv_ids.tolist()) | {0}
    return len(covered) == len(classes)


def cycle_type_classes(group: EnumeratedGroup, cycle_type: tuple[int, ...]) -> list[int]:
    return [
        c.id
        for c in conjugacy_classes(group)
        if group.element(c.representative).cycle_type() == cycle_type
    ]


def three_l_cycles_test(
    n: int,
    l: int,  # noqa: E741
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    group: EnumeratedGroup | None = None,
    mapper: ChunkMapper = serial_map,
) -> bool:
    """Whether every element of ``A_n`` is a product of exactly three ``l``-cycles.

    A 1-cycle is the identity, so ``l = 1`` only reaches the identity and the
    answer is False without enumerating ``A_n``.
    """
    if n < 5 or l % 2 == 0 or not 1 <= l <= n:
        raise InvariantViolation("three_l_cycles_test needs n ≥ 5 and odd l ≤ n", n=n, l=l)
    if l == 1:
        return False
    alt = group if group is not None else make_alternating(n, order_cap).group
    l_ids = np.array(cycle_type_classes(alt, (l,)), dtype=np.int64)
    l_cycles = np.flatnonzero(class_union(alt, l_ids)).astype(np.int64)
    square = class_products(alt, l_ids, l_cycles, mapper=mapper)
    cube = class_products(alt, square, l_cycles, mapper=mapper)
    return cube.size == len(conjugacy_classes(alt))


def noncommuting_conjugate(group: EnumeratedGroup, u: int) -> int:
    """First ``x`` (in element order) with ``u·u^x`` of order greater than 2."""
    if u == group.identity or int(group.multiply(u, u)) != group.identity:
        raise InvalidInvolution("u must be an involution", u=u)
    everything = np.arange(group.order)
    y = group.multiply(u, group.conjugate(u, everything))
    hits = np.flatnonzero(group.multiply(y, y) != group.identity)
    if hits.size == 0:
        raise NotFound("every conjugate of u commutes with u", u=u)
    return int(hits[0])


class Factorizer:
    """Explicit factorizations over a fused class from one element-level BFS."""

    def __init__(
        self, group: EnumeratedGroup, fused: FusedClass, *, mapper: ChunkMapper = serial_map
    ) -> None:
        self.group = group
        self.fused = fused
        self.ball = cayley_ball(group, fused.members, mapper=mapper)

    @property
    def width(self) -> int:
        return self.ball.width

    def factor(self, g: int) -> list[int]:
        """Elements ``s_1, …, s_m`` of the class with ``s_1⋯s_m = g``, ``m`` minimal."""
        out: list[int] = []
        while g != self.group.identity:
            out.append(int(self.ball.step[g]))
            g = int(self.ball.parent[g])
        out.reverse()
        return out


def factorize(group: EnumeratedGroup, fused: FusedClass, g: int) -> list[int]:
    return Factorizer(group, fused).factor(g)
