"""Simple diagonal actions ``T^k.X`` and their orbital graphs.

Points of ``Ω`` are right cosets of the diagonal subgroup written with first
coordinate 1, i.e. tuples ``(x_2, …, x_k)`` of element indices of ``T``,
packed mixed-radix into one integer (``ω₀ = 0``).  Only the neighbor set of
``ω₀`` is stored; neighbors of any other point ``α`` are obtained by
translating with ``(1, α_2, …, α_k)``, which acts on canonical tuples as an
entrywise right product.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import networkx as nx
import numpy as np
import numpy.typing as npt
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from diagctl.domain.constructions import AutRealization
from diagctl.domain.errors import (
    BoundViolation,
    CapExceeded,
    DiagonalPair,
    Disconnected,
    FactorizationUnavailable,
    InvariantViolation,
    NonTransitiveCoordinates,
)
from diagctl.domain.groups import (
    DEFAULT_TABLE_CAP,
    ChunkMapper,
    EnumeratedGroup,
    IndexArray,
    conjugacy_classes,
    serial_map,
)
from diagctl.domain.permutations import Permutation
from diagctl.domain.types import FusionSpec, Variant
from diagctl.domain.widths import Factorizer, fuse_class, width_of

logger = logging.getLogger(__name__)

DEFAULT_POINT_CAP = 2**21
DEFAULT_DOT_CAP = 5_000
_FRONTIER_PRODUCTS = 1 << 22


def coordinate_generators(variant: Variant, k: int) -> list[Permutation]:
    """Generators of the permutation group induced on the ``k`` coordinates."""
    if variant in (Variant.TKSK, Variant.DKT) and k >= 2:
        swap = Permutation.from_cycles("(0 1)", k)
        if k == 2:
            return [swap]
        rotate = Permutation.from_cycles("(" + " ".join(map(str, range(k))) + ")", k)
        return [swap, rotate]
    return []


def _is_transitive(generators: Sequence[Permutation], k: int) -> bool:
    reached = {0}
    frontier = [0]
    while frontier:
        point = frontier.pop()
        for g in generators:
            nxt = g.images[point]
            if nxt not in reached:
                reached.add(nxt)
                frontier.append(nxt)
    return len(reached) == k


@dataclass(frozen=True, eq=False)
class DiagonalGeometry:
    """Coset space of a simple diagonal group with its point stabilizer ``D_A``."""

    group: EnumeratedGroup
    k: int
    variant: Variant
    coordinate_group: tuple[Permutation, ...]
    automorphisms: tuple[AutRealization, ...]
    aut_maps: tuple[IndexArray, ...]
    label: str = ""
    imprimitive: bool = False

    @property
    def arity(self) -> int:
        """Stored coordinates per point (``k − 1``)."""
        return self.k - 1

    @property
    def size(self) -> int:
        return int(self.group.order**self.arity)

    @property
    def radix(self) -> IndexArray:
        return np.array([self.group.order**i for i in range(self.arity)], dtype=np.int64)

    # --- encoding ---

    def decode(self, points: npt.ArrayLike) -> IndexArray:
        """Digits ``(x_2, …, x_k)`` of each point, shape ``(n, k − 1)``."""
        pts = np.atleast_1d(np.asarray(points, dtype=np.int64))
        return (pts[:, None] // self.radix[None, :]) % self.group.order

    def encode(self, digits: npt.ArrayLike) -> IndexArray:
        arr = np.asarray(digits, dtype=np.int64)
        return arr @ self.radix

    def point(self, coordinates: Sequence[int]) -> int:
        """Point for the full tuple ``(h_1, …, h_k)``, canonicalized."""
        if len(coordinates) != self.k:
            raise InvariantViolation(f"expected {self.k} coordinates", got=len(coordinates))
        head = self.group.inverse[int(coordinates[0])]
        tail = self.group.multiply(head, np.asarray(coordinates[1:], dtype=np.int64))
        return int(self.encode(tail))

    def full_tuple(self, point: int) -> list[int]:
        return [self.group.identity, *self.decode(point)[0].tolist()]

    def defining_point(self, t: int) -> int:
        """``(1, …, 1, t)``: the far end of the defining edge of ``Γ_0^t``."""
        digits = np.zeros(self.arity, dtype=np.int64)
        digits[-1] = t
        return int(self.encode(digits))


def make_geometry(
    group: EnumeratedGroup,
    k: int,
    variant: Variant,
    *,
    automorphisms: Sequence[AutRealization] = (),
    coordinate_group: Sequence[Permutation] | None = None,
    point_cap: int = DEFAULT_POINT_CAP,
    table_cap: int = DEFAULT_TABLE_CAP,
    imprimitive: bool = False,
    label: str = "",
) -> DiagonalGeometry:
    """Build ``Ω ≅ T^{k−1}`` for *variant*.

    ``DkT`` takes every listed automorphism, ``custom`` uses the supplied
    coordinate group and automorphisms, ``Tk`` and ``TkSk`` ignore
    automorphisms.  For ``k ≥ 3`` the coordinate group must be transitive
    unless *imprimitive* is set.
    """
    if k < 2:
        raise InvariantViolation("diagonal actions need k ≥ 2", k=k)
    size = group.order ** (k - 1)
    if size > point_cap:
        raise CapExceeded(
            f"|Ω| = {size} exceeds point_cap={point_cap}",
            cap=point_cap,
            points=size,
        )
    if variant is Variant.CUSTOM:
        coords = tuple(coordinate_group or ())
        if any(p.degree != k for p in coords):
            raise InvariantViolation("coordinate permutations must act on k symbols", k=k)
        auts = tuple(automorphisms)
    else:
        coords = tuple(coordinate_generators(variant, k))
        auts = tuple(automorphisms) if variant is Variant.DKT else ()
    if k >= 3 and not imprimitive and not _is_transitive(coords, k):
        raise NonTransitiveCoordinates(
            f"coordinate group of {variant.value} is not transitive on {k} symbols",
            variant=variant.value,
            k=k,
        )
    group.ensure_table(table_cap)
    aut_maps = tuple(alpha.element_map(group) for alpha in auts)
    return DiagonalGeometry(
        group=group,
        k=k,
        variant=variant,
        coordinate_group=coords,
        automorphisms=auts,
        aut_maps=aut_maps,
        label=label,
        imprimitive=imprimitive,
    )


# ---------------------------------------------------------------------------
# Actions on Ω
# ---------------------------------------------------------------------------


def act_tk(geometry: DiagonalGeometry, points: npt.ArrayLike, ts: Sequence[int]) -> IndexArray:
    """Right multiplication by ``(t_1, …, t_k)``: ``x_i ↦ t_1^{-1} x_i t_i``."""
    g = geometry.group
    if len(ts) != geometry.k:
        raise InvariantViolation(f"expected {geometry.k} elements", got=len(ts))
    digits = geometry.decode(points)
    head = g.inverse[int(ts[0])]
    tail = np.asarray(ts[1:], dtype=np.int64)
    moved = g.multiply(g.multiply(head, digits), tail[None, :])
    return geometry.encode(moved)


def act_perm(geometry: DiagonalGeometry, points: npt.ArrayLike, sigma: Permutation) -> IndexArray:
    """Move coordinate ``i`` to position ``σ(i)`` and renormalize the first entry."""
    g = geometry.group
    if sigma.degree != geometry.k:
        raise InvariantViolation("σ must act on the k coordinates", k=geometry.k)
    digits = geometry.decode(points)
    full = np.concatenate([np.zeros((digits.shape[0], 1), dtype=np.int64), digits], axis=1)
    moved = np.empty_like(full)
    moved[:, list(sigma.images)] = full
    head = g.inverse[moved[:, 0]]
    return geometry.encode(g.multiply(head[:, None], moved[:, 1:]))


def act_aut(geometry: DiagonalGeometry, points: npt.ArrayLike, alpha: int) -> IndexArray:
    """Apply the ``alpha``-th automorphism of the geometry entrywise."""
    mapping = geometry.aut_maps[alpha]
    return geometry.encode(mapping[geometry.decode(points)])


def reverse(geometry: DiagonalGeometry, points: npt.ArrayLike) -> IndexArray:
    """``canonical(ω₀ · t_s^{-1})``: entrywise inversion."""
    return geometry.encode(geometry.group.inverse[geometry.decode(points)])


def stabilizer_images(geometry: DiagonalGeometry, points: IndexArray) -> list[IndexArray]:
    """Images of *points* under each generator of ``D_A``."""
    g = geometry.group
    out: list[IndexArray] = []
    digits = geometry.decode(points)
    for gen in g.generator_indices:
        out.append(geometry.encode(g.conjugate(digits, gen)))
    out.extend(act_perm(geometry, points, sigma) for sigma in geometry.coordinate_group)
    out.extend(act_aut(geometry, points, i) for i in range(len(geometry.aut_maps)))
    return out


# ---------------------------------------------------------------------------
# Suborbits and orbital graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Suborbits:
    """Partition of ``Ω`` into ``D_A``-orbits, ordered by least point."""

    labels: IndexArray
    sizes: IndexArray
    representatives: IndexArray

    @property
    def rank(self) -> int:
        return int(self.sizes.size)

    def members(self, suborbit: int) -> IndexArray:
        return np.flatnonzero(self.labels == suborbit).astype(np.int64)


def suborbits(geometry: DiagonalGeometry) -> Suborbits:
    n = geometry.size
    everything = np.arange(n, dtype=np.int64)
    images = stabilizer_images(geometry, everything)
    if images:
        src = np.tile(everything, len(images))
        dst = np.concatenate(images)
    else:
        src = dst = everything
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n)).tocsr()
    _, raw = connected_components(graph, directed=True, connection="weak")
    # Relabel by least member so that ω₀ is suborbit 0.
    first = np.full(raw.max() + 1, n, dtype=np.int64)
    np.minimum.at(first, raw, everything)
    order = np.argsort(first, kind="stable")
    relabel = np.empty_like(order)
    relabel[order] = np.arange(order.size)
    labels = relabel[raw].astype(np.int64)
    return Suborbits(
        labels=labels,
        sizes=np.bincount(labels).astype(np.int64),
        representatives=first[order].astype(np.int64),
    )


@dataclass(frozen=True, eq=False)
class OrbitalGraph:
    """Undirected orbital graph given by ``N(ω₀)``."""

    geometry: DiagonalGeometry
    suborbit_ids: tuple[int, ...]
    neighbors: IndexArray
    paired: bool

    @property
    def valency(self) -> int:
        return int(self.neighbors.size)

    def neighbor_digits(self) -> IndexArray:
        return self.geometry.decode(self.neighbors)

    def neighbors_of(self, point: int) -> IndexArray:
        """``N(α) = {s · t_α : s ∈ N(ω₀)}``."""
        geo = self.geometry
        digits = geo.decode(point)[0]
        return geo.encode(geo.group.multiply(self.neighbor_digits(), digits[None, :]))

    def is_edge(self, a: int, b: int) -> bool:
        """Whether ``b ∈ N(a)``: ``b·a^{-1}`` entrywise lies in ``N(ω₀)``."""
        geo = self.geometry
        da, db = geo.decode(a)[0], geo.decode(b)[0]
        offset = int(geo.encode(geo.group.multiply(db, geo.group.inverse[da])))
        pos = int(np.searchsorted(self.neighbors, offset))
        return pos < self.neighbors.size and int(self.neighbors[pos]) == offset


def orbital_graph(
    geometry: DiagonalGeometry, beta: int, orbits: Suborbits | None = None
) -> OrbitalGraph:
    """Orbital graph of the pair ``(ω₀, β)``, merged with its paired orbital."""
    if beta == 0:
        raise DiagonalPair("β = ω₀ gives the diagonal orbital")
    orbits = orbits or suborbits(geometry)
    own = int(orbits.labels[beta])
    members = orbits.members(own)
    back = reverse(geometry, members[:1])
    paired_id = int(orbits.labels[int(back[0])])
    ids = tuple(sorted({own, paired_id}))
    neighbors = np.sort(np.concatenate([orbits.members(i) for i in ids])).astype(np.int64)
    return OrbitalGraph(
        geometry=geometry,
        suborbit_ids=ids,
        neighbors=neighbors,
        paired=paired_id != own,
    )


def eccentricity(
    graph: OrbitalGraph,
    source: int = 0,
    *,
    mapper: ChunkMapper = serial_map,
) -> int:
    """BFS eccentricity of *source*; raises :class:`Disconnected` if ``Ω`` is not reached."""
    geo = graph.geometry
    n = geo.size
    seen = np.zeros(n, dtype=bool)
    seen[source] = True
    frontier = np.array([source], dtype=np.int64)
    offsets = graph.neighbor_digits()
    step = max(1, _FRONTIER_PRODUCTS // max(offsets.shape[0] * geo.arity, 1))
    depth = 0

    def expand(chunk: IndexArray) -> IndexArray:
        digits = geo.decode(chunk)
        prod = geo.group.multiply(offsets[None, :, :], digits[:, None, :])
        return np.unique(geo.encode(prod).ravel())

    while True:
        chunks = [frontier[i : i + step] for i in range(0, frontier.size, step)]
        reached = mapper(expand, chunks)
        candidates = np.unique(np.concatenate(reached)) if reached else frontier[:0]
        fresh = candidates[~seen[candidates]]
        if fresh.size == 0:
            break
        seen[fresh] = True
        frontier = fresh
        depth += 1
    if not seen.all():
        raise Disconnected(
            "orbital graph is disconnected",
            reached=int(np.count_nonzero(seen)),
            points=n,
            suborbits=list(graph.suborbit_ids),
        )
    return depth


def graph_diameter(graph: OrbitalGraph, *, mapper: ChunkMapper = serial_map) -> int:
    """Diameter, measured as the eccentricity of ``ω₀`` (the graph is vertex-transitive)."""
    return eccentricity(graph, 0, mapper=mapper)


def sample_eccentricities(
    graph: OrbitalGraph,
    count: int = 10,
    seed: int = 0,
    *,
    mapper: ChunkMapper = serial_map,
) -> list[tuple[int, int]]:
    """Eccentricities of a deterministic sample of vertices."""
    rng = np.random.default_rng(seed)
    n = graph.geometry.size
    picks = sorted(set(rng.integers(0, n, size=count).tolist()))
    return [(p, eccentricity(graph, p, mapper=mapper)) for p in picks]


@dataclass(frozen=True)
class OrbitalRecord:
    suborbit_ids: tuple[int, ...]
    representative: int
    suborbit_size: int
    valency: int
    diameter: int
    paired: bool


@dataclass(frozen=True)
class OrbdiamReport:
    omega_size: int
    rank: int
    orbitals: tuple[OrbitalRecord, ...]
    orbdiam: int


def orbdiam(geometry: DiagonalGeometry, *, mapper: ChunkMapper = serial_map) -> OrbdiamReport:
    """Largest orbital-graph diameter, one graph per pair of paired suborbits."""
    orbits = suborbits(geometry)
    done: set[int] = {0}
    records: list[OrbitalRecord] = []
    for sub in range(1, orbits.rank):
        if sub in done:
            continue
        rep = int(orbits.representatives[sub])
        graph = orbital_graph(geometry, rep, orbits)
        done.update(graph.suborbit_ids)
        diameter = graph_diameter(graph, mapper=mapper)
        records.append(
            OrbitalRecord(
                suborbit_ids=graph.suborbit_ids,
                representative=rep,
                suborbit_size=int(orbits.sizes[sub]),
                valency=graph.valency,
                diameter=diameter,
                paired=graph.paired,
            )
        )
    if not records:
        raise InvariantViolation("the geometry has no nondiagonal orbital")
    return OrbdiamReport(
        omega_size=geometry.size,
        rank=orbits.rank,
        orbitals=tuple(records),
        orbdiam=max(r.diameter for r in records),
    )


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------


def x0_realizations(geometry: DiagonalGeometry) -> tuple[AutRealization, ...]:
    """Automorphisms of ``T`` induced by the point stabilizer (empty means ``Inn T``)."""
    return geometry.automorphisms


def lower_bound(k: int, c_x: int) -> Fraction:
    """``(k−1)c/2 + 1`` for odd ``k``, ``kc/2`` for even ``k``."""
    if k % 2:
        return Fraction((k - 1) * c_x, 2) + 1
    return Fraction(k * c_x, 2)


@dataclass(frozen=True)
class BoundCertificate:
    t: int
    t_cycles: str
    measured: int
    lower: Fraction
    upper: int
    upper_quadratic: int | None
    c_x_t: int
    c_i: int

    def holds(self) -> bool:
        ok = self.lower <= self.measured <= self.upper
        return ok and (self.upper_quadratic is None or self.measured <= self.upper_quadratic)


def inverse_conjugacy_width(group: EnumeratedGroup, *, mapper: ChunkMapper = serial_map) -> int:
    """``c_i(T)``: largest width over the classes ``t^{±T}``."""
    return max(
        width_of(group, fuse_class(group, c.representative, FusionSpec.INVERSE), mapper=mapper)
        for c in conjugacy_classes(group)
        if c.representative != group.identity
    )


def bound_certificate(
    geometry: DiagonalGeometry,
    t: int,
    *,
    c_i: int | None = None,
    mapper: ChunkMapper = serial_map,
) -> BoundCertificate:
    """Measure ``diam Γ_0^t`` and compare it with the lower and upper bounds.

    Raises :class:`BoundViolation` when a bound fails.
    """
    group = geometry.group
    fused = fuse_class(group, t, FusionSpec.AUTOMORPHISM, x0_realizations(geometry))
    c_x_t = width_of(group, fused, mapper=mapper)
    if c_i is None:
        c_i = inverse_conjugacy_width(group, mapper=mapper)
    graph = orbital_graph(geometry, geometry.defining_point(t))
    measured = graph_diameter(graph, mapper=mapper)
    k = geometry.k
    cert = BoundCertificate(
        t=t,
        t_cycles=group.element(t).to_cycles(),
        measured=measured,
        lower=lower_bound(k, c_x_t),
        upper=(k - 1) * c_i,
        upper_quadratic=24 * (k - 1) * c_i * c_i if geometry.variant is Variant.TKSK else None,
        c_x_t=c_x_t,
        c_i=c_i,
    )
    if not cert.holds():
        raise BoundViolation(
            f"diam Γ_0^t = {measured} outside [{cert.lower}, {cert.upper}]",
            t=cert.t_cycles,
            measured=measured,
            lower=str(cert.lower),
            upper=cert.upper,
            upper_quadratic=cert.upper_quadratic,
        )
    return cert


def strict_lower_bound_holds(geometry: DiagonalGeometry, diameter: int) -> bool:
    """``orbdiam ≥ k + 1``, expected whenever ``c_A(T) = 2`` and ``k ≥ 3``."""
    return diameter >= geometry.k + 1


# ---------------------------------------------------------------------------
# Explicit paths
# ---------------------------------------------------------------------------


def construct_path(
    geometry: DiagonalGeometry,
    t: int,
    target: int,
    *,
    graph: OrbitalGraph | None = None,
    mapper: ChunkMapper = serial_map,
) -> list[int]:
    """Walk from ``ω₀`` to *target* in ``Γ_0^t`` one coordinate at a time.

    Coordinate ``i`` is moved from 1 to ``h_i`` by left factors from
    ``t^{±T}`` (a shortest factorization of ``h_i``), each placed in slot
    ``i`` alone.  Returns the visited points after ``ω₀``; every step is
    checked against ``N(ω₀)``.
    """
    group = geometry.group
    graph = graph or orbital_graph(geometry, geometry.defining_point(t))
    factorizer = Factorizer(group, fuse_class(group, t, FusionSpec.INVERSE), mapper=mapper)
    goal = geometry.decode(target)[0]
    current = np.zeros(geometry.arity, dtype=np.int64)
    path: list[int] = []
    for slot in range(geometry.arity):
        h = int(goal[slot])
        if h == group.identity:
            continue
        for u in reversed(factorizer.factor(h)):
            step = np.zeros(geometry.arity, dtype=np.int64)
            step[slot] = u
            offset = int(geometry.encode(step))
            pos = int(np.searchsorted(graph.neighbors, offset))
            if pos >= graph.neighbors.size or int(graph.neighbors[pos]) != offset:
                raise FactorizationUnavailable(
                    f"no edge moves coordinate {slot + 2} alone",
                    coordinate=slot + 2,
                    variant=geometry.variant.value,
                )
            before = int(geometry.encode(current))
            current[slot] = int(group.multiply(u, current[slot]))
            after = int(geometry.encode(current))
            if not graph.is_edge(before, after):
                raise InvariantViolation("constructed step is not an edge", step=len(path))
            path.append(after)
    if int(geometry.encode(current)) != target:
        raise InvariantViolation("constructed path does not end at the target")
    return path


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def to_networkx(graph: OrbitalGraph, dot_cap: int = DEFAULT_DOT_CAP) -> nx.Graph[Any]:
    geo = graph.geometry
    if geo.size > dot_cap:
        raise CapExceeded(f"|Ω| = {geo.size} exceeds dot_cap={dot_cap}", cap=dot_cap)
    out: nx.Graph[Any] = nx.Graph()
    out.add_nodes_from(range(geo.size))
    for point in range(geo.size):
        for nb in graph.neighbors_of(point).tolist():
            if point < nb:
                out.add_edge(point, nb)
    return out


def to_dot(graph: OrbitalGraph, dot_cap: int = DEFAULT_DOT_CAP) -> str:
    """Graphviz DOT text of the whole orbital graph."""
    g = to_networkx(graph, dot_cap)
    lines = ["graph orbital {", "  node [shape=point];"]
    lines.extend(f"  {node};" for node in g.nodes)
    lines.extend(f"  {a} -- {b};" for a, b in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
