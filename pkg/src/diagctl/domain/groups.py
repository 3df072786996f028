"""Enumerated permutation groups and the Cayley-ball kernels.

An :class:`EnumeratedGroup` stores every element as a row of image arrays in
breadth-first order from the identity (index 0), together with the
spanning tree that produced it.  Element lookup goes through a *base*: a few
points whose images already determine an element, packed into one int64
key per element and resolved with ``searchsorted``.

Element sets are boolean numpy arrays indexed by element index.  Sets that
are unions of conjugacy classes ("normal sets") get class-level shortcuts:
for such a connection set the Cayley distance is a class function, so a BFS
over classes reaches the same answer as one over elements.
"""

from __future__ import annotations

import logging
import threading
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from diagctl.domain.errors import (
    CapExceeded,
    InvariantViolation,
    NotAnAutomorphism,
    NotGenerating,
    NotInGroup,
)
from diagctl.domain.permutations import Permutation, common_degree

logger = logging.getLogger(__name__)

type IndexArray = npt.NDArray[np.int64]
type ElementSet = npt.NDArray[np.bool_]
type ChunkMapper = Callable[[Callable[[Any], Any], Sequence[Any]], list[Any]]

DEFAULT_ORDER_CAP = 2_000_000
DEFAULT_TABLE_CAP = 25_000_000
# Upper bound on rows gathered at once by the vectorized kernels.
_CHUNK_ROWS = 1 << 20


def serial_map(fn: Callable[[Any], Any], items: Sequence[Any]) -> list[Any]:
    """Default :data:`ChunkMapper`: plain in-order map."""
    return [fn(item) for item in items]


@dataclass(frozen=True, eq=False)
class ConjugacyClass:
    """One conjugacy class ``t^T`` as a sorted element-index array."""

    id: int
    representative: int
    members: IndexArray
    order: int

    @property
    def size(self) -> int:
        return int(self.members.size)


class EnumeratedGroup:
    """Explicit finite permutation group with indexed elements.

    Instances are immutable after construction; the lazily built caches
    (conjugacy classes, multiplication table) are guarded by a lock so
    concurrent readers see one build.
    """

    def __init__(
        self,
        *,
        degree: int,
        generators: Sequence[Permutation],
        elements: npt.NDArray[np.integer[Any]],
        parent: IndexArray,
        parent_generator: IndexArray,
        layer_starts: Sequence[int],
    ) -> None:
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self.elements = elements
        self.parent = parent
        self.parent_generator = parent_generator
        self.layer_starts: tuple[int, ...] = tuple(layer_starts)
        self._lock = threading.RLock()
        self._classes: list[ConjugacyClass] | None = None
        self._class_of: IndexArray | None = None
        self._table: npt.NDArray[np.int32] | None = None
        self.base: tuple[int, ...] = _choose_base(elements)
        self._radix = np.array([degree**j for j in range(len(self.base))], dtype=np.int64)
        keys = self._keys(elements[:, list(self.base)])
        self._key_order = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._key_order]
        self.generator_indices: IndexArray = np.array(
            [self.index_of(g) for g in self.generators], dtype=np.int64
        )
        self.inverse: IndexArray = self._compute_inverses()

    # --- basic accessors ---

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    @property
    def identity(self) -> int:
        return 0

    def element(self, index: int) -> Permutation:
        return Permutation.from_images(self.elements[index].tolist())

    def index_of(self, perm: Permutation) -> int:
        """Element index of *perm*, or :class:`NotInGroup`."""
        if perm.degree != self.degree:
            raise NotInGroup("degree mismatch", degree=perm.degree)
        row = np.asarray(perm.images, dtype=np.int64)
        idx = int(self.lookup(row[list(self.base)][None, :])[0])
        if not np.array_equal(self.elements[idx], row):
            raise NotInGroup(f"{perm} is not an element of the group", perm=perm.to_cycles())
        return idx

    def contains(self, perm: Permutation) -> bool:
        try:
            self.index_of(perm)
        except NotInGroup:
            return False
        return True

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"EnumeratedGroup(degree={self.degree}, order={self.order})"

    # --- keyed lookup ---

    def _keys(self, base_images: npt.NDArray[np.integer[Any]]) -> IndexArray:
        return base_images.astype(np.int64) @ self._radix

    def lookup(self, base_images: npt.NDArray[np.integer[Any]]) -> IndexArray:
        """Resolve rows of base images to element indices."""
        keys = self._keys(base_images)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self._sorted_keys.size - 1)
        if not np.array_equal(self._sorted_keys[pos], keys):
            raise NotInGroup("product left the enumerated element set")
        return self._key_order[pos].astype(np.int64)

    # --- arithmetic ---

    def multiply(self, a: npt.ArrayLike, b: npt.ArrayLike) -> IndexArray:
        """Vectorized product ``a * b`` (apply ``a`` first) on index arrays."""
        aa, bb = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        shape = aa.shape
        flat_a, flat_b = aa.ravel(), bb.ravel()
        table = self._table
        if table is not None:
            return table[flat_a, flat_b].astype(np.int64).reshape(shape)
        out = np.empty(flat_a.size, dtype=np.int64)
        step = max(1, _CHUNK_ROWS // max(self.degree, 1))
        base = list(self.base)
        for start in range(0, flat_a.size, step):
            sa = flat_a[start : start + step]
            sb = flat_b[start : start + step]
            a_base = self.elements[sa][:, base].astype(np.intp)
            prod = np.take_along_axis(self.elements[sb], a_base, axis=1)
            out[start : start + step] = self.lookup(prod)
        return out.reshape(shape)

    def right_translation(self, c: int) -> IndexArray:
        """Map ``g ↦ g * c`` over all elements."""
        return self.multiply(np.arange(self.order), c)

    def conjugate(self, g: npt.ArrayLike, x: npt.ArrayLike) -> IndexArray:
        """``x^{-1} g x`` elementwise."""
        xa = np.asarray(x, dtype=np.int64)
        return self.multiply(self.multiply(self.inverse[xa], g), xa)

    def power(self, g: int, exponent: int) -> int:
        if exponent < 0:
            g, exponent = int(self.inverse[g]), -exponent
        result, base = self.identity, g
        while exponent:
            if exponent & 1:
                result = int(self.multiply(result, base))
            base = int(self.multiply(base, base))
            exponent >>= 1
        return result

    def _compute_inverses(self) -> IndexArray:
        base = list(self.base)
        out = np.empty(self.order, dtype=np.int64)
        step = max(1, _CHUNK_ROWS // max(self.degree, 1))
        points = np.arange(self.degree)
        for start in range(0, self.order, step):
            rows = self.elements[start : start + step]
            inv = np.empty_like(rows)
            np.put_along_axis(inv, rows.astype(np.intp), np.broadcast_to(points, rows.shape), 1)
            out[start : start + step] = self.lookup(inv[:, base])
        return out

    # --- lazily built caches ---

    def multiplication_table(self, cap: int = DEFAULT_TABLE_CAP) -> npt.NDArray[np.int32]:
        """Full ``order × order`` product table, built on first use."""
        with self._lock:
            if self._table is None:
                if self.order * self.order > cap:
                    raise CapExceeded(
                        f"multiplication table needs {self.order**2} entries (cap {cap})",
                        order=self.order,
                        cap=cap,
                    )
                rows = np.arange(self.order)
                table = np.empty((self.order, self.order), dtype=np.int32)
                for a in range(self.order):
                    table[a] = self.multiply(a, rows)
                self._table = table
            return self._table

    def ensure_table(self, cap: int = DEFAULT_TABLE_CAP) -> bool:
        """Build the product table when it fits under *cap*; report whether it exists."""
        if self._table is None and self.order * self.order <= cap:
            self.multiplication_table(cap)
        return self._table is not None

    def class_data(self) -> tuple[list[ConjugacyClass], IndexArray]:
        with self._lock:
            if self._classes is None or self._class_of is None:
                self._classes, self._class_of = _build_classes(self)
            return self._classes, self._class_of

    # --- homomorphisms ---

    def word(self, g: int) -> list[int]:
        """Generator positions whose left-to-right product is element *g*."""
        out: list[int] = []
        while g != self.identity:
            out.append(int(self.parent_generator[g]))
            g = int(self.parent[g])
        out.reverse()
        return out

    def extend_homomorphism(self, generator_images: Sequence[int]) -> IndexArray:
        """Extend generator images to a full element map along the spanning tree.

        The result is checked to be a bijective homomorphism; a map that is
        not raises :class:`~diagctl.domain.errors.NotAnAutomorphism`.
        """
        images = np.asarray(generator_images, dtype=np.int64)
        if images.size != len(self.generators):
            raise NotAnAutomorphism("one image per generator is required")
        phi = np.zeros(self.order, dtype=np.int64)
        bounds = [*self.layer_starts, self.order]
        for lo, hi in zip(bounds[:-1], bounds[1:], strict=True):
            if lo == 0:
                continue
            layer = np.arange(lo, hi)
            parents = phi[self.parent[layer]]
            phi[layer] = self.multiply(parents, images[self.parent_generator[layer]])
        if np.unique(phi).size != self.order:
            raise NotAnAutomorphism("generator images do not define a bijection")
        everything = np.arange(self.order)
        for pos, gen in enumerate(self.generator_indices):
            lhs = phi[self.multiply(everything, gen)]
            rhs = self.multiply(phi, images[pos])
            if not np.array_equal(lhs, rhs):
                raise NotAnAutomorphism("generator images do not define a homomorphism")
        return phi


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def _choose_base(elements: npt.NDArray[np.integer[Any]]) -> tuple[int, ...]:
    """Greedy base: add points while they separate more elements."""
    order, degree = elements.shape
    if order == 1:
        return (0,) if degree else ()
    base: list[int] = []
    keys = np.zeros(order, dtype=np.int64)
    distinct = 1
    for point in range(degree):
        trial = keys * degree + elements[:, point].astype(np.int64)
        count = np.unique(trial).size
        if count > distinct:
            base.append(point)
            keys, distinct = trial, count
            if degree ** len(base) >= 2**62:
                raise CapExceeded("base keys overflow int64", degree=degree, base=len(base))
        if distinct == order:
            break
    return tuple(base)


def enumerate_group(
    generators: Sequence[Permutation],
    order_cap: int = DEFAULT_ORDER_CAP,
) -> EnumeratedGroup:
    """Enumerate the group generated by *generators*.

    Elements are listed breadth-first from the identity; each new layer is
    sorted lexicographically on its image arrays, so indices are
    reproducible.  Raises :class:`CapExceeded` once more than *order_cap*
    elements appear.
    """
    if not generators:
        raise NotGenerating("at least one generator is required")
    degree = common_degree(generators)
    dtype = np.int16 if degree < 2**15 else np.int32
    gens = np.array([g.images for g in generators], dtype=np.intp)
    identity = np.arange(degree, dtype=dtype)

    seen: dict[bytes, int] = {identity.tobytes(): 0}
    layers: list[npt.NDArray[Any]] = [identity[None, :]]
    parents: list[IndexArray] = [np.array([-1], dtype=np.int64)]
    parent_gens: list[IndexArray] = [np.array([-1], dtype=np.int64)]
    layer_starts = [0]
    frontier = identity[None, :]
    frontier_idx = np.array([0], dtype=np.int64)
    ngen = len(generators)

    while frontier.shape[0]:
        # candidate[f, j] = frontier[f] * gens[j]: image i -> gens[j][frontier[f][i]]
        cand = gens[:, frontier.astype(np.intp)].transpose(1, 0, 2).reshape(-1, degree)
        par = np.repeat(frontier_idx, ngen)
        pgen = np.tile(np.arange(ngen, dtype=np.int64), frontier.shape[0])
        uniq, first = np.unique(cand.astype(dtype), axis=0, return_index=True)
        keep = [i for i, row in enumerate(uniq) if row.tobytes() not in seen]
        if not keep:
            break
        new_rows = uniq[keep]
        start = len(seen)
        if start + new_rows.shape[0] > order_cap:
            raise CapExceeded(
                f"group order exceeds order_cap={order_cap}",
                cap=order_cap,
                reached=start + new_rows.shape[0],
            )
        for offset, row in enumerate(new_rows):
            seen[row.tobytes()] = start + offset
        layer_starts.append(start)
        layers.append(new_rows)
        parents.append(par[first[keep]])
        parent_gens.append(pgen[first[keep]])
        frontier = new_rows
        frontier_idx = np.arange(start, start + new_rows.shape[0], dtype=np.int64)

    elements = np.vstack(layers)
    logger.debug("enumerated group of order %d on %d points", elements.shape[0], degree)
    return EnumeratedGroup(
        degree=degree,
        generators=generators,
        elements=elements,
        parent=np.concatenate(parents),
        parent_generator=np.concatenate(parent_gens),
        layer_starts=layer_starts,
    )


# ---------------------------------------------------------------------------
# Conjugacy classes
# ---------------------------------------------------------------------------


def _build_classes(group: EnumeratedGroup) -> tuple[list[ConjugacyClass], IndexArray]:
    n = group.order
    everything = np.arange(n)
    rows = [everything]
    cols = []
    for gen in group.generator_indices:
        cols.append(group.conjugate(everything, gen))
    src = np.concatenate(rows * len(cols)) if cols else everything
    dst = np.concatenate(cols) if cols else everything
    graph = coo_matrix((np.ones(src.size, dtype=np.int8), (src, dst)), shape=(n, n)).tocsr()
    _, labels = connected_components(graph, directed=True, connection="weak")

    by_label = np.argsort(labels, kind="stable")
    counts = np.bincount(labels)
    splits = np.split(by_label, np.cumsum(counts)[:-1])
    raw = sorted(splits, key=lambda m: (m.size, int(m[0])))

    class_of = np.empty(n, dtype=np.int64)
    classes: list[ConjugacyClass] = []
    for cid, members in enumerate(raw):
        members = np.sort(members).astype(np.int64)
        class_of[members] = cid
        rep = int(members[0])
        classes.append(
            ConjugacyClass(
                id=cid,
                representative=rep,
                members=members,
                order=group.element(rep).order(),
            )
        )
    return classes, class_of


def conjugacy_classes(group: EnumeratedGroup) -> list[ConjugacyClass]:
    """Classes sorted by ``(size, representative)``; identity class first."""
    return group.class_data()[0]


def class_of(group: EnumeratedGroup) -> IndexArray:
    return group.class_data()[1]


def inverse_classes(group: EnumeratedGroup) -> IndexArray:
    """``inv[c]`` is the class of the inverses of class ``c``."""
    classes, owner = group.class_data()
    reps = np.array([c.representative for c in classes], dtype=np.int64)
    return owner[group.inverse[reps]]


def element_order(group: EnumeratedGroup, g: int) -> int:
    """Least ``m ≥ 1`` with ``g^m = 1``."""
    return group.element(g).order()


# ---------------------------------------------------------------------------
# Element sets
# ---------------------------------------------------------------------------


def empty_set(group: EnumeratedGroup) -> ElementSet:
    return np.zeros(group.order, dtype=bool)


def element_set(group: EnumeratedGroup, indices: Iterable[int] | npt.ArrayLike) -> ElementSet:
    out = empty_set(group)
    idx = indices if isinstance(indices, np.ndarray) else list(indices)  # type: ignore[arg-type]
    out[np.asarray(idx, dtype=np.int64)] = True
    return out


def class_union(group: EnumeratedGroup, class_ids: Iterable[int]) -> ElementSet:
    owner = class_of(group)
    return np.isin(owner, np.fromiter(class_ids, dtype=np.int64))


def normal_set_classes(group: EnumeratedGroup, subset: ElementSet) -> IndexArray:
    """Class ids making up *subset*; raises if *subset* is not a union of classes."""
    classes, owner = group.class_data()
    hits = np.bincount(owner[subset], minlength=len(classes))
    sizes = np.array([c.size for c in classes])
    if np.any((hits != 0) & (hits != sizes)):
        raise InvariantViolation("element set is not a union of conjugacy classes")
    return np.flatnonzero(hits).astype(np.int64)


def _pair_products(
    group: EnumeratedGroup,
    left: IndexArray,
    right: IndexArray,
    mapper: ChunkMapper,
) -> list[IndexArray]:
    """All products ``l * r`` in left-major order, computed in chunks."""
    if left.size == 0 or right.size == 0:
        return []
    rows = max(1, _CHUNK_ROWS // max(right.size, 1))
    chunks = [left[i : i + rows] for i in range(0, left.size, rows)]

    def work(chunk: IndexArray) -> IndexArray:
        return group.multiply(chunk[:, None], right[None, :]).ravel()

    return mapper(work, chunks)


def set_product(
    group: EnumeratedGroup,
    a: ElementSet,
    b: ElementSet,
    *,
    mapper: ChunkMapper = serial_map,
) -> ElementSet:
    """``{xy : x ∈ A, y ∈ B}`` as a boolean element set."""
    out = empty_set(group)
    for prods in _pair_products(group, np.flatnonzero(a), np.flatnonzero(b), mapper):
        out[prods] = True
    return out


def class_products(
    group: EnumeratedGroup,
    class_ids: IndexArray,
    connection: IndexArray,
    *,
    mapper: ChunkMapper = serial_map,
) -> IndexArray:
    """Classes met by ``K · S`` for ``K`` in *class_ids* and normal ``S``.

    ``K · S`` is a union of classes and equals the union of the classes met
    by ``rep(K) · S``, so one representative per class suffices.
    """
    classes, owner = group.class_data()
    reps = np.array([classes[c].representative for c in class_ids], dtype=np.int64)
    hit = np.zeros(len(classes), dtype=bool)
    for prods in _pair_products(group, reps, connection, mapper):
        hit[owner[prods]] = True
    return np.flatnonzero(hit).astype(np.int64)


# ---------------------------------------------------------------------------
# Cayley-ball BFS
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CayleyBall:
    """Distances from the identity in ``Cay(G, S)`` with the BFS tree."""

    width: int
    dist: IndexArray
    parent: IndexArray
    step: IndexArray


def _products_with_origin(
    group: EnumeratedGroup,
    frontier: IndexArray,
    connection: IndexArray,
    mapper: ChunkMapper,
) -> tuple[IndexArray, IndexArray, IndexArray]:
    prods = _pair_products(group, frontier, connection, mapper)
    flat = np.concatenate(prods) if prods else np.empty(0, dtype=np.int64)
    origin = np.repeat(frontier, connection.size)
    steps = np.tile(connection, frontier.size)
    return flat, origin, steps


def cayley_ball(
    group: EnumeratedGroup,
    connection: ElementSet,
    *,
    mapper: ChunkMapper = serial_map,
) -> CayleyBall:
    """Element-level BFS from the identity, right-multiplying layers by *S*.

    The first product reaching an element (frontier order, then connection
    order) becomes its tree edge, so the tree does not depend on how the
    frontier was partitioned.
    """
    s_idx = np.flatnonzero(connection).astype(np.int64)
    if s_idx.size == 0:
        raise NotGenerating("connection set is empty")
    n = group.order
    dist = np.full(n, -1, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    step = np.full(n, -1, dtype=np.int64)
    dist[group.identity] = 0
    frontier = np.array([group.identity], dtype=np.int64)
    depth = 0
    while frontier.size:
        prods, origin, steps = _products_with_origin(group, frontier, s_idx, mapper)
        fresh = dist[prods] < 0
        prods, origin, steps = prods[fresh], origin[fresh], steps[fresh]
        if prods.size == 0:
            break
        depth += 1
        new, first = np.unique(prods, return_index=True)
        dist[new] = depth
        parent[new] = origin[first]
        step[new] = steps[first]
        frontier = new
    if np.any(dist < 0):
        raise NotGenerating(
            "connection set does not generate the group",
            reached=int(np.count_nonzero(dist >= 0)),
            order=n,
        )
    return CayleyBall(width=depth, dist=dist, parent=parent, step=step)


def cayley_eccentricity(
    group: EnumeratedGroup,
    connection: ElementSet,
    *,
    mapper: ChunkMapper = serial_map,
) -> tuple[int, IndexArray]:
    """``(width, dist)`` where ``dist[g]`` is the least ``m`` with ``g ∈ S^m``."""
    ball = cayley_ball(group, connection, mapper=mapper)
    return ball.width, ball.dist


def class_eccentricity(
    group: EnumeratedGroup,
    connection: ElementSet,
    *,
    mapper: ChunkMapper = serial_map,
) -> tuple[int, IndexArray]:
    """Class-level BFS for a conjugation-invariant connection set.

    Returns ``(width, class_dist)``; the element distance of ``g`` is
    ``class_dist[class_of(g)]``.
    """
    normal_set_classes(group, connection)
    s_idx = np.flatnonzero(connection).astype(np.int64)
    if s_idx.size == 0:
        raise NotGenerating("connection set is empty")
    classes, owner = group.class_data()
    dist = np.full(len(classes), -1, dtype=np.int64)
    start = int(owner[group.identity])
    dist[start] = 0
    frontier = np.array([start], dtype=np.int64)
    depth = 0
    while frontier.size:
        met = class_products(group, frontier, s_idx, mapper=mapper)
        new = met[dist[met] < 0]
        if new.size == 0:
            break
        depth += 1
        dist[new] = depth
        frontier = new
    if np.any(dist < 0):
        reached = int(sum(classes[c].size for c in np.flatnonzero(dist >= 0)))
        raise NotGenerating(
            "connection set does not generate the group",
            reached=reached,
            order=group.order,
        )
    return depth, dist
