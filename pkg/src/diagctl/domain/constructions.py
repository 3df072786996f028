"""Concrete simple groups as permutation groups, with their automorphisms.

Builds ``A_n``, ``S_n``, ``PSL_2(q)``, ``PGL_2(q)`` and ``PSL_3(q)`` (linear
groups acting on projective points), realizes outer automorphisms either as
normalizing domain permutations or by generator images, and computes the
eigenspace codimension ``ν`` of matrices over F_q.
"""

from __future__ import annotations

import logging
import math
import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from diagctl.domain.errors import (
    CapExceeded,
    DivisionByZero,
    InvariantViolation,
    NotAnAutomorphism,
    NotInGroup,
    NotNormalizing,
    OrderMismatch,
    ParseError,
)
from diagctl.domain.fields import (
    GaloisField,
    MatrixFq,
    ProjectiveSpace,
    companion,
    diagonal,
    elementary,
    field as galois_field,
    least_irreducible,
    prime_power,
)
from diagctl.domain.groups import (
    DEFAULT_ORDER_CAP,
    EnumeratedGroup,
    IndexArray,
    conjugacy_classes,
    enumerate_group,
)
from diagctl.domain.permutations import Permutation, load_generator_file
from diagctl.domain.types import Family, RealizationKind

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Automorphism realizations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AutRealization:
    """An automorphism of an enumerated group.

    ``generator_images[j]`` is the element index of the image of generator
    ``j``.  Permutation realizations also keep the normalizing permutation
    ``permutation`` (the automorphism is ``g ↦ π^{-1} g π``).
    """

    label: str
    kind: RealizationKind
    generator_images: tuple[int, ...]
    permutation: Permutation | None = None

    def image(self, group: EnumeratedGroup, g: int) -> int:
        """Image of element index *g*."""
        if self.permutation is not None:
            return group.index_of(group.element(g).conjugate_by(self.permutation))
        result = group.identity
        for j in group.word(g):
            result = int(group.multiply(result, self.generator_images[j]))
        return result

    def element_map(self, group: EnumeratedGroup) -> IndexArray:
        """Images of every element, verified to be an automorphism."""
        return group.extend_homomorphism(self.generator_images)


def realize_permutation(
    group: EnumeratedGroup,
    perm: Permutation,
    *,
    label: str,
    kind: RealizationKind,
) -> AutRealization:
    """Wrap a domain permutation normalizing *group*; raise :class:`NotNormalizing`."""
    if perm.degree != group.degree:
        raise NotNormalizing(
            f"realization {label} has degree {perm.degree}, group has {group.degree}",
            label=label,
        )
    images = []
    for gen in group.generators:
        try:
            images.append(group.index_of(gen.conjugate_by(perm)))
        except NotInGroup as exc:
            raise NotNormalizing(
                f"conjugation by {perm} does not preserve the group",
                label=label,
                generator=gen.to_cycles(),
            ) from exc
    return AutRealization(label=label, kind=kind, generator_images=tuple(images), permutation=perm)


def realize_generator_images(
    group: EnumeratedGroup,
    images: Sequence[Permutation],
    *,
    label: str,
    kind: RealizationKind,
) -> AutRealization:
    """Realization given by generator images; verified by extending it."""
    try:
        indices = tuple(group.index_of(img) for img in images)
    except NotInGroup as exc:
        raise NotAnAutomorphism(f"{label}: generator image outside the group", label=label) from exc
    realization = AutRealization(label=label, kind=kind, generator_images=indices)
    realization.element_map(group)
    return realization


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Construction:
    """A built group with its outer automorphism realizations."""

    label: str
    family: Family
    params: Mapping[str, int]
    group: EnumeratedGroup
    realizations: tuple[AutRealization, ...] = ()
    matrices: tuple[MatrixFq, ...] = ()
    exceptional_model: Construction | None = None
    points: tuple[tuple[int, ...], ...] = field(default=())


def expected_order(family: Family, param: int) -> int | None:
    """Order formula for the constructed families."""
    match family:
        case Family.ALTERNATING:
            return math.factorial(param) // 2
        case Family.SYMMETRIC:
            return math.factorial(param)
        case Family.PSL2:
            return param * (param**2 - 1) // math.gcd(2, param - 1)
        case Family.PGL2:
            return param * (param**2 - 1)
        case Family.PSL3:
            q = param
            return q**3 * (q**3 - 1) * (q**2 - 1) // math.gcd(3, q - 1)
        case _:
            return None


def _checked_enumeration(
    generators: Sequence[Permutation], family: Family, param: int, order_cap: int
) -> EnumeratedGroup:
    expected = expected_order(family, param)
    if expected is not None and expected > order_cap:
        raise CapExceeded(
            f"{family.value}({param}) has order {expected} > order_cap={order_cap}",
            cap=order_cap,
            expected=expected,
        )
    group = enumerate_group(generators, order_cap)
    if expected is not None and group.order != expected:
        raise OrderMismatch(
            f"enumerated order {group.order} differs from formula {expected}",
            expected=expected,
            computed=group.order,
        )
    return group


def _cycle(points: Sequence[int], degree: int) -> Permutation:
    text = "(" + " ".join(str(p) for p in points) + ")"
    return Permutation.from_cycles(text, degree)


def make_alternating(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> Construction:
    """``A_n`` on ``n`` points; the outer automorphism is conjugation by ``(0 1)``."""
    if n < 3:
        raise ParseError(f"A{n}: alternating groups need n ≥ 3", n=n)
    gens = [_cycle([0, 1, 2], n)]
    if n > 3:
        gens.append(_cycle(range(n) if n % 2 else range(1, n), n))
    group = _checked_enumeration(gens, Family.ALTERNATING, n, order_cap)
    transposition = Permutation.from_cycles("(0 1)", n)
    realizations = (
        realize_permutation(group, transposition, label="(0 1)", kind=RealizationKind.SYMMETRIC),
    )
    model = make_psl2(9, order_cap) if n == 6 else None
    return Construction(
        label=f"A{n}",
        family=Family.ALTERNATING,
        params={"n": n},
        group=group,
        realizations=realizations,
        exceptional_model=model,
    )


def make_symmetric(n: int, order_cap: int = DEFAULT_ORDER_CAP) -> Construction:
    if n < 2:
        raise ParseError(f"S{n}: symmetric groups need n ≥ 2", n=n)
    gens = [Permutation.from_cycles("(0 1)", n), _cycle(range(n), n)]
    group = _checked_enumeration(gens, Family.SYMMETRIC, n, order_cap)
    return Construction(label=f"S{n}", family=Family.SYMMETRIC, params={"n": n}, group=group)


def _matrix_group(
    fq: GaloisField, n: int, matrices: Sequence[MatrixFq]
) -> tuple[ProjectiveSpace, list[Permutation]]:
    space = ProjectiveSpace(fq, n)
    return space, [Permutation.from_images(space.permutation_of(m)) for m in matrices]


def _sl2_generators(fq: GaloisField) -> list[MatrixFq]:
    gens = [elementary(fq, 2, 0, 1, b) for b in fq.basis()]
    gens.append(MatrixFq.of(fq, [[0, int(fq.neg[1])], [1, 0]]))
    return gens


def _sl3_generators(fq: GaloisField) -> list[MatrixFq]:
    gens = [elementary(fq, 3, 0, 1, b) for b in fq.basis()]
    gens.extend(elementary(fq, 3, 1, 2, b) for b in fq.basis())
    gens.append(MatrixFq.of(fq, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]))
    return gens


def _linear_realizations(
    group: EnumeratedGroup,
    space: ProjectiveSpace,
    fq: GaloisField,
    *,
    diagonal_matrix: MatrixFq | None,
) -> list[AutRealization]:
    out: list[AutRealization] = []
    if diagonal_matrix is not None:
        perm = Permutation.from_images(space.permutation_of(diagonal_matrix))
        out.append(
            realize_permutation(group, perm, label="diagonal", kind=RealizationKind.DIAGONAL)
        )
    if fq.e > 1:
        perm = Permutation.from_images(space.field_permutation(fq.frobenius))
        out.append(realize_permutation(group, perm, label="frobenius", kind=RealizationKind.FIELD))
    return out


def make_psl2(q: int, order_cap: int = DEFAULT_ORDER_CAP) -> Construction:
    """``PSL_2(q)`` on the ``q + 1`` points of the projective line."""
    prime_power(q)
    fq = galois_field(q)
    matrices = _sl2_generators(fq)
    space, gens = _matrix_group(fq, 2, matrices)
    group = _checked_enumeration(gens, Family.PSL2, q, order_cap)
    diag = diagonal(fq, [fq.primitive, 1]) if q % 2 else None
    return Construction(
        label=f"PSL2({q})",
        family=Family.PSL2,
        params={"q": q},
        group=group,
        realizations=tuple(_linear_realizations(group, space, fq, diagonal_matrix=diag)),
        matrices=tuple(matrices),
        points=tuple(space.points),
    )


def make_pgl2(q: int, order_cap: int = DEFAULT_ORDER_CAP) -> Construction:
    prime_power(q)
    fq = galois_field(q)
    matrices = [*_sl2_generators(fq), diagonal(fq, [fq.primitive, 1])]
    space, gens = _matrix_group(fq, 2, matrices)
    group = _checked_enumeration(gens, Family.PGL2, q, order_cap)
    return Construction(
        label=f"PGL2({q})",
        family=Family.PGL2,
        params={"q": q},
        group=group,
        realizations=tuple(_linear_realizations(group, space, fq, diagonal_matrix=None)),
        matrices=tuple(matrices),
        points=tuple(space.points),
    )


def make_psl3(q: int, order_cap: int = DEFAULT_ORDER_CAP) -> Construction:
    """``PSL_3(q)`` on the ``q² + q + 1`` projective points.

    The graph automorphism ``x ↦ x^{-T}`` swaps points and lines, so it is
    realized by generator images rather than as a point permutation.
    """
    prime_power(q)
    fq = galois_field(q)
    matrices = _sl3_generators(fq)
    space, gens = _matrix_group(fq, 3, matrices)
    group = _checked_enumeration(gens, Family.PSL3, q, order_cap)
    diag = diagonal(fq, [fq.primitive, 1, 1]) if math.gcd(3, q - 1) > 1 else None
    realizations = _linear_realizations(group, space, fq, diagonal_matrix=diag)
    graph_images = [
        Permutation.from_images(space.permutation_of(m.inverse_transpose())) for m in matrices
    ]
    realizations.append(
        realize_generator_images(
            group, graph_images, label="inverse-transpose", kind=RealizationKind.GRAPH
        )
    )
    return Construction(
        label=f"PSL3({q})",
        family=Family.PSL3,
        params={"q": q},
        group=group,
        realizations=tuple(realizations),
        matrices=tuple(matrices),
        points=tuple(space.points),
    )


def load_group_file(path: Path, order_cap: int = DEFAULT_ORDER_CAP) -> Construction:
    _, gens = load_generator_file(path)
    group = enumerate_group(gens, order_cap)
    return Construction(label=f"file:{path}", family=Family.FILE, params={}, group=group)


# ---------------------------------------------------------------------------
# Group spec grammar
# ---------------------------------------------------------------------------

_SPEC_RE = re.compile(
    r"^(?:(?P<alt>A)(?P<an>\d+)|(?P<sym>S)(?P<sn>\d+)|(?P<lin>PSL2|PGL2|PSL3)\((?P<q>\d+)\))$"
)
_FAMILY_BY_TOKEN = {
    "A": Family.ALTERNATING,
    "S": Family.SYMMETRIC,
    "PSL2": Family.PSL2,
    "PGL2": Family.PGL2,
    "PSL3": Family.PSL3,
}


@dataclass(frozen=True)
class GroupSpec:
    """Parsed group spec: ``A5``, ``PSL2(7)``, ``file:gens.txt`` ..."""

    family: Family
    param: int = 0
    path: Path | None = None

    @property
    def label(self) -> str:
        match self.family:
            case Family.FILE:
                return f"file:{self.path}"
            case Family.ALTERNATING:
                return f"A{self.param}"
            case Family.SYMMETRIC:
                return f"S{self.param}"
            case _:
                return f"{self.family.value}({self.param})"


def parse_group_spec(text: str) -> GroupSpec:
    """Parse the group grammar ``A<n> | S<n> | PSL2(<q>) | PGL2(<q>) | PSL3(<q>) | file:<path>``."""
    raw = text.strip()
    if raw.startswith("file:"):
        path = raw[5:].strip()
        if not path:
            raise ParseError("file: spec needs a path", spec=text)
        return GroupSpec(Family.FILE, path=Path(path))
    m = _SPEC_RE.match(raw.replace(" ", ""))
    if m is None:
        raise ParseError(f"unrecognized group spec {text!r}", spec=text)
    if m["alt"]:
        return GroupSpec(Family.ALTERNATING, int(m["an"]))
    if m["sym"]:
        return GroupSpec(Family.SYMMETRIC, int(m["sn"]))
    return GroupSpec(_FAMILY_BY_TOKEN[m["lin"]], int(m["q"]))


def build_construction(spec: GroupSpec, order_cap: int = DEFAULT_ORDER_CAP) -> Construction:
    match spec.family:
        case Family.ALTERNATING:
            return make_alternating(spec.param, order_cap)
        case Family.SYMMETRIC:
            return make_symmetric(spec.param, order_cap)
        case Family.PSL2:
            return make_psl2(spec.param, order_cap)
        case Family.PGL2:
            return make_pgl2(spec.param, order_cap)
        case Family.PSL3:
            return make_psl3(spec.param, order_cap)
        case Family.FILE:
            assert spec.path is not None
            return load_group_file(spec.path, order_cap)


@dataclass(frozen=True)
class AutSelector:
    """``inn``, ``aut`` or ``file:<path>`` of normalizing permutations."""

    kind: str
    path: Path | None = None

    def __str__(self) -> str:
        return f"file:{self.path}" if self.kind == "file" else self.kind


def parse_aut_selector(text: str) -> AutSelector:
    raw = text.strip()
    if raw in {"inn", "aut"}:
        return AutSelector(raw)
    if raw.startswith("file:") and raw[5:].strip():
        return AutSelector("file", Path(raw[5:].strip()))
    raise ParseError(f"unrecognized automorphism selector {text!r}", selector=text)


def resolve_automorphisms(
    construction: Construction, selector: AutSelector
) -> tuple[Construction, tuple[AutRealization, ...]]:
    """Pick the construction to compute in and the realizations of ``X``.

    ``aut`` on ``A_6`` switches to the ``PSL_2(9)`` model, where all of
    ``Aut(A_6)`` acts by point permutations.
    """
    match selector.kind:
        case "inn":
            return construction, ()
        case "aut":
            if construction.exceptional_model is not None:
                model = construction.exceptional_model
                return model, model.realizations
            return construction, construction.realizations
        case _:
            assert selector.path is not None
            degree, perms = load_generator_file(selector.path)
            group = construction.group
            if degree != group.degree:
                raise NotNormalizing(
                    f"automorphism file has degree {degree}, group has {group.degree}",
                    path=str(selector.path),
                )
            realizations = tuple(
                realize_permutation(group, p, label=p.to_cycles(), kind=RealizationKind.EXTERNAL)
                for p in perms
            )
            return construction, realizations


# ---------------------------------------------------------------------------
# ν: eigenspace codimension
# ---------------------------------------------------------------------------


def eigenspace_dimension(x: MatrixFq, lam: int) -> int:
    """``dim ker(λx − I)``."""
    return x.minus_identity_times(lam).kernel_dimension()


def nu(x: MatrixFq, q: int | None = None) -> int:
    """``n − max_{λ ∈ F_q^*} dim ker(λx − I)``."""
    if q is not None and q != x.fq.q:
        raise InvariantViolation(f"matrix is over F_{x.fq.q}, not F_{q}", q=q)
    if x.det() == 0:
        raise InvariantViolation("ν is defined for invertible matrices only")
    best = max(eigenspace_dimension(x, lam) for lam in x.fq.nonzero())
    return x.n - best


def transvection_matrix(n: int, q: int) -> MatrixFq:
    """``I + E_{1n}``: fixes a hyperplane pointwise."""
    return elementary(galois_field(q), n, 0, n - 1, 1)


def to_special(x: MatrixFq) -> MatrixFq | None:
    """A scalar multiple of *x* with determinant 1, if one exists."""
    fq = x.fq
    d = x.det()
    for lam in fq.nonzero():
        if int(fq.mul[fq.power(lam, x.n), d]) == 1:
            return x.scaled(lam)
    return None


def singer_matrix(n: int, q: int) -> MatrixFq:
    """Companion matrix of the least irreducible degree-*n* polynomial over F_q.

    It is rescaled into ``SL_n(q)`` when a scalar allows; otherwise the GL
    representative is returned (ν is unchanged by scalars).
    """
    if n < 2:
        raise InvariantViolation("Singer elements need n ≥ 2", n=n)
    fq = galois_field(q)
    base = companion(fq, least_irreducible(fq, n))
    special = to_special(base)
    if special is None:
        logger.debug("singer matrix for n=%d q=%d kept in GL", n, q)
        return base
    return special


def nu_ratio_bound(nu_t: int, nu_s: int) -> Fraction:
    """Lower bound ``ν(T)/ν(S)`` on the X-conjugacy width."""
    if nu_s == 0:
        raise DivisionByZero("ν(S) must be positive", nu_t=nu_t, nu_s=nu_s)
    if nu_t < 0 or nu_s < 0:
        raise InvariantViolation("ν values are non-negative", nu_t=nu_t, nu_s=nu_s)
    return Fraction(nu_t, nu_s)


def matrix_of_element(construction: Construction, g: int) -> MatrixFq:
    """A matrix preimage of element *g* of a linear construction."""
    if not construction.matrices:
        raise InvariantViolation(f"{construction.label} has no matrix model")
    group = construction.group
    fq = construction.matrices[0].fq
    result = MatrixFq.identity(fq, construction.matrices[0].n)
    # Point permutations compose as right actions, matrices as left ones.
    for j in group.word(g):
        result = construction.matrices[j] @ result
    return result


def element_nus(construction: Construction) -> np.ndarray:
    """ν of a matrix preimage of every conjugacy class representative."""
    classes = conjugacy_classes(construction.group)
    return np.array(
        [nu(matrix_of_element(construction, c.representative)) for c in classes], dtype=np.int64
    )
