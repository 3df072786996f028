"""Typed payload contracts for service results.

Each service validates its payload against one of these models before it
leaves the service layer, so shape regressions fail fast in tests.  The
same models are published as JSON schemas by ``diagctl schema``.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict

from diagctl.domain.types import CheckStatus


def dump_validated[T: BaseModel](model_cls: type[T], data: dict[str, Any]) -> dict[str, Any]:
    """Validate *data* against *model_cls* and return a normalized payload dict."""
    model = model_cls.model_validate(data)
    return model.model_dump(mode="json")


# --- groups ---


class AutomorphismItem(BaseModel):
    label: str
    kind: str


class ClassRow(BaseModel):
    """One conjugacy class."""

    id: int
    size: int
    order: int
    rep_cycles: str
    inverse: int
    real: bool


class GroupInfoData(BaseModel):
    """Payload contract for ``GroupService.info``."""

    group: str
    order: int
    degree: int
    generators: list[str]
    class_count: int
    class_sizes: list[int]
    rep_orders: list[int]
    real_classes: list[int]
    exponent: int
    automorphisms: list[AutomorphismItem]


class ClassesData(BaseModel):
    """Payload contract for ``GroupService.classes``."""

    group: str
    order: int
    count: int
    items: list[ClassRow]


# --- widths ---


class WidthRow(BaseModel):
    class_id: int
    rep_cycles: str
    size: int
    order: int
    c: int
    c_i: int
    c_x: int
    cn: int | None = None


class WidthMaxima(BaseModel):
    """Group maxima; ``c_a`` repeats ``c_x`` when ``X`` is the full automorphism group."""

    model_config = ConfigDict(extra="forbid")

    c: int
    c_i: int
    c_x: int
    c_a: int | None = None
    cn: int | None = None


class WidthsData(BaseModel):
    """Payload contract for ``WidthService.widths``."""

    group: str
    model: str
    order: int
    x: str
    classes: list[WidthRow]
    maxima: WidthMaxima


class CoveringRow(BaseModel):
    class_id: int
    rep_cycles: str
    size: int
    cn: int


class CoveringData(BaseModel):
    """Payload contract for ``WidthService.covering``."""

    group: str
    order: int
    classes: list[CoveringRow]
    cn: int


class StronglyRealData(BaseModel):
    group: str
    order: int
    involution_classes: list[int]
    strongly_real: bool


class CyclesRow(BaseModel):
    n: int
    l: int  # noqa: E741
    holds: bool


class CyclesData(BaseModel):
    count: int
    items: list[CyclesRow]


class InvolutionRow(BaseModel):
    class_id: int
    u: str
    x: str
    product_order: int


class InvolutionData(BaseModel):
    group: str
    count: int
    items: list[InvolutionRow]


# --- characters ---


class TableClasses(BaseModel):
    sizes: list[int]
    rep_orders: list[int]


class CharacterTableData(BaseModel):
    """Payload contract for ``CharacterService.chartable``."""

    group: str
    order: int
    source: str
    prime: int | None = None
    degrees: list[int]
    classes: TableClasses
    values: list[list[list[float]]]
    row_residual: float
    column_residual: float
    path: str | None = None


class CountRow(BaseModel):
    z_class: int
    frobenius: float
    rounded: int
    residual: float
    bruteforce: int | None = None
    match: bool | None = None


class CountData(BaseModel):
    """Payload contract for ``CharacterService.count``."""

    group: str
    class_ids: list[int]
    count: int
    items: list[CountRow]


class CorollaryData(BaseModel):
    group: str
    c_class: int
    d_class: int
    k: int
    magnitude: float
    implied: bool


# --- diagonal ---


class OrbitalItem(BaseModel):
    suborbit_ids: list[int]
    representative: list[str]
    suborbit_size: int
    valency: int
    diameter: int
    paired: bool


class OrbdiamData(BaseModel):
    """Payload contract for ``DiagonalService.orbdiam``."""

    group: str
    model: str
    k: int
    variant: str
    omega_size: int
    rank: int
    orbitals: list[OrbitalItem]
    orbdiam: int
    strict_lower_bound: bool | None = None


class CertificateData(BaseModel):
    lower: str
    upper: int
    upper_quadratic: int | None = None
    c_x_t: int
    c_i: int
    holds: bool


class Gamma0Data(BaseModel):
    """Payload contract for ``DiagonalService.gamma0``."""

    group: str
    model: str
    k: int
    variant: str
    t: str
    omega_size: int
    valency: int
    diameter: int
    certificate: CertificateData
    dot: str | None = None


class PathData(BaseModel):
    """Payload contract for ``DiagonalService.path``."""

    group: str
    k: int
    variant: str
    t: str
    target: list[str]
    length: int
    steps: list[list[str]]


# --- linear ---


class NuClassRow(BaseModel):
    class_id: int
    rep_cycles: str
    nu: int
    c_a: int
    bound: str
    holds: bool


class NuData(BaseModel):
    """Payload contract for ``LinearService.nu``."""

    n: int
    q: int
    transvection: int
    singer: int
    ratio: str
    c_a: int | None = None
    bound_holds: bool | None = None
    classes: list[NuClassRow] = []


# --- verification ---


class CheckRecord(BaseModel):
    """One verification check: expectation, computed value and outcome."""

    id: str
    source: str
    expected: Any
    computed: Any = None
    status: CheckStatus
    note: str | None = None


class VerifyData(BaseModel):
    """Payload contract for ``VerifyService.verify``."""

    suite: str
    checks: list[CheckRecord]
    passed: int
    failed: int
    skipped: int
    incomplete: bool


PAYLOAD_CONTRACTS: dict[str, type[BaseModel]] = {
    "info": GroupInfoData,
    "classes": ClassesData,
    "widths": WidthsData,
    "covering": CoveringData,
    "strongly_real": StronglyRealData,
    "cycles": CyclesData,
    "involution": InvolutionData,
    "chartable": CharacterTableData,
    "count": CountData,
    "corollary": CorollaryData,
    "orbdiam": OrbdiamData,
    "gamma0": Gamma0Data,
    "path": PathData,
    "nu": NuData,
    "verify_paper": VerifyData,
}
