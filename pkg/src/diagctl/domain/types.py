"""Classification enums shared across the domain and service layers."""

from __future__ import annotations

from enum import StrEnum


class FusionSpec(StrEnum):
    """How a conjugacy class is fused into a connection set.

    ``T`` is the plain class ``t^T``; ``INVERSE`` adds the inverse class
    (``t^{±T}``); ``AUTOMORPHISM`` closes under the configured automorphisms
    and inversion (``t^{±X}``).
    """

    CLASS = "T"
    INVERSE = "±T"
    AUTOMORPHISM = "±X"


class Variant(StrEnum):
    """Point-stabilizer shapes for a simple diagonal action T^k.X."""

    TK = "Tk"
    TKSK = "TkSk"
    DKT = "DkT"
    CUSTOM = "custom"


class RealizationKind(StrEnum):
    """How an automorphism of T is presented."""

    INNER = "inner"
    DIAGONAL = "diagonal"
    FIELD = "field"
    GRAPH = "graph"
    SYMMETRIC = "symmetric"
    EXTERNAL = "external"


class Family(StrEnum):
    """Group families understood by the group-spec grammar."""

    ALTERNATING = "A"
    SYMMETRIC = "S"
    PSL2 = "PSL2"
    PGL2 = "PGL2"
    PSL3 = "PSL3"
    FILE = "file"


class CheckStatus(StrEnum):
    """Outcome of one verification check."""

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class VerifySuite(StrEnum):
    """Groups of reproducibility checks run by ``verify-paper``."""

    WIDTHS = "widths"
    COVERING = "covering"
    AUT = "aut"
    STRONGLY_REAL = "strongly-real"
    CYCLES = "cycles"
    CHARACTERS = "characters"
    NU = "nu"
    INVOLUTIONS = "involutions"
    DIAGONAL = "diagonal"
