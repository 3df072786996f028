"""Domain exception hierarchy.

Every failure a computation can report derives from :class:`DiagError` and
carries a stable ``code`` plus a ``detail`` dict.  Services translate these
into ``ServiceError`` payloads; the CLI maps codes to exit statuses.
"""

from __future__ import annotations

from typing import Any, ClassVar


class DiagError(Exception):
    """Base class for all diagctl domain errors."""

    code: ClassVar[str] = "DIAG_ERROR"

    def __init__(self, message: str, **detail: Any) -> None:
        super().__init__(message)
        self.message = message
        self.detail: dict[str, Any] = detail


class CapExceeded(DiagError):
    code = "CAP_EXCEEDED"


class DegreeMismatch(DiagError):
    code = "DEGREE_MISMATCH"


class ParseError(DiagError):
    code = "PARSE_ERROR"


class NotGenerating(DiagError):
    code = "NOT_GENERATING"


class NotInGroup(DiagError):
    code = "NOT_IN_GROUP"


class NotNormalizing(DiagError):
    code = "NOT_NORMALIZING"


class NotAnAutomorphism(DiagError):
    code = "NOT_AN_AUTOMORPHISM"


class OrderMismatch(DiagError):
    code = "ORDER_MISMATCH"


class NotPrimePower(DiagError):
    code = "NOT_PRIME_POWER"


class IdentityElement(DiagError):
    code = "IDENTITY_ELEMENT"


class NotFound(DiagError):
    code = "NOT_FOUND"


class InvalidInvolution(DiagError):
    code = "INVALID_INVOLUTION"


class LiftFailure(DiagError):
    code = "LIFT_FAILURE"


class ResidualTooLarge(DiagError):
    code = "RESIDUAL_TOO_LARGE"


class SoundnessViolation(DiagError):
    code = "SOUNDNESS_VIOLATION"


class DivisionByZero(DiagError):
    code = "DIVISION_BY_ZERO"


class TableMismatch(DiagError):
    code = "TABLE_MISMATCH"


class NonTransitiveCoordinates(DiagError):
    code = "NON_TRANSITIVE_COORDINATES"


class DiagonalPair(DiagError):
    code = "DIAGONAL_PAIR"


class Disconnected(DiagError):
    code = "DISCONNECTED"


class BoundViolation(DiagError):
    code = "BOUND_VIOLATION"


class FactorizationUnavailable(DiagError):
    code = "FACTORIZATION_UNAVAILABLE"


class InvariantViolation(DiagError):
    code = "INVARIANT_VIOLATION"


class DeadlineExceeded(DiagError):
    code = "DEADLINE_EXCEEDED"
