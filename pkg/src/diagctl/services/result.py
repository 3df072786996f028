"""The envelope every service method returns.

Renderers and the JSON/CSV formatters only ever see :class:`ServiceResult`;
domain failures reach them as a :class:`ServiceError` built from the
raised :class:`~diagctl.domain.errors.DiagError`.
"""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from diagctl.domain.errors import DiagError

_JSON_SCALARS = (str, int, float, bool, type(None), list, dict)


class ServiceError(BaseModel):
    """Machine-readable failure: an error ``code`` plus structured ``detail``."""

    model_config = ConfigDict(frozen=True)

    code: str
    message: str
    detail: dict[str, Any] = Field(default_factory=dict)

    @classmethod
    def from_exception(cls, exc: DiagError) -> ServiceError:
        """Carry *exc* over; detail values JSON cannot hold become strings."""
        detail = {
            key: value if isinstance(value, _JSON_SCALARS) else str(value)
            for key, value in exc.detail.items()
        }
        return cls(code=exc.code, message=exc.message, detail=detail)


class ServiceResult(BaseModel):
    """Outcome of one service operation.

    ``data`` holds the operation payload; failed verification runs keep
    their check list there as well. ``meta`` only carries the telemetry
    span tree, and only when running verbose.
    """

    model_config = ConfigDict(frozen=True)

    ok: bool
    op: str
    data: dict[str, Any] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)
    error: ServiceError | None = None
    meta: dict[str, Any] | None = None

    @classmethod
    def failure(
        cls,
        op: str,
        exc: DiagError,
        *,
        data: dict[str, Any] | None = None,
        warnings: list[str] | None = None,
    ) -> ServiceResult:
        return cls(
            ok=False,
            op=op,
            data=data or {},
            warnings=warnings or [],
            error=ServiceError.from_exception(exc),
        )

    def with_meta(self, key: str, value: Any) -> ServiceResult:
        """Copy with ``meta[key]`` set, keeping any other entries."""
        return self.model_copy(update={"meta": {**(self.meta or {}), key: value}})
