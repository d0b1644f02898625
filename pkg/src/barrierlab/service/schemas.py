"""Pydantic request/response models for the HTTP service.

Row models mirror the CLI table schemas field for field, so JSON responses
diff cleanly against CLI output.  eps travels as exact NUM/DEN text.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

from ..arith import parse_eps


def _validate_eps_text(value: str) -> str:
    parse_eps(value)  # raises ValueError on anything but NUM/DEN
    return value


class Meta(BaseModel):
    command: str
    eps: str | None = None
    range: str | None = None
    version: str


class BarrierRow(BaseModel):
    n: int
    is_barrier: bool
    witness: int | None = None
    method: str


class BarrierScanRequest(BaseModel):
    eps: str = Field(description="exact weight as NUM/DEN, e.g. 1/2")
    lo: int = Field(1, ge=1)
    hi: int = Field(..., ge=1, le=10_000_000)
    threads: int = Field(1, ge=1, le=16)

    _eps = field_validator("eps")(_validate_eps_text)


class BarrierScanResponse(BaseModel):
    meta: Meta
    rows: list[BarrierRow]


class CheckRequest(BaseModel):
    eps: str
    n: int = Field(..., ge=1, le=2_000_000)
    method: str = Field("naive", pattern="^(naive|windowed)$")

    _eps = field_validator("eps")(_validate_eps_text)


class BoundRequest(BaseModel):
    eps: str

    _eps = field_validator("eps")(_validate_eps_text)


class BoundResponse(BaseModel):
    eps: str
    t: int
    bound: int


class FamilyRequest(BaseModel):
    eps: str
    s: int = Field(..., ge=1)
    k: int = Field(..., ge=1)
    prime_indices: list[int]
    exponents: list[int]

    _eps = field_validator("eps")(_validate_eps_text)


class FamilyResponse(BaseModel):
    n: int
    witness: int


class DensityRequest(BaseModel):
    eps: str
    r_max: int = Field(..., ge=1, le=8)
    t: int | None = Field(None, ge=1)
    threads: int = Field(1, ge=1, le=16)

    _eps = field_validator("eps")(_validate_eps_text)


class DensityRowModel(BaseModel):
    r: int
    t: int
    count: int
    interval_len: int
    ratio: str


class DensityResponse(BaseModel):
    meta: Meta
    rows: list[DensityRowModel]


class GapScanRequest(BaseModel):
    limit: int = Field(..., ge=2, le=2_000_000)


class GapRowModel(BaseModel):
    n: int
    gap: int
    argmax_m: int
    lemma_bound: int


class GapScanResponse(BaseModel):
    meta: Meta
    rows: list[GapRowModel]


class ClassifyRequest(BaseModel):
    n: int = Field(..., ge=3, le=2_000_000)


class ClassifyResponse(BaseModel):
    n: int
    s: int


class SubseqRequest(BaseModel):
    s: int = Field(..., ge=1, le=100)
    count: int = Field(..., ge=1, le=10_000)


class SubseqResponse(BaseModel):
    s: int
    values: list[int]


class VerifyRequest(BaseModel):
    suites: list[str] = Field(default_factory=lambda: ["golden"])
    eps: str | None = None
    limit: int | None = Field(None, ge=1)

    @field_validator("eps")
    @classmethod
    def _eps(cls, value: str | None) -> str | None:
        if value is not None:
            parse_eps(value)
        return value


class CheckRowModel(BaseModel):
    suite: str
    check: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[CheckRowModel]


class HealthResponse(BaseModel):
    status: str
    version: str
