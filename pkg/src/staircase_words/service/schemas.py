"""Pydantic request/response models for the HTTP service."""
from __future__ import annotations

from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

Coefficient = Union[int, str]


class ConfigEcho(BaseModel):
    """Numeric configuration a response was produced under."""

    precision: int = 60
    series_order: int = 120
    tolerance: str = "1e-20"
    oracle_budget: int = 10_000_000


class HealthResponse(BaseModel):
    status: str
    version: str


class CountResponse(BaseModel):
    family: str
    k: int
    n: int
    method: str
    count: Optional[int] = None
    refined: Optional[dict[str, int]] = None
    config: ConfigEcho


class TableResponse(BaseModel):
    k: int
    n_max: int
    rows: dict[str, list[int]]
    config: ConfigEcho


class GFPayload(BaseModel):
    numerator: list[Coefficient]
    denominator: list[Coefficient]
    string: str


class PrintedCheck(BaseModel):
    status: str
    printed: GFPayload
    corrected: Optional[GFPayload] = None
    note: str = ""


class GFResponse(BaseModel):
    family: str
    k: int
    gf: GFPayload
    printed_check: Optional[PrintedCheck] = None
    config: ConfigEcho


class RecurrenceResponse(BaseModel):
    family: str
    k: int
    order: int
    coefficients: list[Coefficient]
    initial_terms: list[int]
    terms_used: int
    config: ConfigEcho


class ReportModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    subject: str
    params: dict[str, Any]
    expected: Any = None
    observed: Any = None
    residual: Any = None
    passed: bool = Field(alias="pass")
    notes: str = ""


class VerifyRequest(BaseModel):
    suite: str
    k: Optional[list[int]] = None
    x: Optional[list[str]] = None
    n_max: int = 30
    series_order: int = 120
    tolerance: str = "1e-20"
    precision: int = 60


class VerifyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    suite: str
    passed: bool = Field(alias="pass")
    reports: list[ReportModel]
    config: ConfigEcho
