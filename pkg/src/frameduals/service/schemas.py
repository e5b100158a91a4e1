"""Request and response models for the HTTP service.

The project-document schema itself lives in frameduals.document and is
reused here unchanged, so a document accepted by the file format is a
valid request payload and vice versa.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..document import DocumentModel, FieldModel

Coords3 = tuple[float, float, float]

__all__ = [
    "CutModel",
    "ResultantsRequest",
    "ResultantsResponse",
    "VerifyRequest",
    "CheckModel",
    "VerifyResponse",
    "LegendreRequest",
    "DualSampleModel",
    "LegendreResponse",
    "RenderRequest",
]


class CutModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    segment: int = Field(ge=0)
    param: float


class ResultantsRequest(BaseModel):
    document: DocumentModel
    cut: Optional[CutModel] = None


class ResultantsResponse(BaseModel):
    force: Coords3
    total_moment: Coords3
    cut_position: Optional[Coords3] = None
    lever_moment: Optional[Coords3] = None
    internal_moment: Optional[Coords3] = None


class VerifyRequest(BaseModel):
    document: DocumentModel
    samples: int = Field(default=100, ge=1)
    seed: Optional[int] = None


class CheckModel(BaseModel):
    name: str
    max_residual: float
    tolerance: float
    passed: bool


class VerifyResponse(BaseModel):
    passed: bool
    samples: int
    seed: int
    checks: list[CheckModel]


class LegendreRequest(BaseModel):
    field: FieldModel


class DualSampleModel(BaseModel):
    xi: Coords3
    phi: float
    source_x: Coords3


class LegendreResponse(BaseModel):
    samples: list[DualSampleModel]


class RenderRequest(BaseModel):
    document: DocumentModel
    target: Literal["form", "dual", "hybrid"]
    cut: Optional[CutModel] = None
