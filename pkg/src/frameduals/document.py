"""Project document format (JSON) and sampled-field format (CSV).

A project document bundles a structural loop, its dual loop and
optional sampled fields under the top-level keys "structure", "dual",
"fields" and "meta".  The pydantic models below are the single schema
definition, shared by the file format, the HTTP service and the CLI.

Units are caller-declared metadata only; the library itself is
unit-agnostic (the stress-function axis has dimensions Length^2, which
is recorded in docs, not enforced).

Sampled fields travel as CSV: a header line naming the coordinate
columns plus "f", then one sample per line.  The samples must fill a
regular grid; order does not matter.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field
from typing import Annotated, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .bivector import Vec3
from .frame import (
    ArcSegment,
    BarSegment,
    ClosureError,
    DualLoop,
    StraightSegment,
    StructuralLoop,
)
from .legendre import DualPoint, DualSample, SampledField

__all__ = [
    "DocumentError",
    "ProjectDocument",
    "DocumentModel",
    "parse_document",
    "emit_document",
    "document_to_model",
    "model_to_document",
    "load_field_csv",
    "dump_field_csv",
    "dump_dual_samples_csv",
]

Coords3 = tuple[float, float, float]
Coords4 = tuple[float, float, float, float]

AXIS_NAMES = ("x", "y", "z")


class DocumentError(ValueError):
    """Invalid document content; message carries the offending path."""


class StraightSegmentModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    kind: Literal["straight"]
    start: Coords3
    end: Coords3


class ArcSegmentModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    kind: Literal["arc"]
    center: Coords3
    radius: float = Field(gt=0)
    e1: Coords3
    e2: Coords3
    psi_start: float
    psi_end: float


SegmentModel = Annotated[
    Union[StraightSegmentModel, ArcSegmentModel], Field(discriminator="kind")
]


class StructureModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    segments: list[SegmentModel] = Field(default_factory=list)


class DualModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    p: float = Field(gt=0, description="stress-space pressure")
    vertices: list[Coords4] = Field(
        default_factory=list, description="dual points as [phi, xi, eta, zeta]"
    )


class FieldModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    name: str
    origin: list[float]
    spacing: list[float]
    shape: list[int]
    values: list[float] = Field(description="row-major flattened samples")


class MetaModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    units: Optional[str] = None
    seed: Optional[int] = None


class DocumentModel(BaseModel):
    model_config = ConfigDict(extra="forbid")
    structure: StructureModel
    dual: DualModel
    fields: list[FieldModel] = Field(default_factory=list)
    meta: MetaModel = Field(default_factory=MetaModel)


@dataclass
class ProjectDocument:
    """Validated in-memory document: domain objects, not wire models."""

    structure: Optional[StructuralLoop]
    dual: DualLoop
    fields: dict[str, SampledField] = dc_field(default_factory=dict)
    units: Optional[str] = None
    seed: Optional[int] = None

    def require_structure(self) -> StructuralLoop:
        if self.structure is None:
            raise DocumentError("structure.segments: document has no structural loop")
        return self.structure


def _validation_message(err: ValidationError) -> str:
    parts = []
    for e in err.errors():
        path = ".".join(str(p) for p in e["loc"]) or "<root>"
        parts.append(f"{path}: {e['msg']}")
    return "; ".join(parts)


def _segment_from_model(m: Union[StraightSegmentModel, ArcSegmentModel], idx: int) -> BarSegment:
    try:
        if isinstance(m, StraightSegmentModel):
            return StraightSegment(Vec3(*m.start), Vec3(*m.end))
        return ArcSegment(
            center=Vec3(*m.center),
            radius=m.radius,
            e1=Vec3(*m.e1),
            e2=Vec3(*m.e2),
            psi_start=m.psi_start,
            psi_end=m.psi_end,
        )
    except ValueError as exc:
        raise DocumentError(f"structure.segments.{idx}: {exc}") from exc


def model_to_document(model: DocumentModel) -> ProjectDocument:
    segments = [_segment_from_model(m, i) for i, m in enumerate(model.structure.segments)]
    structure: Optional[StructuralLoop] = None
    if segments:
        try:
            structure = StructuralLoop(segments)
        except ClosureError as exc:
            raise DocumentError(f"structure.segments: {exc}") from exc

    vertices = [DualPoint(phi=v[0], xi=Vec3(v[1], v[2], v[3])) for v in model.dual.vertices]
    try:
        dual = DualLoop(vertices, p=model.dual.p)
    except ValueError as exc:
        raise DocumentError(f"dual: {exc}") from exc

    fields: dict[str, SampledField] = {}
    for i, fm in enumerate(model.fields):
        if fm.name in fields:
            raise DocumentError(f"fields.{i}.name: duplicate field name {fm.name!r}")
        expected = math.prod(fm.shape)
        if len(fm.values) != expected:
            raise DocumentError(
                f"fields.{i}.values: expected {expected} values for shape {fm.shape}, "
                f"got {len(fm.values)}"
            )
        try:
            fields[fm.name] = SampledField(
                origin=tuple(fm.origin),
                spacing=tuple(fm.spacing),
                values=np.asarray(fm.values, dtype=float).reshape(fm.shape),
            )
        except ValueError as exc:
            raise DocumentError(f"fields.{i}: {exc}") from exc

    return ProjectDocument(
        structure=structure,
        dual=dual,
        fields=fields,
        units=model.meta.units,
        seed=model.meta.seed,
    )


def document_to_model(doc: ProjectDocument) -> DocumentModel:
    seg_models: list[Union[StraightSegmentModel, ArcSegmentModel]] = []
    if doc.structure is not None:
        for seg in doc.structure.segments:
            if isinstance(seg, StraightSegment):
                seg_models.append(
                    StraightSegmentModel(
                        kind="straight", start=seg.start.as_tuple(), end=seg.end.as_tuple()
                    )
                )
            else:
                seg_models.append(
                    ArcSegmentModel(
                        kind="arc",
                        center=seg.center.as_tuple(),
                        radius=seg.radius,
                        e1=seg.e1.as_tuple(),
                        e2=seg.e2.as_tuple(),
                        psi_start=seg.psi_start,
                        psi_end=seg.psi_end,
                    )
                )
    return DocumentModel(
        structure=StructureModel(segments=seg_models),
        dual=DualModel(
            p=doc.dual.p,
            vertices=[(v.phi, v.xi.x, v.xi.y, v.xi.z) for v in doc.dual.vertices],
        ),
        fields=[
            FieldModel(
                name=name,
                origin=list(f.origin),
                spacing=list(f.spacing),
                shape=list(f.values.shape),
                values=[float(v) for v in f.values.ravel()],
            )
            for name, f in doc.fields.items()
        ],
        meta=MetaModel(units=doc.units, seed=doc.seed),
    )


def parse_document(text: str) -> ProjectDocument:
    """Parse and validate a JSON project document.

    Schema violations, open structural loops and non-positive pressure
    all raise DocumentError with a path-addressed message.
    """
    try:
        model = DocumentModel.model_validate_json(text)
    except ValidationError as exc:
        raise DocumentError(_validation_message(exc)) from exc
    return model_to_document(model)


def emit_document(doc: ProjectDocument) -> str:
    """Serialize a document to JSON; floats round-trip exactly."""
    return json.dumps(document_to_model(doc).model_dump(), indent=2) + "\n"


def load_field_csv(text: str) -> SampledField:
    """Read a sampled field from CSV (header, then coordinates + value)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise DocumentError("field csv: need a header line and at least one sample")
    header = [c.strip().lower() for c in lines[0].split(",")]
    dim = len(header) - 1
    if dim not in (1, 2, 3):
        raise DocumentError(f"field csv: expected 2 to 4 columns, got {len(header)}")

    rows = []
    for ln_no, ln in enumerate(lines[1:], start=2):
        cells = ln.split(",")
        if len(cells) != dim + 1:
            raise DocumentError(f"field csv line {ln_no}: expected {dim + 1} columns")
        try:
            rows.append([float(c) for c in cells])
        except ValueError as exc:
            raise DocumentError(f"field csv line {ln_no}: {exc}") from exc
    data = np.asarray(rows, dtype=float)

    axes = []
    for a in range(dim):
        coords = np.unique(data[:, a])
        if len(coords) < 2:
            raise DocumentError(f"field csv: axis {AXIS_NAMES[a]} needs at least 2 distinct coordinates")
        steps = np.diff(coords)
        h = steps[0]
        if h <= 0 or not np.allclose(steps, h, rtol=1e-9, atol=1e-12):
            raise DocumentError(f"field csv: axis {AXIS_NAMES[a]} is not a regular grid")
        axes.append((float(coords[0]), float(h), len(coords)))

    shape = tuple(n for _, _, n in axes)
    values = np.full(shape, np.nan)
    for row in data:
        idx = []
        for a, (origin, h, n) in enumerate(axes):
            ia = round((row[a] - origin) / h)
            if not 0 <= ia < n or abs(origin + ia * h - row[a]) > 1e-9 * max(1.0, abs(h)):
                raise DocumentError(f"field csv: sample at {row[:dim]} is off-grid")
            idx.append(int(ia))
        if np.isfinite(values[tuple(idx)]):
            raise DocumentError(f"field csv: duplicate sample at {row[:dim]}")
        values[tuple(idx)] = row[dim]
    if not np.all(np.isfinite(values)):
        missing = int(np.sum(~np.isfinite(values)))
        raise DocumentError(f"field csv: grid is incomplete, {missing} samples missing")

    return SampledField(
        origin=tuple(o for o, _, _ in axes),
        spacing=tuple(h for _, h, _ in axes),
        values=values,
    )


def dump_field_csv(fld: SampledField) -> str:
    """Write a sampled field to CSV in index order."""
    import itertools

    dim = fld.dim
    lines = [",".join(AXIS_NAMES[:dim]) + ",f"]
    for index in itertools.product(*(range(n) for n in fld.values.shape)):
        coords = [repr(float(fld.origin[a] + fld.spacing[a] * index[a])) for a in range(dim)]
        lines.append(",".join(coords + [repr(float(fld.values[index]))]))
    return "\n".join(lines) + "\n"


def dump_dual_samples_csv(samples: list[DualSample], dim: int) -> str:
    """Write dual samples to CSV: gradient coords, phi, then source coords."""
    xi_names = ("xi", "eta", "zeta")[:dim]
    x_names = AXIS_NAMES[:dim]
    lines = [",".join(xi_names) + ",phi," + ",".join(x_names)]
    for s in samples:
        xi = s.xi.as_tuple()[:dim]
        x = s.source_x.as_tuple()[:dim]
        cells = [repr(c) for c in xi] + [repr(s.phi)] + [repr(c) for c in x]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"
