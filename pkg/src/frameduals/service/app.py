"""FastAPI service wrapping the core package.

Endpoints mirror the CLI subcommands: resultants, verify, legendre,
render, fixtures.  Schema errors surface as 422 (pydantic); domain
errors (open loops, bad cuts, off-grid fields) as 400 with the
path-addressed message.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import Response

from .. import __version__
from ..document import DocumentError, DocumentModel, document_to_model, model_to_document
from ..frame import CutPoint, position_at
from ..fixtures import FIXTURE_BUILDERS
from ..legendre import SampledField, diagram_of_stress
from ..oracle import run_suite
from ..render import render_projections
from ..resultants import decompose, force, total_moment
from .schemas import (
    CheckModel,
    DualSampleModel,
    LegendreRequest,
    LegendreResponse,
    RenderRequest,
    ResultantsRequest,
    ResultantsResponse,
    VerifyRequest,
    VerifyResponse,
)

import numpy as np

app = FastAPI(
    title="frameduals",
    version=__version__,
    description="Forces and moments in self-stressed 3D frames, read off "
    "as projected oriented areas of dual loops.",
)


@app.exception_handler(DocumentError)
async def _document_error(_, exc: DocumentError):
    raise HTTPException(status_code=400, detail=str(exc))


def _domain(model: DocumentModel):
    try:
        return model_to_document(model)
    except DocumentError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/resultants", response_model=ResultantsResponse)
def resultants(req: ResultantsRequest) -> ResultantsResponse:
    doc = _domain(req.document)
    if req.cut is None:
        return ResultantsResponse(
            force=force(doc.dual).as_tuple(),
            total_moment=total_moment(doc.dual).as_tuple(),
        )
    try:
        x = position_at(doc.require_structure(), CutPoint(req.cut.segment, req.cut.param))
    except (DocumentError, ValueError, IndexError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    res = decompose(doc.dual, x)
    return ResultantsResponse(
        force=res.force.as_tuple(),
        total_moment=res.total_moment.as_tuple(),
        cut_position=x.as_tuple(),
        lever_moment=res.lever_moment.as_tuple(),
        internal_moment=res.internal_moment.as_tuple(),
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest) -> VerifyResponse:
    doc = _domain(req.document)
    seed = req.seed if req.seed is not None else (doc.seed if doc.seed is not None else 0)
    try:
        structure = doc.require_structure()
    except DocumentError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    report = run_suite(structure, doc.dual, samples=req.samples, seed=seed)
    return VerifyResponse(
        passed=report.passed,
        samples=report.samples,
        seed=report.seed,
        checks=[
            CheckModel(
                name=c.name,
                max_residual=c.max_residual,
                tolerance=c.tolerance,
                passed=c.passed,
            )
            for c in report.checks
        ],
    )


@app.post("/legendre", response_model=LegendreResponse)
def legendre(req: LegendreRequest) -> LegendreResponse:
    fm = req.field
    try:
        fld = SampledField(
            origin=tuple(fm.origin),
            spacing=tuple(fm.spacing),
            values=np.asarray(fm.values, dtype=float).reshape(fm.shape),
        )
        samples = diagram_of_stress(fld)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return LegendreResponse(
        samples=[
            DualSampleModel(xi=s.xi.as_tuple(), phi=s.phi, source_x=s.source_x.as_tuple())
            for s in samples
        ]
    )


@app.post("/render")
def render(req: RenderRequest) -> Response:
    doc = _domain(req.document)
    cut = None if req.cut is None else CutPoint(req.cut.segment, req.cut.param)
    try:
        svg = render_projections(doc, req.target, cut)
    except (DocumentError, ValueError, IndexError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return Response(content=svg, media_type="image/svg+xml")


@app.get("/fixtures/{name}", response_model=DocumentModel)
def fixture(name: str) -> DocumentModel:
    builder = FIXTURE_BUILDERS.get(name)
    if builder is None:
        raise HTTPException(
            status_code=404,
            detail=f"unknown fixture {name!r}; available: {sorted(FIXTURE_BUILDERS)}",
        )
    return document_to_model(builder())
