"""Command-line client over the core package.

Subcommands: resultants, verify, legendre, render, fixtures, serve.
Exit codes: 0 success, 1 verification-check failure, 2 input error.
The verification seed resolves as --seed, then the FRAME_DUALS_SEED
environment variable, then the document's meta seed, then 0.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

from .bivector import Vec3
from .document import (
    DocumentError,
    ProjectDocument,
    dump_dual_samples_csv,
    emit_document,
    load_field_csv,
    parse_document,
)
from .frame import CutPoint, position_at
from .fixtures import FIXTURE_BUILDERS
from .legendre import diagram_of_stress
from .oracle import run_suite
from .render import RENDER_TARGETS, render_projections
from .resultants import decompose, force, total_moment

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class InputError(Exception):
    pass


def _load_document(path: str) -> ProjectDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_document(text)
    except DocumentError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _parse_cut(text: str) -> CutPoint:
    try:
        seg_str, param_str = text.split(":", 1)
        return CutPoint(int(seg_str), float(param_str))
    except ValueError as exc:
        raise InputError(f"bad cut {text!r}, expected SEGMENT:PARAM") from exc


def _fmt(v: Vec3) -> str:
    return f"({v.x:.12g}, {v.y:.12g}, {v.z:.12g})"


def _resolve_seed(explicit: Optional[int], doc: ProjectDocument) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("FRAME_DUALS_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InputError(f"FRAME_DUALS_SEED must be an integer, got {env!r}") from exc
    if doc.seed is not None:
        return doc.seed
    return 0


def cmd_resultants(args: argparse.Namespace) -> int:
    doc = _load_document(args.document)
    if args.cut is None:
        print(f"force           = {_fmt(force(doc.dual))}")
        print(f"total moment    = {_fmt(total_moment(doc.dual))}")
        return EXIT_OK
    cut = _parse_cut(args.cut)
    try:
        x = position_at(doc.require_structure(), cut)
    except (DocumentError, ValueError, IndexError) as exc:
        raise InputError(str(exc)) from exc
    res = decompose(doc.dual, x)
    print(f"cut position    = {_fmt(x)}")
    print(f"force           = {_fmt(res.force)}")
    print(f"total moment    = {_fmt(res.total_moment)}")
    print(f"lever moment    = {_fmt(res.lever_moment)}")
    print(f"internal moment = {_fmt(res.internal_moment)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    doc = _load_document(args.document)
    seed = _resolve_seed(args.seed, doc)
    try:
        structure = doc.require_structure()
    except DocumentError as exc:
        raise InputError(str(exc)) from exc
    report = run_suite(structure, doc.dual, samples=args.samples, seed=seed)
    print(report.render_text())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_legendre(args: argparse.Namespace) -> int:
    try:
        text = Path(args.field).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {args.field}: {exc}") from exc
    try:
        fld = load_field_csv(text)
        samples = diagram_of_stress(fld)
    except (DocumentError, ValueError) as exc:
        raise InputError(f"{args.field}: {exc}") from exc
    Path(args.out).write_text(dump_dual_samples_csv(samples, fld.dim), encoding="utf-8")
    print(f"wrote {len(samples)} dual samples to {args.out}")
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    doc = _load_document(args.document)
    cut = None if args.cut is None else _parse_cut(args.cut)
    try:
        svg = render_projections(doc, args.target, cut)
    except (DocumentError, ValueError, IndexError) as exc:
        raise InputError(str(exc)) from exc
    Path(args.out).write_text(svg, encoding="utf-8")
    print(f"wrote {args.out}")
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    out_dir = Path(args.emit)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, builder in FIXTURE_BUILDERS.items():
        path = out_dir / f"{name}.json"
        path.write_text(emit_document(builder()), encoding="utf-8")
        print(f"wrote {path}")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("frameduals.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frameduals",
        description="Forces and moments in self-stressed 3D frames from dual loops.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resultants", help="print force and moments for a document")
    p.add_argument("document")
    p.add_argument("--cut", help="cut as SEGMENT:PARAM (s in [0,1] or arc angle)")
    p.set_defaults(func=cmd_resultants)

    p = sub.add_parser("verify", help="run the statics verification suite")
    p.add_argument("document")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("legendre", help="transform a sampled field (CSV in, CSV out)")
    p.add_argument("field")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_legendre)

    p = sub.add_parser("render", help="emit the six basis-plane projections as SVG")
    p.add_argument("document")
    p.add_argument("--target", choices=RENDER_TARGETS, required=True)
    p.add_argument("--cut", help="required for --target hybrid")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("fixtures", help="write the worked-example documents")
    p.add_argument("--emit", required=True, metavar="DIR")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
