"""SVG emission of the six basis-plane projections of a 4D loop.

One SVG per call, with six panels (j-k, k-i, i-j, i-h, j-h, k-h).  Each
panel draws the projected loop with orientation arrows, prints its
signed projected area and, for dual and hybrid targets, the implied
force or moment (pressure times area, with the internal-moment sign
from the resultants table).  Areas are computed with the same shoelace
code as everywhere else; the SVG is a view, never a second
implementation.

Every panel also carries a machine-readable comment

    <!-- panel=ij area=... value=... -->

so tools (and tests) can read the numbers back without parsing text
layout.
"""

from __future__ import annotations

import math
from typing import Optional

from .bivector import BASIS_PLANES, Loop4, Vec4, project, shoelace_area
from .document import ProjectDocument
from .frame import ArcSegment, CutPoint, position_at
from .resultants import hybrid_loop

__all__ = ["render_projections", "RENDER_TARGETS"]

RENDER_TARGETS = ("form", "dual", "hybrid")

PANEL_W = 300.0
PANEL_H = 280.0
MARGIN = 34.0
ARC_POINTS = 64

# (axis-a getter, axis-b getter) per plane, drawing plane "ab" with a
# horizontal and b vertical
_PLANE_AXES = {
    "jk": ("j", "k"),
    "ki": ("k", "i"),
    "ij": ("i", "j"),
    "ih": ("i", "h"),
    "jh": ("j", "h"),
    "kh": ("k", "h"),
}

# annotation labels: spatial planes carry force components, h planes
# carry moment components about the named axis
_FORCE_LABEL = {"jk": "force_i", "ki": "force_j", "ij": "force_k"}
_MOMENT_AXIS = {"ih": "i", "jh": "j", "kh": "k"}


def _structure_polyline(doc: ProjectDocument) -> Loop4:
    """Structural loop as a 4D polyline with zero on the h axis."""
    loop = doc.require_structure()
    verts: list[Vec4] = []
    for seg in loop.segments:
        if isinstance(seg, ArcSegment):
            lo, hi = seg.param_range
            for n in range(ARC_POINTS):
                psi = lo + (hi - lo) * n / ARC_POINTS
                verts.append(Vec4.from_spatial(seg.point_at(psi)))
        else:
            verts.append(Vec4.from_spatial(seg.start))
    return Loop4(verts)


def _loop_for_target(
    doc: ProjectDocument, target: str, cut: Optional[CutPoint]
) -> tuple[Loop4, str]:
    if target == "form":
        return _structure_polyline(doc), "form diagram (h = 0)"
    if target == "dual":
        return doc.dual.to_loop4(), f"dual loop, p = {doc.dual.p:g}"
    if target == "hybrid":
        if cut is None:
            raise ValueError("hybrid target needs a cut")
        x = position_at(doc.require_structure(), cut)
        title = (
            f"hybrid loop at cut {cut.segment}:{cut.param:g}, "
            f"x = ({x.x:g}, {x.y:g}, {x.z:g}), p = {doc.dual.p:g}"
        )
        return hybrid_loop(doc.dual, x), title
    raise ValueError(f"unknown render target {target!r}; expected one of {RENDER_TARGETS}")


def _panel_annotation(target: str, plane: str, area: float, p: float) -> Optional[tuple[str, float]]:
    if target == "form":
        return None
    if plane in _FORCE_LABEL:
        return (_FORCE_LABEL[plane], p * area)
    axis = _MOMENT_AXIS[plane]
    if target == "dual":
        return (f"total_moment_{axis}", p * area)
    return (f"internal_moment_{axis}", -p * area)


def _fit(points: list[tuple[float, float]]) -> tuple[float, float, float]:
    """Scale and center so the loop fits the panel; returns (scale, cx, cy)."""
    xs = [p[0] for p in points] or [0.0]
    ys = [p[1] for p in points] or [0.0]
    cx = 0.5 * (min(xs) + max(xs))
    cy = 0.5 * (min(ys) + max(ys))
    extent = max(max(xs) - min(xs), max(ys) - min(ys))
    usable = min(PANEL_W, PANEL_H) - 2 * MARGIN
    scale = usable / extent if extent > 1e-30 else 1.0
    return scale, cx, cy


def _arrow(x0: float, y0: float, x1: float, y1: float) -> str:
    """Small arrowhead at the edge midpoint, pointing along the edge."""
    mx, my = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    ang = math.atan2(y1 - y0, x1 - x0)
    size = 6.0
    tips = []
    for dtheta in (0.0, 2.6, -2.6):
        tips.append(
            f"{mx + size * math.cos(ang + dtheta):.2f},{my + size * math.sin(ang + dtheta):.2f}"
        )
    return f'<polygon points="{" ".join(tips)}" fill="#c0392b"/>'


def _panel(
    plane: str, loop: Loop4, target: str, p: float, ox: float, oy: float
) -> str:
    attr_a, attr_b = _PLANE_AXES[plane]
    pts = [(getattr(v, attr_a), getattr(v, attr_b)) for v in loop.vertices]
    area = project(shoelace_area(loop), plane)
    annotation = _panel_annotation(target, plane, area, p)

    scale, cx, cy = _fit(pts)

    def to_svg(pt: tuple[float, float]) -> tuple[float, float]:
        # flip the vertical so positive axis-b points up
        return (
            ox + PANEL_W / 2 + (pt[0] - cx) * scale,
            oy + PANEL_H / 2 - (pt[1] - cy) * scale,
        )

    svg_pts = [to_svg(pt) for pt in pts]
    value_str = "" if annotation is None else f" value={annotation[1]!r}"
    out = [
        f"<!-- panel={plane} area={area!r}{value_str} -->",
        "<g>",
        f'<rect x="{ox:.1f}" y="{oy:.1f}" width="{PANEL_W:.1f}" height="{PANEL_H:.1f}" '
        f'fill="none" stroke="#888" stroke-width="1"/>',
        f'<text x="{ox + 8:.1f}" y="{oy + 16:.1f}" font-size="13" font-family="monospace" '
        f'fill="#222">{attr_a}^{attr_b} plane</text>',
    ]
    if len(svg_pts) >= 2:
        path = " ".join(f"{x:.2f},{y:.2f}" for x, y in svg_pts)
        out.append(
            f'<polygon points="{path}" fill="none" stroke="#2c3e50" stroke-width="1.5"/>'
        )
        for n in range(len(svg_pts)):
            x0, y0 = svg_pts[n]
            x1, y1 = svg_pts[(n + 1) % len(svg_pts)]
            if math.hypot(x1 - x0, y1 - y0) > 12.0:
                out.append(_arrow(x0, y0, x1, y1))
    elif svg_pts:
        x0, y0 = svg_pts[0]
        out.append(f'<circle cx="{x0:.2f}" cy="{y0:.2f}" r="2.5" fill="#2c3e50"/>')

    text_y = oy + PANEL_H - 40
    out.append(
        f'<text x="{ox + 8:.1f}" y="{text_y:.1f}" font-size="11" font-family="monospace" '
        f'fill="#222">area = {area:.9g}</text>'
    )
    if annotation is not None:
        out.append(
            f'<text x="{ox + 8:.1f}" y="{text_y + 13:.1f}" font-size="11" '
            f'font-family="monospace" fill="#145a32">{annotation[0]} = {annotation[1]:.9g}</text>'
        )
    out.append(
        f'<text x="{ox + 8:.1f}" y="{text_y + 26:.1f}" font-size="10" font-family="monospace" '
        f'fill="#666">scale = {scale:.4g}</text>'
    )
    out.append("</g>")
    return "\n".join(out)


def render_projections(
    doc: ProjectDocument, target: str, cut: Optional[CutPoint] = None
) -> str:
    """Render the six basis-plane projections of the chosen loop as SVG."""
    loop, title = _loop_for_target(doc, target, cut)
    p = doc.dual.p

    width = 3 * PANEL_W + 4 * 10.0
    height = 2 * PANEL_H + 3 * 10.0 + 28.0
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        f'<rect x="0" y="0" width="{width:.0f}" height="{height:.0f}" fill="#ffffff"/>',
        f'<text x="12" y="20" font-size="14" font-family="monospace" fill="#000">'
        f"{target}: {title}</text>",
    ]
    for n, plane in enumerate(BASIS_PLANES):
        col, row = n % 3, n // 3
        ox = 10.0 + col * (PANEL_W + 10.0)
        oy = 28.0 + 10.0 + row * (PANEL_H + 10.0)
        parts.append(_panel(plane, loop, target, p, ox, oy))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
