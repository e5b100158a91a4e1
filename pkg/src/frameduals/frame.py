"""Geometry of single-loop frames: straight bars, circular arcs, cuts.

A structural loop is a closed circuit of bar segments in body space.
Curved members are first-class parametric objects (not polylines), so a
cut on an arc evaluates the position exactly on the curve.  The state
of self-stress of a loop is carried by a DualLoop: a cyclic polygon of
dual points (phi, xi) together with the ambient pressure p of the
stress space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .bivector import Loop4, Vec3
from .legendre import DualPoint

__all__ = [
    "ClosureError",
    "StraightSegment",
    "ArcSegment",
    "BarSegment",
    "CutPoint",
    "StructuralLoop",
    "DualLoop",
    "position_at",
    "build_rectangle",
    "build_rect_with_arcs",
]

CLOSURE_TOL = 1e-9
BASIS_TOL = 1e-9


class ClosureError(ValueError):
    """A segment chain does not close into a loop."""

    def __init__(self, gap: float, where: str):
        self.gap = gap
        super().__init__(f"structural loop is open at {where}: gap magnitude {gap:.6g}")


@dataclass(frozen=True)
class StraightSegment:
    """Straight bar from start to end, parameter s in [0, 1]."""

    start: Vec3
    end: Vec3

    def __post_init__(self) -> None:
        if (self.end - self.start).norm() == 0.0:
            raise ValueError("straight segment endpoints must be distinct")

    @property
    def param_range(self) -> tuple[float, float]:
        return (0.0, 1.0)

    def point_at(self, s: float) -> Vec3:
        return self.start + s * (self.end - self.start)

    def start_point(self) -> Vec3:
        return self.start

    def end_point(self) -> Vec3:
        return self.end


@dataclass(frozen=True)
class ArcSegment:
    """Circular arc x(psi) = center + R(cos(psi) e1 + sin(psi) e2).

    e1, e2 must be orthonormal; psi runs from psi_start to psi_end.
    """

    center: Vec3
    radius: float
    e1: Vec3
    e2: Vec3
    psi_start: float
    psi_end: float

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ValueError(f"arc radius must be positive, got {self.radius}")
        if self.psi_end == self.psi_start:
            raise ValueError("arc must sweep a nonzero angle")
        for name, e in (("e1", self.e1), ("e2", self.e2)):
            if abs(e.norm() - 1.0) > BASIS_TOL:
                raise ValueError(f"arc basis vector {name} must be unit length")
        if abs(self.e1.dot(self.e2)) > BASIS_TOL:
            raise ValueError("arc basis vectors must be orthogonal")

    @property
    def param_range(self) -> tuple[float, float]:
        return (self.psi_start, self.psi_end)

    def point_at(self, psi: float) -> Vec3:
        return self.center + self.radius * (math.cos(psi) * self.e1 + math.sin(psi) * self.e2)

    def start_point(self) -> Vec3:
        return self.point_at(self.psi_start)

    def end_point(self) -> Vec3:
        return self.point_at(self.psi_end)


BarSegment = Union[StraightSegment, ArcSegment]


@dataclass(frozen=True)
class CutPoint:
    """A cut cross-section: segment index plus the segment's own parameter.

    Straight segments use s in [0, 1]; arcs use the angle psi within the
    arc's swept range.
    """

    segment: int
    param: float


@dataclass(frozen=True)
class StructuralLoop:
    """Closed circuit of bar segments; end of segment m meets start of m+1."""

    segments: tuple[BarSegment, ...]

    def __init__(self, segments: Sequence[BarSegment]) -> None:
        segs = tuple(segments)
        if not segs:
            raise ValueError("structural loop needs at least one segment")
        for m, seg in enumerate(segs):
            nxt = segs[(m + 1) % len(segs)]
            gap = (nxt.start_point() - seg.end_point()).norm()
            if gap > CLOSURE_TOL:
                raise ClosureError(gap, where=f"segment {m} -> {(m + 1) % len(segs)}")
        object.__setattr__(self, "segments", segs)

    def __len__(self) -> int:
        return len(self.segments)


def position_at(loop: StructuralLoop, cut: CutPoint) -> Vec3:
    """3D position of a cut; rejects bad segment indices and parameters."""
    if not 0 <= cut.segment < len(loop.segments):
        raise IndexError(
            f"segment index {cut.segment} out of range for loop of {len(loop.segments)} segments"
        )
    seg = loop.segments[cut.segment]
    lo, hi = seg.param_range
    if not (min(lo, hi) - 1e-9 <= cut.param <= max(lo, hi) + 1e-9):
        raise ValueError(f"cut parameter {cut.param} outside segment range [{lo}, {hi}]")
    return seg.point_at(cut.param)


def build_rectangle(width_b: float, width_w: float) -> StructuralLoop:
    """Rectangular loop a-b-c-d, 2B by 2W in the i, j directions, centered
    at the origin.  Corners: a=(-B,-W), b=(-B,W), c=(B,W), d=(B,-W)."""
    b, w = width_b, width_w
    if b <= 0 or w <= 0:
        raise ValueError("rectangle half-dimensions must be positive")
    pa = Vec3(-b, -w, 0.0)
    pb = Vec3(-b, w, 0.0)
    pc = Vec3(b, w, 0.0)
    pd = Vec3(b, -w, 0.0)
    return StructuralLoop(
        [
            StraightSegment(pa, pb),
            StraightSegment(pb, pc),
            StraightSegment(pc, pd),
            StraightSegment(pd, pa),
        ]
    )


def build_rect_with_arcs(width_b: float, width_w: float) -> StructuralLoop:
    """Rectangle variant with semicircular ends replacing the short sides.

    Segment 0 is the arc a->b at x = -B, radius W, curving out of plane:
    x(psi) = (-B, -W cos psi, W sin psi) for psi in [0, pi], so the
    out-of-plane offset is W sin psi.  Segment 2 is the in-plane arc
    c->d at x = +B bulging outward.  Segments 1 and 3 are the straight
    long sides b->c and d->a.
    """
    b, w = width_b, width_w
    if b <= 0 or w <= 0:
        raise ValueError("frame half-dimensions must be positive")
    pa = Vec3(-b, -w, 0.0)
    pb = Vec3(-b, w, 0.0)
    pc = Vec3(b, w, 0.0)
    pd = Vec3(b, -w, 0.0)
    arc_ab = ArcSegment(
        center=Vec3(-b, 0.0, 0.0),
        radius=w,
        e1=Vec3(0.0, -1.0, 0.0),
        e2=Vec3(0.0, 0.0, 1.0),
        psi_start=0.0,
        psi_end=math.pi,
    )
    arc_cd = ArcSegment(
        center=Vec3(b, 0.0, 0.0),
        radius=w,
        e1=Vec3(0.0, 1.0, 0.0),
        e2=Vec3(1.0, 0.0, 0.0),
        psi_start=0.0,
        psi_end=math.pi,
    )
    return StructuralLoop([arc_ab, StraightSegment(pb, pc), arc_cd, StraightSegment(pd, pa)])


@dataclass(frozen=True)
class DualLoop:
    """Cyclic dual polygon (phi, xi) plus the stress-space pressure p.

    One dual loop encodes the state of self-stress of a whole structural
    loop; the force and total moment it defines are the same at every
    cut.  An empty vertex list is legal and means zero resultants.
    """

    vertices: tuple[DualPoint, ...]
    p: float

    def __init__(self, vertices: Sequence[DualPoint], p: float):
        if p <= 0:
            raise ValueError(f"pressure p must be positive, got {p}")
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(self, "p", float(p))

    def __len__(self) -> int:
        return len(self.vertices)

    def to_loop4(self) -> Loop4:
        return Loop4([v.to_vec4() for v in self.vertices])
