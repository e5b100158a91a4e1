"""Worked-example documents: the rectangular frame and its curved variant.

Both fixtures share one dual triangle, built by Legendre-transforming
three linear stress-function cells arranged around the loop:

    cell 1: f = -t*B              ->  dual point (phi=t*B, xi=(0, 0, 0))
    cell 2: f = -t*B + t*x        ->  dual point (phi=t*B, xi=(t, 0, 0))
    cell 3: f = s*z               ->  dual point (phi=0,   xi=(0, 0, s))

With pressure p this dual triangle carries a force of magnitude
p*t*s/2 along j and a total moment of p*B*t^2/2 about i.  The two
structures demonstrate that the same dual loop works for different
geometries: force and total moment match, only the internal moments
(which see the cut position) differ.
"""

from __future__ import annotations

from .bivector import Vec3
from .document import ProjectDocument
from .frame import DualLoop, build_rect_with_arcs, build_rectangle
from .legendre import LinearStressFunction, dual_loop_from_cells

__all__ = [
    "DEFAULT_PARAMS",
    "fixture_cells",
    "fixture_dual",
    "rectangle_document",
    "curved_document",
    "FIXTURE_BUILDERS",
]

DEFAULT_PARAMS = dict(B=2.0, W=1.0, s=1.0, t=1.0, p=1.0)


def fixture_cells(B: float, s: float, t: float) -> list[LinearStressFunction]:
    """The three stress-function cells behind the fixture dual triangle."""
    return [
        LinearStressFunction(a0=-t * B, grad=Vec3(0.0, 0.0, 0.0)),
        LinearStressFunction(a0=-t * B, grad=Vec3(t, 0.0, 0.0)),
        LinearStressFunction(a0=0.0, grad=Vec3(0.0, 0.0, s)),
    ]


def fixture_dual(B: float, s: float, t: float, p: float) -> DualLoop:
    return DualLoop(dual_loop_from_cells(fixture_cells(B, s, t)), p=p)


def rectangle_document(
    B: float = 2.0, W: float = 1.0, s: float = 1.0, t: float = 1.0, p: float = 1.0
) -> ProjectDocument:
    """Flat rectangular frame 2B x 2W with the fixture dual triangle."""
    return ProjectDocument(
        structure=build_rectangle(B, W),
        dual=fixture_dual(B, s, t, p),
        units="unit-agnostic; stress-function axis is Length^2",
    )


def curved_document(
    B: float = 2.0, W: float = 1.0, s: float = 1.0, t: float = 1.0, p: float = 1.0
) -> ProjectDocument:
    """Same dual loop on the frame with semicircular ends, one out of plane."""
    return ProjectDocument(
        structure=build_rect_with_arcs(B, W),
        dual=fixture_dual(B, s, t, p),
        units="unit-agnostic; stress-function axis is Length^2",
    )


FIXTURE_BUILDERS = {
    "rectangle": rectangle_document,
    "curved": curved_document,
}
