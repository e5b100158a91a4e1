"""Stress resultants of a dual loop: force, total moment, internal moment.

All six resultant components are p times projected oriented areas, with
one orientation (the shoelace convention of bivector.py) used for every
loop.  Sign table, calibrated once against the rectangular-frame
fixture and used consistently everywhere:

    area on j^k, k^i, i^j of the dual loop   ->  force along i, j, k   (x p)
    area on i^h, j^h, k^h of the dual loop   ->  total moment about i, j, k  (x p)
    area on i^h, j^h, k^h of the hybrid loop ->  MINUS internal moment about i, j, k  (x p)

The relative minus on the hybrid row is forced by the Legendre relation
phi = xi.x - f: the hybrid loop plots f on the h axis where the dual
loop plots phi, and those enter the moment decomposition with opposite
sign.  With this table the decomposition

    total moment = x cross force + internal moment

holds exactly at every cut position x, matching elementary statics.

The force and total moment take no cut argument: they are properties of
the dual loop alone, constant around the structural loop.  Only the
internal (bending plus torsional) moment varies with the cut, through
the hybrid loop built at that cut's position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bivector import Loop4, Vec3, Vec4, hodge_dual_3, shoelace_area
from .frame import DualLoop

__all__ = [
    "StressResultant",
    "MomentIdentityError",
    "force",
    "total_moment",
    "hybrid_vertices",
    "hybrid_loop",
    "internal_moment",
    "decompose",
]

IDENTITY_TOL = 1e-9  # relative, for the total = lever + internal check


class MomentIdentityError(RuntimeError):
    """The moment decomposition identity failed: an implementation bug,
    not bad input."""


@dataclass(frozen=True)
class StressResultant:
    """Force plus the three moment vectors at a cut.

    total_moment is taken about the coordinate origin;
    lever_moment = x cross force; internal_moment is the bending and
    torsional part at the cut itself.  Componentwise,
    total == lever + internal.
    """

    force: Vec3
    total_moment: Vec3
    lever_moment: Vec3
    internal_moment: Vec3


def force(dual: DualLoop) -> Vec3:
    """Force transmitted across any cut: p times the Hodge dual of the
    spatial oriented area of the dual loop.

    Equals the cross-product sum (p/2) * sum of xi[K+1] x xi[K] over the
    loop edges; all vertices sharing one xi give zero force.
    """
    return dual.p * hodge_dual_3(shoelace_area(dual.to_loop4()))


def total_moment(dual: DualLoop) -> Vec3:
    """Moment about the origin: trapezoid sum over the dual-loop edges.

    Each edge contributes half of (phi[K+1] + phi[K]) times the edge
    vector (xi[K+1] - xi[K]), assembled about the i, j, k axes; this is
    identical to p times the h-plane shoelace projections of the dual
    loop.  Adding a constant to every phi leaves the result unchanged
    (the loop closes).
    """
    verts = dual.vertices
    n = len(verts)
    mx = my = mz = 0.0
    for a in range(n):
        cur = verts[a]
        nxt = verts[(a + 1) % n]
        avg = cur.phi + nxt.phi
        edge = nxt.xi - cur.xi
        mx += avg * edge.x
        my += avg * edge.y
        mz += avg * edge.z
    return Vec3(0.5 * dual.p * mx, 0.5 * dual.p * my, 0.5 * dual.p * mz)


def hybrid_vertices(dual: DualLoop, x: Vec3) -> list[tuple[float, Vec3]]:
    """Vertices (f_K, xi_K) of the hybrid loop at cut position x.

    The hybrid object plots the original stress function value
    f_K = xi_K . x - phi_K at the dual coordinates xi_K, keeping the
    dual loop's cyclic order.  At x = 0 it is the dual loop with the
    h axis negated.
    """
    return [(v.xi.dot(x) - v.phi, v.xi) for v in dual.vertices]


def hybrid_loop(dual: DualLoop, x: Vec3) -> Loop4:
    """Hybrid loop as a 4D loop with f on the h axis."""
    return Loop4([Vec4.from_spatial(xi, h=f) for f, xi in hybrid_vertices(dual, x)])


def internal_moment(dual: DualLoop, x: Vec3) -> Vec3:
    """Bending plus torsional moment at the cut located at x.

    Minus p times the h-plane shoelace projections of the hybrid loop
    (see the module sign table).  At x = 0 this coincides with the
    total moment, since the lever term vanishes there.
    """
    area = shoelace_area(hybrid_loop(dual, x))
    return Vec3(-dual.p * area.ih, -dual.p * area.jh, -dual.p * area.kh)


def decompose(dual: DualLoop, x: Vec3) -> StressResultant:
    """All resultants at the cut position x, with the identity check.

    force, total_moment and internal_moment are computed by their own
    routes; lever_moment = x cross force.  If total != lever + internal
    within a relative 1e-9 the routes disagree, which can only be an
    implementation bug, so MomentIdentityError is raised.
    """
    p_vec = force(dual)
    total = total_moment(dual)
    lever = x.cross(p_vec)
    internal = internal_moment(dual, x)
    residual = total - lever - internal
    scale = 1.0 + max(abs(total.x), abs(total.y), abs(total.z))
    worst = max(abs(residual.x), abs(residual.y), abs(residual.z))
    if worst > IDENTITY_TOL * scale:
        raise MomentIdentityError(
            f"total != lever + internal: residual {worst:.3e} exceeds {IDENTITY_TOL:.0e} * {scale:.3e}"
        )
    return StressResultant(
        force=p_vec, total_moment=total, lever_moment=lever, internal_moment=internal
    )
