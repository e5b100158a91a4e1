"""Legendre transform between stress functions and dual stress functions.

A stress function f over body space (x, y, z) maps to a dual function
phi over gradient coordinates (xi, eta, zeta) through

    phi = xi*x + eta*y + zeta*z - f,    xi = grad f,

so phi is the negative intercept of the tangent plane of f.  Two forms
are implemented:

* exact, for piecewise-linear stress functions (one linear function per
  cell), where each cell maps to a single dual point; and
* numeric, for fields sampled on a regular grid, where the gradient is
  taken by second-order central differences at interior samples.

The numeric transform is the pointwise gradient map, not the convex
conjugate: non-convex f is allowed and yields a folded, multi-sheeted
dual, so dual samples are kept as scattered points tagged with their
source location and are never regridded implicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .bivector import Vec3, Vec4

__all__ = [
    "LinearStressFunction",
    "DualPoint",
    "DualSample",
    "SampledField",
    "dual_of_linear",
    "diagram_of_stress",
    "dual_loop_from_cells",
    "check_compatibility",
]

FACE_TOL = 1e-9  # absolute tolerance on coefficients for face continuity


@dataclass(frozen=True)
class LinearStressFunction:
    """Linear stress function f(x) = a0 + grad . x over one body cell."""

    a0: float
    grad: Vec3

    def value_at(self, x: Vec3) -> float:
        return self.a0 + self.grad.dot(x)


@dataclass(frozen=True)
class DualPoint:
    """A point (phi, xi, eta, zeta) of the dual stress function.

    For the dual of a linear cell, phi == -a0: the dual height is the
    negative of the cell's constant term.
    """

    phi: float
    xi: Vec3

    def to_vec4(self) -> Vec4:
        return Vec4.from_spatial(self.xi, h=self.phi)


@dataclass(frozen=True)
class DualSample:
    """One numeric dual sample: gradient coordinates, dual value, source."""

    xi: Vec3
    phi: float
    source_x: Vec3


@dataclass(frozen=True)
class SampledField:
    """Scalar field sampled on a regular 1D, 2D or 3D lattice.

    ``values[i0, i1, ...]`` is the sample at coordinate
    ``origin[a] + spacing[a] * ia`` along each axis a.  Axes beyond the
    field's dimension are embedded at zero when 3D points are needed.
    """

    origin: tuple[float, ...]
    spacing: tuple[float, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", vals)
        if vals.ndim not in (1, 2, 3):
            raise ValueError(f"field must be 1D, 2D or 3D, got {vals.ndim}D")
        if len(self.origin) != vals.ndim or len(self.spacing) != vals.ndim:
            raise ValueError("origin and spacing must have one entry per axis")
        if any(h <= 0 for h in self.spacing):
            raise ValueError(f"grid spacing must be strictly positive, got {self.spacing}")
        if not np.all(np.isfinite(vals)):
            raise ValueError("field values must be finite")

    @property
    def dim(self) -> int:
        return self.values.ndim

    def position(self, index: tuple[int, ...]) -> Vec3:
        """3D position of a grid node, zero-padded beyond the field dim."""
        coords = [self.origin[a] + self.spacing[a] * index[a] for a in range(self.dim)]
        coords += [0.0] * (3 - self.dim)
        return Vec3(*coords)

    def interior_indices(self):
        ranges = [range(1, n - 1) for n in self.values.shape]
        return itertools.product(*ranges)


def dual_of_linear(f: LinearStressFunction) -> DualPoint:
    """Exact Legendre dual of a linear cell: (phi, xi) = (-a0, grad f)."""
    return DualPoint(phi=-f.a0, xi=f.grad)


def diagram_of_stress(fld: SampledField) -> list[DualSample]:
    """Gradient-map transform of a sampled field.

    For every interior sample x the gradient xi = grad f is taken by
    central differences and phi = xi . x - f(x).  Boundary samples are
    dropped (no centered stencil there).  Output order is lexicographic
    in the grid index, so results are deterministic.
    """
    shape = fld.values.shape
    if any(n < 3 for n in shape):
        raise ValueError(
            f"need at least 3 samples per axis for an interior gradient, got shape {shape}"
        )
    grads = np.gradient(fld.values, *fld.spacing, edge_order=2)
    if fld.dim == 1:
        grads = [grads]

    out: list[DualSample] = []
    for index in fld.interior_indices():
        x = fld.position(index)
        g = [grads[a][index] for a in range(fld.dim)] + [0.0] * (3 - fld.dim)
        xi = Vec3(*map(float, g))
        f_val = float(fld.values[index])
        out.append(DualSample(xi=xi, phi=xi.dot(x) - f_val, source_x=x))
    return out


def dual_loop_from_cells(cells: Sequence[LinearStressFunction]) -> list[DualPoint]:
    """Dual polygon vertices for cells arranged cyclically around a cut.

    The cells must be listed in right-hand-screw order about the cut
    normal; the returned dual points keep that cyclic order.  Fewer than
    three cells is accepted and simply yields a degenerate polygon.
    """
    return [dual_of_linear(c) for c in cells]


def check_compatibility(
    cell_a: LinearStressFunction,
    cell_b: LinearStressFunction,
    face_normal: Vec3,
    face_offset: float,
    tol: float = FACE_TOL,
) -> bool:
    """True iff f_a - f_b vanishes identically on the plane n.x = d.

    The difference is linear, so it vanishes on the face exactly when
    its gradient is parallel to the face normal and the remaining
    constant cancels on the plane.  Tolerance is absolute on the
    coefficients (inputs are user-specified exact values).
    """
    nn = face_normal.dot(face_normal)
    if nn == 0.0:
        raise ValueError("face normal must be nonzero")
    dg = cell_a.grad - cell_b.grad
    lam = dg.dot(face_normal) / nn
    tangential = dg - lam * face_normal
    if tangential.norm() > tol:
        return False
    residual = (cell_a.a0 - cell_b.a0) + lam * face_offset
    return abs(residual) <= tol
