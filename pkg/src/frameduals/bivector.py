"""Exact 4D vector and bivector algebra on the basis (h, i, j, k).

The fourth axis h carries the stress-function value (f in body space,
phi in stress space); i, j, k span ordinary 3D space.  Oriented areas
live on the six basis planes, always ordered

    {j^k, k^i, i^j, i^h, j^h, k^h}

and every sign in this package flows from that single table.

Orientation convention: the shoelace area of a closed loop is
1/2 * sum of X[n+1] ^ X[n] (next vertex wedge current vertex).  Under
this convention a unit square traversed counterclockwise in the i-j
plane has area component ij = -1; reversing the traversal negates every
component.  See tests/test_bivector.py for the pinned fixture.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

__all__ = [
    "Vec3",
    "Vec4",
    "Bivector4",
    "Loop4",
    "BASIS_PLANES",
    "wedge",
    "shoelace_area",
    "project",
    "hodge_dual_3",
]

BASIS_PLANES = ("jk", "ki", "ij", "ih", "jh", "kh")


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} components must be finite, got {values}")


@dataclass(frozen=True)
class Vec3:
    """Point or vector in 3D space (i, j, k components)."""

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self) -> None:
        _require_finite("Vec3", self.x, self.y, self.z)

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, s: float) -> "Vec3":
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Vec4:
    """Point or displacement in 4D: h is the stress-function axis.

    Houses both body-space points (f, x, y, z) and stress-space points
    (phi, xi, eta, zeta); h has dimensions Length^2, the rest Length.
    """

    h: float = 0.0
    i: float = 0.0
    j: float = 0.0
    k: float = 0.0

    def __post_init__(self) -> None:
        _require_finite("Vec4", self.h, self.i, self.j, self.k)

    def __add__(self, other: "Vec4") -> "Vec4":
        return Vec4(self.h + other.h, self.i + other.i, self.j + other.j, self.k + other.k)

    def __sub__(self, other: "Vec4") -> "Vec4":
        return Vec4(self.h - other.h, self.i - other.i, self.j - other.j, self.k - other.k)

    def __neg__(self) -> "Vec4":
        return Vec4(-self.h, -self.i, -self.j, -self.k)

    def __mul__(self, s: float) -> "Vec4":
        return Vec4(self.h * s, self.i * s, self.j * s, self.k * s)

    __rmul__ = __mul__

    def spatial(self) -> Vec3:
        return Vec3(self.i, self.j, self.k)

    @classmethod
    def from_spatial(cls, v: Vec3, h: float = 0.0) -> "Vec4":
        return cls(h, v.x, v.y, v.z)


@dataclass(frozen=True)
class Bivector4:
    """Oriented area with six components on the fixed basis planes.

    jk, ki, ij are the spatial planes (Length^2); ih, jh, kh involve the
    stress-function axis (Length^3).  Negation flips every component,
    which encodes antisymmetry of the underlying wedge.
    """

    jk: float = 0.0
    ki: float = 0.0
    ij: float = 0.0
    ih: float = 0.0
    jh: float = 0.0
    kh: float = 0.0

    def __add__(self, other: "Bivector4") -> "Bivector4":
        return Bivector4(
            self.jk + other.jk,
            self.ki + other.ki,
            self.ij + other.ij,
            self.ih + other.ih,
            self.jh + other.jh,
            self.kh + other.kh,
        )

    def __sub__(self, other: "Bivector4") -> "Bivector4":
        return self + (-other)

    def __neg__(self) -> "Bivector4":
        return Bivector4(-self.jk, -self.ki, -self.ij, -self.ih, -self.jh, -self.kh)

    def __mul__(self, s: float) -> "Bivector4":
        return Bivector4(self.jk * s, self.ki * s, self.ij * s, self.ih * s, self.jh * s, self.kh * s)

    __rmul__ = __mul__

    def spatial_part(self) -> tuple[float, float, float]:
        return (self.jk, self.ki, self.ij)

    def h_part(self) -> tuple[float, float, float]:
        """Components on the (i^h, j^h, k^h) planes."""
        return (self.ih, self.jh, self.kh)

    def as_dict(self) -> dict[str, float]:
        return {p: getattr(self, p) for p in BASIS_PLANES}


@dataclass(frozen=True)
class Loop4:
    """Ordered cyclic list of Vec4 vertices, X[n+1] identified with X[1].

    Degenerate loops (repeated or collinear vertices, fewer than three
    vertices) are legal and simply have zero area where appropriate.
    """

    vertices: tuple[Vec4, ...]

    def __init__(self, vertices: Sequence[Vec4]) -> None:
        object.__setattr__(self, "vertices", tuple(vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def reversed(self) -> "Loop4":
        return Loop4(tuple(reversed(self.vertices)))

    def rotated(self, offset: int) -> "Loop4":
        n = len(self.vertices)
        if n == 0:
            return self
        offset %= n
        return Loop4(self.vertices[offset:] + self.vertices[:offset])

    def translated(self, shift: Vec4) -> "Loop4":
        return Loop4(tuple(v + shift for v in self.vertices))


def wedge(u: Vec4, v: Vec4) -> Bivector4:
    """Wedge product u ^ v: the elemental oriented area spanned by u, v.

    Bilinear and antisymmetric; wedge(u, u) is the zero bivector.
    """
    return Bivector4(
        jk=u.j * v.k - u.k * v.j,
        ki=u.k * v.i - u.i * v.k,
        ij=u.i * v.j - u.j * v.i,
        ih=u.i * v.h - u.h * v.i,
        jh=u.j * v.h - u.h * v.j,
        kh=u.k * v.h - u.h * v.k,
    )


def shoelace_area(loop: Union[Loop4, Sequence[Vec4]]) -> Bivector4:
    """Oriented area of a closed loop: 1/2 * sum of X[n+1] ^ X[n], cyclic.

    Origin-independent because the loop closes; equals the oriented area
    of any orientable surface spanning the loop.  Loops with fewer than
    three vertices have zero area.
    """
    verts = loop.vertices if isinstance(loop, Loop4) else tuple(loop)
    n = len(verts)
    acc = Bivector4()
    for a in range(n):
        acc = acc + wedge(verts[(a + 1) % n], verts[a])
    return 0.5 * acc


def project(b: Bivector4, plane: str) -> float:
    """Signed projected area of b on one of the six basis planes."""
    if plane not in BASIS_PLANES:
        raise ValueError(f"unknown basis plane {plane!r}; expected one of {BASIS_PLANES}")
    return getattr(b, plane)


def hodge_dual_3(b: Bivector4) -> Vec3:
    """3D Hodge dual of the spatial part: the vector normal to it.

    Maps (jk, ki, ij) to (i, j, k) components; the h-plane components
    are ignored.  For purely spatial u, v this turns wedge(u, v) into
    the ordinary cross product.
    """
    return Vec3(b.jk, b.ki, b.ij)
