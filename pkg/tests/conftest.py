"""Shared helpers: tolerance checks and seeded random generators."""

from __future__ import annotations

import random

import pytest

from frameduals.bivector import BASIS_PLANES, Bivector4, Loop4, Vec3, Vec4
from frameduals.frame import DualLoop, StraightSegment, StructuralLoop
from frameduals.legendre import DualPoint


def assert_vec_close(a: Vec3, b: Vec3, tol: float, scale: float = 1.0) -> None:
    for name in ("x", "y", "z"):
        av, bv = getattr(a, name), getattr(b, name)
        assert abs(av - bv) <= tol * scale, f"{name}: {av} vs {bv} (tol {tol * scale:.3e})"


def assert_bivector_close(a: Bivector4, b: Bivector4, tol: float, scale: float = 1.0) -> None:
    for plane in BASIS_PLANES:
        av, bv = getattr(a, plane), getattr(b, plane)
        assert abs(av - bv) <= tol * scale, f"{plane}: {av} vs {bv} (tol {tol * scale:.3e})"


def coord_scale(*loops: Loop4) -> float:
    """Natural magnitude of shoelace terms, for relative tolerances."""
    cmax = 0.0
    n = 0
    for loop in loops:
        n = max(n, len(loop.vertices))
        for v in loop.vertices:
            cmax = max(cmax, abs(v.h), abs(v.i), abs(v.j), abs(v.k))
    return 1.0 + n * cmax * cmax


def rand_vec4(rng: random.Random, lo: float = -10.0, hi: float = 10.0) -> Vec4:
    return Vec4(*(rng.uniform(lo, hi) for _ in range(4)))


def rand_loop4(rng: random.Random, n: int, lo: float = -10.0, hi: float = 10.0) -> Loop4:
    return Loop4([rand_vec4(rng, lo, hi) for _ in range(n)])


def rand_vec3(rng: random.Random, lo: float = -5.0, hi: float = 5.0) -> Vec3:
    return Vec3(*(rng.uniform(lo, hi) for _ in range(3)))


def rand_dual(rng: random.Random, n: int | None = None) -> DualLoop:
    """Random dual loop: coordinates uniform in [-5, 5], 3 to 8 vertices."""
    if n is None:
        n = rng.randint(3, 8)
    verts = [DualPoint(phi=rng.uniform(-5, 5), xi=rand_vec3(rng)) for _ in range(n)]
    return DualLoop(verts, p=rng.uniform(0.25, 4.0))


def rand_polygon_loop(rng: random.Random, n: int | None = None) -> StructuralLoop:
    """Random closed polygon of straight bars in 3D."""
    if n is None:
        n = rng.randint(3, 8)
    pts = [rand_vec3(rng) for _ in range(n)]
    return StructuralLoop(
        [StraightSegment(pts[m], pts[(m + 1) % n]) for m in range(n)]
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240718)
