"""Structural-loop geometry: segments, cuts, fixture builders."""

import math

import pytest

from frameduals.bivector import Vec3
from frameduals.frame import (
    ArcSegment,
    ClosureError,
    CutPoint,
    DualLoop,
    StraightSegment,
    StructuralLoop,
    build_rect_with_arcs,
    build_rectangle,
    position_at,
)
from frameduals.legendre import DualPoint

from conftest import assert_vec_close


class TestRectangle:
    def test_unit_square_corners(self):
        loop = build_rectangle(1.0, 1.0)
        corners = {seg.start.as_tuple() for seg in loop.segments}
        assert corners == {(-1, -1, 0), (-1, 1, 0), (1, 1, 0), (1, -1, 0)}

    def test_perimeter(self):
        b, w = 2.0, 1.0
        loop = build_rectangle(b, w)
        perim = sum((seg.end - seg.start).norm() for seg in loop.segments)
        assert perim == pytest.approx(4 * (b + w), abs=1e-12)

    def test_closure(self):
        loop = build_rectangle(3.0, 0.5)
        for m, seg in enumerate(loop.segments):
            nxt = loop.segments[(m + 1) % 4]
            assert (nxt.start_point() - seg.end_point()).norm() == 0.0

    @pytest.mark.parametrize("b,w", [(0.0, 1.0), (1.0, -2.0)])
    def test_rejects_bad_dimensions(self, b, w):
        with pytest.raises(ValueError, match="positive"):
            build_rectangle(b, w)


class TestRectWithArcs:
    def test_arc_endpoints_meet_straights(self):
        loop = build_rect_with_arcs(2.0, 1.0)
        for m, seg in enumerate(loop.segments):
            nxt = loop.segments[(m + 1) % len(loop.segments)]
            gap = (nxt.start_point() - seg.end_point()).norm()
            assert gap <= 1e-9

    def test_out_of_plane_offset_is_w(self):
        w = 1.5
        loop = build_rect_with_arcs(2.0, w)
        top = position_at(loop, CutPoint(0, math.pi / 2))
        assert abs(top.z) == pytest.approx(w, abs=1e-12)

    def test_arc_ab_parameterization(self):
        b, w = 2.0, 1.0
        loop = build_rect_with_arcs(b, w)
        assert_vec_close(position_at(loop, CutPoint(0, 0.0)), Vec3(-b, -w, 0.0), 1e-12)
        assert_vec_close(position_at(loop, CutPoint(0, math.pi)), Vec3(-b, w, 0.0), 1e-12)
        for psi in (0.3, 1.2, 2.8):
            x = position_at(loop, CutPoint(0, psi))
            assert x.x == pytest.approx(-b, abs=1e-12)
            assert x.z == pytest.approx(w * math.sin(psi), abs=1e-12)

    def test_other_arc_is_in_plane(self):
        loop = build_rect_with_arcs(2.0, 1.0)
        for psi in (0.0, 0.7, math.pi / 2, 2.5, math.pi):
            assert position_at(loop, CutPoint(2, psi)).z == 0.0


class TestPositionAt:
    def test_straight_midpoint(self):
        loop = build_rectangle(2.0, 1.0)
        seg = loop.segments[1]
        mid = position_at(loop, CutPoint(1, 0.5))
        assert_vec_close(mid, 0.5 * (seg.start + seg.end), 1e-15)

    def test_rectangle_corner_parameters(self):
        b, w = 2.0, 1.0
        loop = build_rectangle(b, w)
        assert position_at(loop, CutPoint(0, 0.0)) == Vec3(-b, -w, 0.0)
        assert position_at(loop, CutPoint(1, 0.0)) == Vec3(-b, w, 0.0)
        assert position_at(loop, CutPoint(2, 0.0)) == Vec3(b, w, 0.0)
        assert position_at(loop, CutPoint(3, 0.0)) == Vec3(b, -w, 0.0)

    def test_junction_continuity(self):
        loop = build_rect_with_arcs(2.0, 1.0)
        for m, seg in enumerate(loop.segments):
            lo, hi = seg.param_range
            nxt_idx = (m + 1) % len(loop.segments)
            nxt_lo = loop.segments[nxt_idx].param_range[0]
            left = position_at(loop, CutPoint(m, hi))
            right = position_at(loop, CutPoint(nxt_idx, nxt_lo))
            assert (left - right).norm() <= 1e-9

    def test_out_of_range_segment(self):
        loop = build_rectangle(1.0, 1.0)
        with pytest.raises(IndexError, match="segment index"):
            position_at(loop, CutPoint(4, 0.5))

    def test_out_of_range_parameter(self):
        loop = build_rectangle(1.0, 1.0)
        with pytest.raises(ValueError, match="parameter"):
            position_at(loop, CutPoint(0, 1.5))


class TestSegmentValidation:
    def test_straight_needs_distinct_endpoints(self):
        with pytest.raises(ValueError, match="distinct"):
            StraightSegment(Vec3(1, 2, 3), Vec3(1, 2, 3))

    def test_arc_needs_unit_basis(self):
        with pytest.raises(ValueError, match="unit length"):
            ArcSegment(Vec3(), 1.0, Vec3(2, 0, 0), Vec3(0, 1, 0), 0.0, math.pi)

    def test_arc_needs_orthogonal_basis(self):
        with pytest.raises(ValueError, match="orthogonal"):
            ArcSegment(Vec3(), 1.0, Vec3(1, 0, 0), Vec3(1, 0, 0), 0.0, math.pi)

    def test_arc_needs_positive_radius(self):
        with pytest.raises(ValueError, match="radius"):
            ArcSegment(Vec3(), 0.0, Vec3(1, 0, 0), Vec3(0, 1, 0), 0.0, math.pi)


class TestLoopValidation:
    def test_open_chain_rejected_with_gap(self):
        with pytest.raises(ClosureError) as err:
            StructuralLoop(
                [
                    StraightSegment(Vec3(0, 0, 0), Vec3(1, 0, 0)),
                    StraightSegment(Vec3(1, 0, 0), Vec3(1, 1, 0)),
                    StraightSegment(Vec3(1, 1, 0), Vec3(0.5, 0.5, 0)),
                ]
            )
        assert err.value.gap == pytest.approx(math.hypot(0.5, 0.5), abs=1e-12)
        assert "gap magnitude" in str(err.value)

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="at least one"):
            StructuralLoop([])


class TestDualLoop:
    def test_pressure_must_be_positive(self):
        with pytest.raises(ValueError, match="positive"):
            DualLoop([DualPoint(0.0, Vec3())], p=0.0)

    def test_empty_is_legal(self):
        dual = DualLoop([], p=1.0)
        assert len(dual) == 0
        assert len(dual.to_loop4()) == 0

    def test_to_loop4_places_phi_on_h(self):
        dual = DualLoop([DualPoint(2.5, Vec3(1, 2, 3))], p=1.0)
        v = dual.to_loop4().vertices[0]
        assert (v.h, v.i, v.j, v.k) == (2.5, 1.0, 2.0, 3.0)
