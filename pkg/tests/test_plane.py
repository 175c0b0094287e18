import math

import numpy as np
import pytest

from dragfield import (
    Circle,
    DragPair,
    GridError,
    Mask,
    Point,
    PlaneParams,
    distance_map,
    plane_field,
    ray_circle_extent,
)
from conftest import disk_mask
from oracles import eval_plane_cell, ray_march_extent


def _full_mask(w, h):
    return Mask(np.ones((h, w), dtype=bool))


class TestRayCircleExtent:
    def test_handle_at_center_gives_radius_everywhere(self):
        circle = Circle(Point(8, 8), 7.5)
        mask = disk_mask(17, 17, 8, 8, 7)
        ell = ray_circle_extent(Point(8, 8), circle, mask)
        assert np.all(ell.values == 7.5)

    def test_forward_ray(self):
        # handle (0,0), circle center (2,0), r=4: +x exit at x=6
        circle = Circle(Point(2, 0), 4.0)
        mask = Mask(np.zeros((1, 6), dtype=bool) | (np.arange(6)[None, :] < 6))
        ell = ray_circle_extent(Point(0, 0), circle, mask)
        assert ell.values[0, 3] == pytest.approx(6.0, abs=1e-12)

    def test_backward_ray(self):
        # handle 2 right of center: -x exit lies 2 cells behind the handle
        circle = Circle(Point(6.0, 4.0), 4.0)
        bits = np.zeros((9, 12), dtype=bool)
        bits[4, 3:9] = True
        ell = ray_circle_extent(Point(4.0, 4.0), circle, Mask(bits))
        # cell (0, 4) lies in the -x direction from the handle
        expected = ray_march_extent(4.0, 4.0, 6.0, 4.0, 4.0, 0.0, 4.0)
        assert ell.values[4, 0] == pytest.approx(expected, abs=1e-6)
        assert ell.values[4, 0] == pytest.approx(2.0, abs=1e-9)

    def test_all_extents_positive(self, rng):
        for _ in range(20):
            w = h = 16
            cx = rng.uniform(5, 10)
            cy = rng.uniform(5, 10)
            r = rng.uniform(4, 7)
            hx = cx + rng.uniform(-0.8, 0.8) * r * 0.5
            hy = cy + rng.uniform(-0.8, 0.8) * r * 0.5
            mask = disk_mask(w, h, cx, cy, min(r - 1, 3))
            ell = ray_circle_extent(Point(hx, hy), Circle(Point(cx, cy), r), mask)
            assert ell.values.min() > 0.0

    def test_matches_ray_march_oracle(self, rng):
        # spec property: within 0.5 cells of a brute-force march
        for _ in range(60):
            cx = rng.uniform(6, 10)
            cy = rng.uniform(6, 10)
            r = rng.uniform(3, 6)
            ang = rng.uniform(0, 2 * math.pi)
            rad = rng.uniform(0, 0.85) * r
            hx = cx + rad * math.cos(ang)
            hy = cy + rad * math.sin(ang)
            mask = disk_mask(16, 16, cx, cy, 1.5)
            ell = ray_circle_extent(Point(hx, hy), Circle(Point(cx, cy), r), mask)
            for _ in range(4):
                qx = int(rng.integers(0, 16))
                qy = int(rng.integers(0, 16))
                if qx == hx and qy == hy:
                    continue
                expected = ray_march_extent(hx, hy, cx, cy, r, qx, qy)
                assert abs(ell.values[qy, qx] - expected) < 0.5

    def test_handle_cell_uses_compass_minimum(self):
        # off-center handle: nearest boundary lies along -x
        circle = Circle(Point(6, 4), 4.0)
        bits = np.zeros((9, 12), dtype=bool)
        bits[4, 3:9] = True
        ell = ray_circle_extent(Point(3.0, 4.0), circle, Mask(bits))
        assert ell.values[4, 3] == pytest.approx(1.0, abs=1e-12)  # to circle's left edge at x=2

    def test_rejects_handle_outside_circle(self):
        mask = _full_mask(4, 4)
        with pytest.raises(GridError, match="strictly inside"):
            ray_circle_extent(Point(0, 0), Circle(Point(10, 10), 2.0), mask)

    def test_rejects_handle_on_circle(self):
        mask = Mask(np.ones((1, 1), dtype=bool))
        with pytest.raises(GridError, match="strictly inside"):
            ray_circle_extent(Point(2, 0), Circle(Point(0, 0), 2.0), mask)

    def test_rejects_circle_not_enclosing_mask(self):
        mask = _full_mask(10, 10)
        with pytest.raises(GridError, match="enclose"):
            ray_circle_extent(Point(1, 1), Circle(Point(1, 1), 2.0), mask)


class TestPlaneField:
    def _setup(self):
        mask = disk_mask(17, 17, 8, 8, 6)
        circle = Circle(Point(8, 8), 8.0)
        return mask, circle

    def test_full_drag_at_handle(self):
        mask, circle = self._setup()
        pair = DragPair(Point(8, 8), Point(12, 5))
        f = plane_field(mask, pair, PlaneParams(beta=1.0), circle)
        assert f.dx[8, 8] == 4.0
        assert f.dy[8, 8] == -3.0

    def test_half_distance_beta_one(self):
        mask, circle = self._setup()
        pair = DragPair(Point(8, 8), Point(10, 8))
        f = plane_field(mask, pair, PlaneParams(beta=1.0), circle)
        # handle at center: L = 8 everywhere; cell (12,8) has P = 4 = L/2
        assert f.dx[8, 12] == pytest.approx(1.0, abs=1e-12)  # (1 - 1/2) * 2

    def test_half_distance_beta_two(self):
        mask, circle = self._setup()
        pair = DragPair(Point(8, 8), Point(10, 8))
        f = plane_field(mask, pair, PlaneParams(beta=2.0), circle)
        assert f.dx[8, 12] == pytest.approx(1.5, abs=1e-12)  # (1 - 1/4) * 2

    def test_zero_on_circle(self):
        bits = np.zeros((17, 17), dtype=bool)
        bits[8, 0:17] = True
        mask = Mask(bits)
        circle = Circle(Point(8, 8), 8.0)
        pair = DragPair(Point(8, 8), Point(10, 8))
        f = plane_field(mask, pair, PlaneParams(beta=1.0), circle)
        assert f.dx[8, 0] == 0.0  # P = 8 = L
        assert f.dx[8, 16] == 0.0

    def test_clamped_beyond_circle(self):
        # non-convex reach: cells farther than L keep zero, never negative
        bits = np.zeros((9, 20), dtype=bool)
        bits[4, 1:19] = True
        mask = Mask(bits)
        circle = Circle(Point(10, 4), 9.5)
        pair = DragPair(Point(3, 4), Point(5, 4))
        f = plane_field(mask, pair, PlaneParams(beta=1.0), circle)
        assert np.all(f.dx >= 0.0)

    def test_monotone_decay_along_ray(self):
        mask, circle = self._setup()
        pair = DragPair(Point(8, 8), Point(11, 8))
        f = plane_field(mask, pair, PlaneParams(beta=1.4), circle)
        row = f.dx[8, 8:14]
        assert np.all(np.diff(row) <= 1e-12)

    def test_beta_monotonicity_at_fixed_ratio(self):
        mask, circle = self._setup()
        pair = DragPair(Point(8, 8), Point(10, 8))
        kept = []
        for beta in (0.5, 1.0, 2.0, 4.0):
            f = plane_field(mask, pair, PlaneParams(beta=beta), circle)
            kept.append(f.dx[8, 12])  # P/L = 0.5 here
        assert all(b > a for a, b in zip(kept, kept[1:]))

    def test_zero_outside_mask(self):
        mask, circle = self._setup()
        pair = DragPair(Point(8, 8), Point(10, 8))
        f = plane_field(mask, pair, PlaneParams(), circle)
        assert np.all(f.dx[~mask.bits] == 0.0)

    def test_matches_cell_oracle(self, rng):
        mask = disk_mask(15, 15, 7, 7, 5)
        circle = Circle(Point(7.3, 6.8), 6.4)
        pair = DragPair(Point(6, 7), Point(9, 9))
        beta = 1.7
        f = plane_field(mask, pair, PlaneParams(beta=beta), circle)
        ell = ray_circle_extent(pair.handle, circle, mask)
        p = distance_map(mask, pair.handle)
        ys, xs = np.nonzero(mask.bits)
        for y, x in zip(ys, xs):
            ex, ey = eval_plane_cell(p.values[y, x], ell.values[y, x], beta, pair.drag)
            assert f.dx[y, x] == pytest.approx(ex, rel=1e-12, abs=1e-15)
            assert f.dy[y, x] == pytest.approx(ey, rel=1e-12, abs=1e-15)

    def test_params_validation(self):
        with pytest.raises(GridError):
            PlaneParams(beta=0.0)
        with pytest.raises(GridError):
            PlaneParams(beta=-1.0)
