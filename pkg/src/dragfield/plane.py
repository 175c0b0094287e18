"""Radially decaying displacement fields bounded by an enclosing circle.

The plane field attenuates the drag vector with distance from the handle:
at distance P along a ray whose intersection with the enclosing circle is
at distance L, the retained fraction is 1 - (P/L)^beta, clamped at zero
once the circle is crossed. Influence is full at the handle and fades to
nothing on the circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import DisplacementField, DragPair, require_handle_in_mask
from .grid import Circle, FloatGrid, GridError, Mask, Point, distance_map

_COMPASS = [
    (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0),
    (math.sqrt(0.5), math.sqrt(0.5)), (math.sqrt(0.5), -math.sqrt(0.5)),
    (-math.sqrt(0.5), math.sqrt(0.5)), (-math.sqrt(0.5), -math.sqrt(0.5)),
]


@dataclass(frozen=True)
class PlaneParams:
    beta: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.beta) and self.beta > 0.0):
            raise GridError(f"beta must be finite and > 0, got {self.beta}")


def _extent_along(handle: Point, circle: Circle, vx: float, vy: float) -> float:
    mx = circle.center.x - handle.x
    my = circle.center.y - handle.y
    proj = vx * mx + vy * my
    disc = proj * proj - (mx * mx + my * my - circle.radius * circle.radius)
    return proj + math.sqrt(disc)


def ray_circle_extent(handle: Point, circle: Circle, mask: Mask) -> FloatGrid:
    """Distance from the handle to the circle along the ray toward each cell.

    Solves |h + t*v - O|^2 = r^2 for the positive root
    t = v.(O - h) + sqrt((v.(O - h))^2 - (|O - h|^2 - r^2)).
    At the handle cell itself the direction is undefined; the minimum extent
    over 8 compass directions is used there.
    """
    dist_to_center = math.hypot(handle.x - circle.center.x, handle.y - circle.center.y)
    if dist_to_center >= circle.radius:
        raise GridError(
            f"handle {handle} must lie strictly inside the circle "
            f"(distance {dist_to_center:.6g} vs radius {circle.radius:.6g})"
        )
    if not _circle_encloses_mask(circle, mask):
        raise GridError("circle does not enclose the mask")

    h, w = mask.height, mask.width
    ys = np.arange(h, dtype=np.float64)[:, None]
    xs = np.arange(w, dtype=np.float64)[None, :]
    qx = xs - handle.x
    qy = ys - handle.y
    norm = np.hypot(qx, qy)
    at_handle = norm == 0.0
    safe_norm = np.where(at_handle, 1.0, norm)
    vx = qx / safe_norm
    vy = qy / safe_norm
    mx = circle.center.x - handle.x
    my = circle.center.y - handle.y
    proj = vx * mx + vy * my
    disc = proj * proj - (mx * mx + my * my - circle.radius * circle.radius)
    extent = proj + np.sqrt(disc)
    if at_handle.any():
        limit = min(_extent_along(handle, circle, cx, cy) for cx, cy in _COMPASS)
        extent = np.where(at_handle, limit, extent)
    return FloatGrid(extent)


def _circle_encloses_mask(circle: Circle, mask: Mask, tol: float = 1e-6) -> bool:
    ys, xs = np.nonzero(mask.bits)
    if ys.size == 0:
        return True
    d = np.hypot(xs - circle.center.x, ys - circle.center.y)
    return bool(d.max() <= circle.radius + tol)


def plane_field(mask: Mask, pair: DragPair, params: PlaneParams, circle: Circle) -> DisplacementField:
    """Drag vector attenuated by 1 - (P/L)^beta on the mask, zero past the circle."""
    require_handle_in_mask(mask, pair.handle)
    extent = ray_circle_extent(pair.handle, circle, mask)
    p = distance_map(mask, pair.handle)
    influence = np.maximum(1.0 - (p.values / extent.values) ** params.beta, 0.0)
    dvx, dvy = pair.drag
    fdx = np.where(mask.bits, influence * dvx, 0.0)
    fdy = np.where(mask.bits, influence * dvy, 0.0)
    return DisplacementField(fdx, fdy)
