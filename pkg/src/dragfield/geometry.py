"""Depth-ratio scaled displacement fields.

A drag pair (handle h, target t) defines the drag vector d = t - h. The
depth-aware field scales d per cell by (depth_at_handle / depth_at_cell)
raised to ``alpha``: content closer to the camera than the handle moves
more, farther content moves less. The scale factor is clamped to
[1/ratio_cap, ratio_cap] so near-zero depths cannot throw destinations
off the grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .grid import FloatGrid, GridError, Mask, Point, bilinear_sample


@dataclass(frozen=True)
class DragPair:
    handle: Point
    target: Point

    @property
    def drag(self) -> tuple[float, float]:
        """Drag vector d = target - handle."""
        return (self.target.x - self.handle.x, self.target.y - self.handle.y)

    @property
    def magnitude(self) -> float:
        dx, dy = self.drag
        return math.hypot(dx, dy)


@dataclass(frozen=True)
class DragSet:
    pairs: tuple[DragPair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if len(self.pairs) == 0:
            raise GridError("DragSet needs at least one pair")

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __getitem__(self, i: int) -> DragPair:
        return self.pairs[i]

    @property
    def handles(self) -> tuple[Point, ...]:
        return tuple(p.handle for p in self.pairs)


@dataclass(frozen=True)
class DisplacementField:
    """Per-cell 2-D shift in cells; zero outside the owning mask."""

    dx: np.ndarray
    dy: np.ndarray

    def __post_init__(self):
        dx = np.asarray(self.dx, dtype=np.float64)
        dy = np.asarray(self.dy, dtype=np.float64)
        if dx.ndim != 2 or dx.shape != dy.shape or dx.size == 0:
            raise GridError(f"DisplacementField needs matching 2-D dx/dy, got {dx.shape} vs {dy.shape}")
        if not (np.isfinite(dx).all() and np.isfinite(dy).all()):
            raise GridError("DisplacementField values must be finite")
        dx.flags.writeable = False
        dy.flags.writeable = False
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "dy", dy)

    @property
    def width(self) -> int:
        return self.dx.shape[1]

    @property
    def height(self) -> int:
        return self.dx.shape[0]

    @classmethod
    def zero(cls, width: int, height: int) -> "DisplacementField":
        z = np.zeros((height, width), dtype=np.float64)
        return cls(z, z.copy())

    def magnitude(self) -> np.ndarray:
        return np.hypot(self.dx, self.dy)


@dataclass(frozen=True)
class GeometryParams:
    alpha: float = 1.0
    ratio_cap: float = 10.0

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha >= 0.0):
            raise GridError(f"alpha must be finite and >= 0, got {self.alpha}")
        if not (math.isfinite(self.ratio_cap) and self.ratio_cap > 1.0):
            raise GridError(f"ratio_cap must be finite and > 1, got {self.ratio_cap}")


def require_handle_in_mask(mask: Mask, handle: Point) -> tuple[int, int]:
    """Validate the handle lies on the grid and inside the mask; return its cell."""
    cx, cy = handle.cell()
    if not (0 <= cx < mask.width and 0 <= cy < mask.height):
        raise GridError(f"handle {handle} is outside the {mask.width}x{mask.height} grid")
    if not mask.bits[cy, cx]:
        raise GridError(f"handle {handle} is outside the editing mask")
    return cx, cy


def geometry_field(depth: FloatGrid, mask: Mask, pair: DragPair, params: GeometryParams) -> DisplacementField:
    """Depth-ratio scaled field: d * clamp((depth_h / depth)^alpha) on the mask."""
    if depth.values.shape != mask.bits.shape:
        raise GridError(f"depth {depth.values.shape} and mask {mask.bits.shape} dimensions differ")
    require_handle_in_mask(mask, pair.handle)
    ys, xs = np.nonzero(mask.bits)
    zeta = depth.values[ys, xs]
    if zeta.size and zeta.min() <= 0.0:
        raise GridError("depth must be strictly positive inside the mask")
    zeta_h = bilinear_sample(depth, pair.handle)
    if zeta_h <= 0.0:
        raise GridError(f"depth at handle must be positive, got {zeta_h}")
    scale = np.clip((zeta_h / zeta) ** params.alpha, 1.0 / params.ratio_cap, params.ratio_cap)
    dvx, dvy = pair.drag
    fdx = np.zeros(mask.bits.shape, dtype=np.float64)
    fdy = np.zeros(mask.bits.shape, dtype=np.float64)
    fdx[ys, xs] = scale * dvx
    fdy[ys, xs] = scale * dvy
    return DisplacementField(fdx, fdy)
