"""Core grid containers and geometry utilities.

Conventions shared by every module:
  * x grows rightward (column index), y grows downward (row index),
  * cell centers sit at integer coordinates, top-left cell is (0, 0),
  * arrays are row-major, indexed [y, x],
  * depth is metric-style: larger value = farther from the camera
    (use :func:`invert_disparity` to adapt disparity-style predictors).

All containers freeze their backing arrays after construction; operations
are pure functions and safe to call concurrently.
"""

from __future__ import annotations

import math
import random
import struct
from dataclasses import dataclass

import numpy as np
from PIL import Image

FGRID_MAGIC = b"FGRD"

_WELZL_RNG_SEED = 0x5EC1  # fixed: results must not vary across runs


class GridError(ValueError):
    """Invalid grid construction or grid operation input."""


def _freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class FloatGrid:
    """H x W scalar field (depth maps, distance maps, fusion weights)."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 2 or v.size == 0:
            raise GridError(f"FloatGrid needs a non-empty 2-D array, got shape {v.shape}")
        if not np.isfinite(v).all():
            raise GridError("FloatGrid values must be finite")
        object.__setattr__(self, "values", _freeze(v))

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]

    @classmethod
    def full(cls, width: int, height: int, value: float) -> "FloatGrid":
        return cls(np.full((height, width), value, dtype=np.float64))


@dataclass(frozen=True)
class ImageGrid:
    """H x W x C per-cell channel values in [0, 1]; C is 1, 3 or 4."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim == 2:
            v = v[:, :, None]
        if v.ndim != 3 or v.shape[2] not in (1, 3, 4) or v.size == 0:
            raise GridError(f"ImageGrid needs H x W x C with C in (1, 3, 4), got shape {v.shape}")
        if not np.isfinite(v).all():
            raise GridError("ImageGrid values must be finite")
        if v.min() < 0.0 or v.max() > 1.0:
            raise GridError("ImageGrid values must lie in [0, 1]")
        object.__setattr__(self, "values", _freeze(v))

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]

    @property
    def channels(self) -> int:
        return self.values.shape[2]


@dataclass(frozen=True)
class Mask:
    """H x W boolean editing region."""

    bits: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.bits)
        if b.dtype != np.bool_:
            b = b.astype(bool)
        if b.ndim != 2 or b.size == 0:
            raise GridError(f"Mask needs a non-empty 2-D boolean array, got shape {b.shape}")
        object.__setattr__(self, "bits", _freeze(b))

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    def count(self) -> int:
        return int(self.bits.sum())

    def is_empty(self) -> bool:
        return not bool(self.bits.any())

    @classmethod
    def full(cls, width: int, height: int) -> "Mask":
        return cls(np.ones((height, width), dtype=bool))


@dataclass(frozen=True)
class Point:
    """Continuous cell coordinates; x rightward, y downward."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GridError(f"Point coordinates must be finite, got ({self.x}, {self.y})")

    def cell(self) -> tuple[int, int]:
        """Nearest cell (x, y), rounding half away from zero."""
        return int(round_half_away(self.x)), int(round_half_away(self.y))


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise GridError(f"Circle radius must be a positive finite number, got {self.radius}")

    def contains(self, p: Point, tol: float = 1e-6) -> bool:
        return math.hypot(p.x - self.center.x, p.y - self.center.y) <= self.radius + tol


def round_half_away(x):
    """Round half away from zero, elementwise for arrays."""
    if isinstance(x, np.ndarray):
        return np.copysign(np.floor(np.abs(x) + 0.5), x)
    return math.copysign(math.floor(abs(x) + 0.5), x)


def bilinear_sample(grid: FloatGrid, p: Point) -> float:
    """Bilinear value of the grid at a continuous point, edge-clamped.

    At integer coordinates this returns the cell value exactly.
    """
    h, w = grid.values.shape
    x = min(max(p.x, 0.0), w - 1.0)
    y = min(max(p.y, 0.0), h - 1.0)
    x0 = int(math.floor(x))
    y0 = int(math.floor(y))
    x1 = min(x0 + 1, w - 1)
    y1 = min(y0 + 1, h - 1)
    fx = x - x0
    fy = y - y0
    v = grid.values
    top = v[y0, x0] * (1.0 - fx) + v[y0, x1] * fx
    bot = v[y1, x0] * (1.0 - fx) + v[y1, x1] * fx
    return float(top * (1.0 - fy) + bot * fy)


# ---------------------------------------------------------------------------
# PNG I/O


def load_image(path) -> ImageGrid:
    """Load an 8- or 16-bit PNG (gray, RGB or RGBA) scaled to [0, 1]."""
    try:
        img = Image.open(path)
        img.load()
    except FileNotFoundError:
        raise
    except Exception as exc:
        raise GridError(f"cannot read PNG {path!r}: {exc}") from exc
    if img.format != "PNG":
        raise GridError(f"{path!r} is not a PNG file (format={img.format!r})")
    mode = img.mode
    if mode in ("L", "RGB", "RGBA"):
        arr = np.asarray(img, dtype=np.float64) / 255.0
    elif mode in ("I;16", "I"):
        arr = np.asarray(img, dtype=np.float64)
        if arr.min() < 0 or arr.max() > 65535:
            raise GridError(f"{path!r}: 16-bit gray values out of range")
        arr = arr / 65535.0
    else:
        raise GridError(f"{path!r}: unsupported PNG color type/bit depth (mode={mode!r})")
    return ImageGrid(arr)


def save_image(grid: ImageGrid, path) -> None:
    """Write an ImageGrid as an 8-bit PNG."""
    arr = np.rint(grid.values * 255.0).astype(np.uint8)
    if grid.channels == 1:
        img = Image.fromarray(arr[:, :, 0], mode="L")
    elif grid.channels == 3:
        img = Image.fromarray(arr, mode="RGB")
    else:
        img = Image.fromarray(arr, mode="RGBA")
    img.save(path, format="PNG")


def load_mask(path) -> Mask:
    """Load a gray PNG as a mask; values >= 128 (of 255) are true."""
    img = load_image(path)
    if img.channels != 1:
        # tolerate RGB(A) masks by using the first channel
        vals = img.values[:, :, 0]
    else:
        vals = img.values[:, :, 0]
    return Mask(vals >= 128.0 / 255.0)


def save_mask(mask: Mask, path) -> None:
    arr = np.where(mask.bits, 255, 0).astype(np.uint8)
    Image.fromarray(arr, mode="L").save(path, format="PNG")


# ---------------------------------------------------------------------------
# FGRID binary format: b"FGRD", u32 LE width, u32 LE height,
# then width*height little-endian float32, row-major, top-left first.


def write_float_grid(grid: FloatGrid, path) -> None:
    payload = grid.values.astype("<f4").tobytes(order="C")
    with open(path, "wb") as fh:
        fh.write(FGRID_MAGIC)
        fh.write(struct.pack("<II", grid.width, grid.height))
        fh.write(payload)


def read_float_grid(path) -> FloatGrid:
    with open(path, "rb") as fh:
        data = fh.read()
    if len(data) < 12 or data[:4] != FGRID_MAGIC:
        raise GridError(f"{path!r}: bad FGRID magic")
    width, height = struct.unpack_from("<II", data, 4)
    expected = 12 + 4 * width * height
    if len(data) != expected:
        raise GridError(
            f"{path!r}: size mismatch, header says {width}x{height} "
            f"({expected} bytes) but file has {len(data)} bytes"
        )
    values = np.frombuffer(data, dtype="<f4", offset=12).reshape(height, width)
    if not np.isfinite(values).all():
        raise GridError(f"{path!r}: payload contains non-finite values")
    return FloatGrid(values.astype(np.float64))


# ---------------------------------------------------------------------------
# Depth preprocessing


def invert_disparity(grid: FloatGrid, eps: float = 1e-6) -> FloatGrid:
    """Convert disparity-style maps (larger = closer) to engine depth.

    out = 1 / (grid + eps); requires eps > 0 and non-negative input.
    """
    if not eps > 0.0:
        raise GridError(f"eps must be positive, got {eps}")
    if grid.values.min() < 0.0:
        raise GridError("disparity values must be non-negative")
    return FloatGrid(1.0 / (grid.values + eps))


# ---------------------------------------------------------------------------
# Distance map and minimum enclosing circle


def distance_map(mask: Mask, p: Point) -> FloatGrid:
    """Euclidean distance from every cell center to p (computed everywhere)."""
    ys = np.arange(mask.height, dtype=np.float64)[:, None]
    xs = np.arange(mask.width, dtype=np.float64)[None, :]
    return FloatGrid(np.hypot(xs - p.x, ys - p.y))


def enclosing_circle(mask: Mask) -> Circle:
    """Minimum enclosing circle of the true cell centers.

    Radius is floored at 0.5 cells so a degenerate single-cell mask still
    yields a usable propagation extent.
    """
    if mask.is_empty():
        raise GridError("enclosing_circle of an empty mask")
    pts = _row_extreme_points(mask.bits)
    cx, cy, r = _welzl(pts)
    return Circle(Point(cx, cy), max(r, 0.5))


def _row_extreme_points(bits: np.ndarray) -> list[tuple[float, float]]:
    """Per-row min-x and max-x true cells; a superset of the hull vertices."""
    ys, xs = np.nonzero(bits)
    order = np.lexsort((xs, ys))
    ys, xs = ys[order], xs[order]
    row_ids, first = np.unique(ys, return_index=True)
    last = np.r_[first[1:], len(ys)] - 1
    pts = set()
    for rid, f, l in zip(row_ids, first, last):
        pts.add((float(xs[f]), float(rid)))
        pts.add((float(xs[l]), float(rid)))
    return sorted(pts)


def _welzl(points: list[tuple[float, float]]) -> tuple[float, float, float]:
    """Randomized incremental minimum enclosing circle (deterministic seed)."""
    pts = list(points)
    random.Random(_WELZL_RNG_SEED).shuffle(pts)
    c = None
    for i, p in enumerate(pts):
        if c is None or not _in_circle(c, p):
            c = _mec_one(pts[: i + 1], p)
    assert c is not None
    return c


def _mec_one(points, p):
    c = (p[0], p[1], 0.0)
    for i, q in enumerate(points):
        if not _in_circle(c, q):
            if c[2] == 0.0:
                c = _diameter_circle(p, q)
            else:
                c = _mec_two(points[: i + 1], p, q)
    return c


def _mec_two(points, p, q):
    circ = _diameter_circle(p, q)
    left = None
    right = None
    px, py = p
    qx, qy = q
    for r in points:
        if _in_circle(circ, r):
            continue
        cross = _cross(px, py, qx, qy, r[0], r[1])
        c = _circumcircle(p, q, r)
        if c is None:
            continue
        if cross > 0.0 and (left is None or _cross(px, py, qx, qy, c[0], c[1]) > _cross(px, py, qx, qy, left[0], left[1])):
            left = c
        elif cross < 0.0 and (right is None or _cross(px, py, qx, qy, c[0], c[1]) < _cross(px, py, qx, qy, right[0], right[1])):
            right = c
    if left is None and right is None:
        return circ
    if left is None:
        return right
    if right is None:
        return left
    return left if left[2] <= right[2] else right


def _diameter_circle(a, b):
    cx = (a[0] + b[0]) / 2.0
    cy = (a[1] + b[1]) / 2.0
    r = max(math.hypot(cx - a[0], cy - a[1]), math.hypot(cx - b[0], cy - b[1]))
    return (cx, cy, r)


def _circumcircle(a, b, c):
    ox = (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0])) / 2.0
    oy = (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1])) / 2.0
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by)) * 2.0
    if d == 0.0:
        return None
    x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    r = max(math.hypot(x - a[0], y - a[1]), math.hypot(x - b[0], y - b[1]), math.hypot(x - c[0], y - c[1]))
    return (x, y, r)


_MEC_EPS = 1.0 + 1e-14


def _in_circle(c, p) -> bool:
    return math.hypot(p[0] - c[0], p[1] - c[1]) <= c[2] * _MEC_EPS


def _cross(x0, y0, x1, y1, x2, y2) -> float:
    return (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)
