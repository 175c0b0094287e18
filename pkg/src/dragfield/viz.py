"""Color-coded visualization of displacement fields and scalar grids.

Displacement fields use an HSV wheel: hue encodes direction (rightward is
red at 0 degrees, angles grow counter-clockwise on screen so upward lands
on the cyan side), saturation encodes magnitude, zero displacement renders
white. Scalar grids are min-max normalized through the fixed warm-to-cool
table in :mod:`dragfield._cmapdata` (warm = small values = close, cool =
large values = far); a constant grid maps to the table's mid color.
"""

from __future__ import annotations

import numpy as np

from ._cmapdata import WARM_COOL
from .geometry import DisplacementField
from .grid import FloatGrid, GridError, ImageGrid

_WARM_COOL_ARR = np.asarray(WARM_COOL, dtype=np.float64)


def field_hue_degrees(field: DisplacementField) -> np.ndarray:
    """Per-cell hue angle in [0, 360): atan2(-dy, dx) so screen-up is 90."""
    return np.mod(np.degrees(np.arctan2(-field.dy, field.dx)), 360.0)


def visualize_field(field: DisplacementField, max_magnitude: float | None = None) -> ImageGrid:
    """Render a displacement field on the HSV direction wheel.

    ``max_magnitude=None`` auto-scales to the field's largest magnitude.
    """
    mag = np.hypot(field.dx, field.dy)
    if max_magnitude is None:
        max_magnitude = float(mag.max())
        if max_magnitude == 0.0:
            max_magnitude = 1.0
    if not max_magnitude > 0.0:
        raise GridError(f"max_magnitude must be positive, got {max_magnitude}")
    hue = field_hue_degrees(field)
    sat = np.clip(mag / max_magnitude, 0.0, 1.0)
    val = np.ones_like(sat)
    return ImageGrid(_hsv_to_rgb(hue, sat, val))


def visualize_scalar(grid: FloatGrid) -> ImageGrid:
    """Map a scalar grid through the fixed warm-to-cool colormap."""
    v = grid.values
    lo = float(v.min())
    hi = float(v.max())
    if hi == lo:
        norm = np.full_like(v, 0.5)
    else:
        norm = (v - lo) / (hi - lo)
    idx = np.rint(norm * 255.0).astype(np.intp)
    return ImageGrid(_WARM_COOL_ARR[idx])


def _hsv_to_rgb(hue_deg: np.ndarray, sat: np.ndarray, val: np.ndarray) -> np.ndarray:
    """Vectorized HSV -> RGB, hue in degrees."""
    h = (hue_deg / 60.0) % 6.0
    i = np.floor(h)
    f = h - i
    p = val * (1.0 - sat)
    q = val * (1.0 - sat * f)
    t = val * (1.0 - sat * (1.0 - f))
    i = i.astype(np.intp)
    r = np.choose(i, [val, q, p, p, t, val])
    g = np.choose(i, [t, val, val, q, p, p])
    b = np.choose(i, [p, p, t, val, val, q])
    return np.stack([r, g, b], axis=-1)
