"""Synthetic depth maps and test scenes.

Depth estimation is out of scope; these generators produce plausible
depth inputs (larger = farther) for tests, demos and the CLI's
uniform-depth fallback.
"""

from __future__ import annotations

import numpy as np

from .grid import FloatGrid, ImageGrid


def uniform_depth(width: int, height: int, value: float = 1.0) -> FloatGrid:
    return FloatGrid.full(width, height, value)


def ramp_depth(width: int, height: int, near: float = 1.0, far: float = 4.0, axis: str = "y") -> FloatGrid:
    """Linear near-to-far gradient along x or y."""
    if axis == "y":
        ramp = np.linspace(near, far, height)[:, None] * np.ones((1, width))
    else:
        ramp = np.ones((height, 1)) * np.linspace(near, far, width)[None, :]
    return FloatGrid(ramp)


def bumpy_depth(width: int, height: int, seed: int, base: float = 2.0, amplitude: float = 1.5) -> FloatGrid:
    """Smooth random depth: a few superposed Gaussian bumps over a base plane."""
    rng = np.random.default_rng(seed)
    ys = np.arange(height, dtype=np.float64)[:, None]
    xs = np.arange(width, dtype=np.float64)[None, :]
    depth = np.full((height, width), base)
    for _ in range(4):
        cx = rng.uniform(0, width - 1)
        cy = rng.uniform(0, height - 1)
        s = rng.uniform(min(width, height) / 8.0, min(width, height) / 3.0)
        a = rng.uniform(-amplitude, amplitude)
        depth += a * np.exp(-((xs - cx) ** 2 + (ys - cy) ** 2) / (2.0 * s * s))
    return FloatGrid(np.maximum(depth, 0.25))


def checker_image(width: int, height: int, tile: int = 8) -> ImageGrid:
    """RGB checkerboard with a gentle gradient, handy for eyeballing warps."""
    ys = np.arange(height)[:, None]
    xs = np.arange(width)[None, :]
    check = ((ys // tile + xs // tile) % 2).astype(np.float64)
    r = 0.25 + 0.5 * check
    g = 0.25 + 0.5 * (1.0 - check)
    b = np.broadcast_to(np.linspace(0.2, 0.8, width)[None, :], (height, width)).copy()
    return ImageGrid(np.stack([r, g, b], axis=-1))
