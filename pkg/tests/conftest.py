import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dragfield import FloatGrid, ImageGrid, Mask, Point


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def disk_mask(width: int, height: int, cx: float, cy: float, r: float) -> Mask:
    ys = np.arange(height)[:, None]
    xs = np.arange(width)[None, :]
    return Mask((xs - cx) ** 2 + (ys - cy) ** 2 <= r * r)


def random_mask(rng, width: int, height: int, fill: float = 0.3) -> Mask:
    bits = rng.random((height, width)) < fill
    if not bits.any():
        bits[rng.integers(height), rng.integers(width)] = True
    return Mask(bits)


def random_blob_mask(rng, width: int, height: int) -> Mask:
    """A connected-ish random region: union of a few random disks."""
    ys = np.arange(height)[:, None]
    xs = np.arange(width)[None, :]
    bits = np.zeros((height, width), dtype=bool)
    for _ in range(rng.integers(1, 4)):
        cx = rng.uniform(2, width - 3)
        cy = rng.uniform(2, height - 3)
        r = rng.uniform(2, min(width, height) / 3)
        bits |= (xs - cx) ** 2 + (ys - cy) ** 2 <= r * r
    if not bits.any():
        bits[height // 2, width // 2] = True
    return Mask(bits)


def random_image(rng, width: int, height: int, channels: int = 3) -> ImageGrid:
    return ImageGrid(rng.random((height, width, channels)))


def masked_cell_point(rng, mask: Mask) -> Point:
    ys, xs = np.nonzero(mask.bits)
    i = rng.integers(len(ys))
    return Point(float(xs[i]), float(ys[i]))
