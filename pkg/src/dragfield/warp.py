"""Forward warping, hole interpolation, and masked stochastic refinement.

Forward mapping relocates each masked source cell's value to the cell its
displacement points at (destination components rounded half away from
zero). Collisions are resolved by source depth (smaller depth = nearer =
wins), falling back to raster order, so the result never depends on
evaluation order. Vacated cells that receive nothing are holes, filled by
inverse-distance-weighted interpolation and recorded in a mask so the
stochastic update can re-noise exactly the interpolated area.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np
from scipy.spatial import cKDTree

from .geometry import DisplacementField
from .grid import FloatGrid, GridError, ImageGrid, Mask, round_half_away

NoisePredictor = Callable[[np.ndarray, int], np.ndarray]


@dataclass(frozen=True)
class WarpResult:
    grid: ImageGrid
    interpolated: Mask      # cells filled by interpolation (empty before fill)
    holes: Mask             # cells still awaiting a value (empty after fill)
    holes_before_fill: int
    collisions: int


def forward_warp(
    grid: ImageGrid,
    field: DisplacementField,
    mask: Mask,
    depth: FloatGrid | None = None,
) -> WarpResult:
    """Relocate masked cells along the field; see the module doc for policy.

    Relocated values may land on any in-bounds cell; out-of-bounds
    destinations are dropped. Unmasked cells keep their value unless a
    relocation overwrites them.
    """
    h, w = mask.height, mask.width
    if grid.values.shape[:2] != (h, w) or field.dx.shape != (h, w):
        raise GridError(
            f"dimension mismatch: grid {grid.values.shape[:2]}, field {field.dx.shape}, mask {(h, w)}"
        )
    if depth is not None and depth.values.shape != (h, w):
        raise GridError(f"depth {depth.values.shape} does not match grid {(h, w)}")

    src_y, src_x = np.nonzero(mask.bits)
    shift_x = round_half_away(field.dx[src_y, src_x]).astype(np.int64)
    shift_y = round_half_away(field.dy[src_y, src_x]).astype(np.int64)
    dst_x = src_x + shift_x
    dst_y = src_y + shift_y
    in_bounds = (dst_x >= 0) & (dst_x < w) & (dst_y >= 0) & (dst_y < h)
    src_y, src_x = src_y[in_bounds], src_x[in_bounds]
    dst_y, dst_x = dst_y[in_bounds], dst_x[in_bounds]

    out = grid.values.copy()
    out[mask.bits] = 0.0  # vacate every masked source

    dest_key = dst_y * w + dst_x
    priority = depth.values[src_y, src_x] if depth is not None else np.zeros(len(src_y))
    raster = src_y * w + src_x
    order = np.lexsort((raster, priority, dest_key))
    sorted_dest = dest_key[order]
    is_winner = np.ones(len(order), dtype=bool)
    is_winner[1:] = sorted_dest[1:] != sorted_dest[:-1]
    winners = order[is_winner]
    collisions = int(len(order) - is_winner.sum())

    out[dst_y[winners], dst_x[winners]] = grid.values[src_y[winners], src_x[winners]]
    received = np.zeros((h, w), dtype=bool)
    received[dst_y[winners], dst_x[winners]] = True
    holes = mask.bits & ~received

    return WarpResult(
        grid=ImageGrid(out),
        interpolated=Mask(np.zeros((h, w), dtype=bool)),
        holes=Mask(holes),
        holes_before_fill=int(holes.sum()),
        collisions=collisions,
    )


def fill_holes(result: WarpResult, k: int = 4, power: float = 2.0) -> WarpResult:
    """Fill each hole from its k nearest valid cells, weighted by 1/d^power."""
    holes = result.holes.bits
    if not holes.any():
        return result
    valid = ~holes
    n_valid = int(valid.sum())
    if n_valid == 0:
        raise GridError("cannot fill holes: every cell is a hole")

    valid_y, valid_x = np.nonzero(valid)
    hole_y, hole_x = np.nonzero(holes)
    tree = cKDTree(np.column_stack([valid_x, valid_y]))
    kk = min(k, n_valid)
    dist, idx = tree.query(np.column_stack([hole_x, hole_y]), k=kk)
    if kk == 1:
        dist = dist[:, None]
        idx = idx[:, None]

    weights = 1.0 / dist ** power
    values = result.grid.values[valid_y[idx], valid_x[idx]]  # (holes, k, C)
    filled = (weights[:, :, None] * values).sum(axis=1) / weights.sum(axis=1)[:, None]

    out = result.grid.values.copy()
    out[hole_y, hole_x] = filled
    return replace(
        result,
        grid=ImageGrid(out),
        interpolated=Mask(holes.copy()),
        holes=Mask(np.zeros_like(holes)),
    )


# ---------------------------------------------------------------------------
# Stochastic refinement of the interpolated region


@dataclass(frozen=True)
class DiffusionSchedule:
    """Cumulative signal fractions per timestep plus the stochasticity knob."""

    alphabar: tuple[float, ...]
    eta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "alphabar", tuple(float(a) for a in self.alphabar))
        if len(self.alphabar) < 1:
            raise GridError("schedule needs at least one timestep")
        for a in self.alphabar:
            if not (0.0 < a <= 1.0):
                raise GridError(f"alphabar values must lie in (0, 1], got {a}")
        for prev, cur in zip(self.alphabar, self.alphabar[1:]):
            if cur > prev:
                raise GridError("alphabar must be non-increasing in t")
        if not (0.0 <= self.eta <= 1.0):
            raise GridError(f"eta must lie in [0, 1], got {self.eta}")


def sigma_schedule(schedule: DiffusionSchedule, t: int) -> float:
    """Noise scale eta * sqrt((1-a_{t-1})/(1-a_t)) * sqrt(1 - a_t/a_{t-1})."""
    if t < 1 or t >= len(schedule.alphabar):
        raise GridError(f"timestep {t} out of range [1, {len(schedule.alphabar) - 1}]")
    a_t = schedule.alphabar[t]
    a_prev = schedule.alphabar[t - 1]
    if a_t >= 1.0:
        raise GridError(f"alphabar[{t}] = 1 leaves the noise scale undefined")
    return schedule.eta * math.sqrt((1.0 - a_prev) / (1.0 - a_t)) * math.sqrt(1.0 - a_t / a_prev)


def masked_stochastic_step(
    z: np.ndarray,
    z0_hat: np.ndarray,
    predictor: NoisePredictor,
    schedule: DiffusionSchedule,
    t: int,
    region: Mask,
    rng: np.random.Generator,
) -> np.ndarray:
    """One reverse step that injects seeded noise only inside ``region``.

    z_{t-1} = sqrt(a_{t-1}) * z0_hat
            + sqrt(1 - a_{t-1} - sigma_t^2 * M) * predictor(z, t)
            + sigma_t * (noise * M)

    Outside the region the variance-reduction term vanishes and the update
    is exactly the deterministic rule. Operates on raw float arrays: the
    update's codomain is unbounded, so callers clamp for display.
    """
    z = np.asarray(z, dtype=np.float64)
    z0_hat = np.asarray(z0_hat, dtype=np.float64)
    if z.shape != z0_hat.shape:
        raise GridError(f"z {z.shape} and z0_hat {z0_hat.shape} shapes differ")
    if z.shape[:2] != region.bits.shape:
        raise GridError(f"region {region.bits.shape} does not match grid {z.shape[:2]}")
    sigma = sigma_schedule(schedule, t)
    a_prev = schedule.alphabar[t - 1]
    if sigma * sigma > 1.0 - a_prev + 1e-15 and region.bits.any():
        raise GridError(
            f"variance underflow: sigma^2 = {sigma * sigma:.6g} exceeds 1 - alphabar[t-1] = {1.0 - a_prev:.6g}"
        )
    region_f = region.bits.astype(np.float64)
    while region_f.ndim < z.ndim:
        region_f = region_f[..., None]
    eps_theta = np.asarray(predictor(z, t), dtype=np.float64)
    if eps_theta.shape != z.shape:
        raise GridError(f"predictor returned shape {eps_theta.shape}, expected {z.shape}")
    if not np.isfinite(eps_theta).all():
        raise GridError("predictor returned non-finite values")
    variance = 1.0 - a_prev - (sigma * sigma) * region_f
    out = math.sqrt(a_prev) * z0_hat + np.sqrt(variance) * eps_theta
    if sigma != 0.0 and region.bits.any():
        noise = rng.standard_normal(z.shape)
        out = out + sigma * (noise * region_f)
    return out


# Test doubles for the noise predictor.

def zero_predictor(z: np.ndarray, t: int) -> np.ndarray:
    return np.zeros_like(z)


def identity_predictor(z: np.ndarray, t: int) -> np.ndarray:
    return np.array(z, copy=True)


class SeededRandomPredictor:
    """Deterministic stand-in predictor: a fixed-seed stream of normal noise."""

    def __init__(self, seed: int):
        self._rng = np.random.default_rng(seed)

    def __call__(self, z: np.ndarray, t: int) -> np.ndarray:
        return self._rng.standard_normal(np.asarray(z).shape)
