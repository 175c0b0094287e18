"""Multi-handle aggregation: conflict-free partitioning and its alternatives.

With several drag pairs the editing mask is split into Voronoi sub-regions,
one per handle; each sub-region gets its own hybrid field (computed from its
own enclosing circle and distance map) and the final field is assembled
region by region, so opposing drags can never cancel each other. The three
soft alternatives (direct summation, inverse-pixel-distance weighting,
drag-magnitude weighting) are kept for ablation; they compute every
per-pair field over the full mask and blend them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .fusion import FusionParams, fuse_fields, fusion_weights
from .geometry import (
    DisplacementField,
    DragPair,
    DragSet,
    GeometryParams,
    geometry_field,
    require_handle_in_mask,
)
from .grid import Circle, FloatGrid, GridError, Mask, Point, distance_map, enclosing_circle
from .plane import PlaneParams, plane_field


class AggregationStrategy(Enum):
    CONFLICT_FREE_PARTITION = "partition"
    DIRECTLY_ADD = "add"
    PIXEL_DISTANCE = "pixel-distance"
    DRAG_MAGNITUDE = "drag-magnitude"

    @classmethod
    def from_name(cls, name: str) -> "AggregationStrategy":
        for member in cls:
            if member.value == name:
                return member
        valid = ", ".join(m.value for m in cls)
        raise GridError(f"unknown strategy {name!r}, expected one of: {valid}")


@dataclass(frozen=True)
class FieldParams:
    geometry: GeometryParams = GeometryParams()
    plane: PlaneParams = PlaneParams()
    fusion: FusionParams = FusionParams()

    @classmethod
    def from_scalars(cls, alpha: float = 1.0, beta: float = 1.0, gamma_scale: float = 1.0) -> "FieldParams":
        return cls(GeometryParams(alpha=alpha), PlaneParams(beta=beta), FusionParams(gamma_scale=gamma_scale))


@dataclass(frozen=True)
class RegionLabels:
    """Per-cell handle assignment: -1 outside the mask, [0, k) inside."""

    labels: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.labels, dtype=np.int32)
        if a.ndim != 2 or a.size == 0:
            raise GridError(f"RegionLabels needs a 2-D array, got shape {a.shape}")
        a.flags.writeable = False
        object.__setattr__(self, "labels", a)

    @property
    def width(self) -> int:
        return self.labels.shape[1]

    @property
    def height(self) -> int:
        return self.labels.shape[0]

    def region_mask(self, i: int) -> Mask:
        return Mask(self.labels == i)


def _validate_handles(mask: Mask, handles: tuple[Point, ...]) -> None:
    if len(handles) == 0:
        raise GridError("at least one handle is required")
    seen = set()
    for h in handles:
        require_handle_in_mask(mask, h)
        key = (h.x, h.y)
        if key in seen:
            raise GridError(f"coincident handles at ({h.x}, {h.y})")
        seen.add(key)


def partition_mask(mask: Mask, handles: list[Point] | tuple[Point, ...]) -> RegionLabels:
    """Assign each masked cell to its nearest handle (ties to the lowest index)."""
    handles = tuple(handles)
    _validate_handles(mask, handles)
    dists = np.stack([distance_map(mask, h).values for h in handles], axis=0)
    nearest = np.argmin(dists, axis=0).astype(np.int32)  # argmin takes the first min: lowest index wins ties
    labels = np.where(mask.bits, nearest, np.int32(-1))
    return RegionLabels(labels)


def pair_field(
    depth: FloatGrid,
    mask: Mask,
    pair: DragPair,
    params: FieldParams,
    circle: Circle | None = None,
) -> DisplacementField:
    """Hybrid field of a single pair over a mask: fused plane + depth-aware."""
    if circle is None:
        circle = enclosing_circle(mask)
    f_d = geometry_field(depth, mask, pair, params.geometry)
    f_p = plane_field(mask, pair, params.plane, circle)
    p = distance_map(mask, pair.handle)
    lam = fusion_weights(p, circle, params.fusion)
    return fuse_fields(f_p, f_d, lam)


def per_pair_fields(
    depth: FloatGrid,
    mask: Mask,
    pairs: DragSet,
    params: FieldParams,
    strategy: AggregationStrategy,
) -> list[DisplacementField]:
    """The constituent fields a strategy aggregates.

    Partitioning restricts each field to its handle's sub-region; the soft
    strategies compute each field over the full mask.
    """
    _validate_handles(mask, pairs.handles)
    if strategy is AggregationStrategy.CONFLICT_FREE_PARTITION:
        labels = partition_mask(mask, pairs.handles)
        return [
            pair_field(depth, labels.region_mask(i), pairs[i], params)
            for i in range(len(pairs))
        ]
    circle = enclosing_circle(mask)
    return [pair_field(depth, mask, p, params, circle) for p in pairs]


def multi_point_field(
    depth: FloatGrid,
    mask: Mask,
    pairs: DragSet,
    params: FieldParams,
    strategy: AggregationStrategy = AggregationStrategy.CONFLICT_FREE_PARTITION,
) -> DisplacementField:
    """Aggregate the per-pair fields into the final displacement field."""
    fields = per_pair_fields(depth, mask, pairs, params, strategy)
    return aggregate_fields(mask, pairs, fields, strategy)


def aggregate_fields(
    mask: Mask,
    pairs: DragSet,
    fields: list[DisplacementField],
    strategy: AggregationStrategy,
) -> DisplacementField:
    if len(fields) != len(pairs):
        raise GridError(f"{len(fields)} fields for {len(pairs)} pairs")
    shape = mask.bits.shape

    if strategy in (AggregationStrategy.CONFLICT_FREE_PARTITION, AggregationStrategy.DIRECTLY_ADD):
        # partition sub-fields have disjoint supports, so plain summation
        # assembles the region-wise field; direct-add is literal summation
        dx = np.zeros(shape)
        dy = np.zeros(shape)
        for f in fields:
            dx += f.dx
            dy += f.dy
        return DisplacementField(dx, dy)

    if strategy is AggregationStrategy.PIXEL_DISTANCE:
        inv = np.stack([_inverse_distance(mask, p.handle) for p in pairs], axis=0)
        at_handle = np.isinf(inv)  # at most one per cell: coincident handles are rejected
        finite_inv = np.where(at_handle, 0.0, inv)
        denom = finite_inv.sum(axis=0, keepdims=True)
        weights = np.where(
            at_handle.any(axis=0, keepdims=True),
            at_handle.astype(np.float64),
            finite_inv / np.where(denom == 0.0, 1.0, denom),
        )
        dx = np.zeros(shape)
        dy = np.zeros(shape)
        for w, f in zip(weights, fields):
            dx += w * f.dx
            dy += w * f.dy
        return DisplacementField(dx, dy)

    if strategy is AggregationStrategy.DRAG_MAGNITUDE:
        mags = np.array([p.magnitude for p in pairs])
        total = mags.sum()
        if total == 0.0:
            return DisplacementField.zero(mask.width, mask.height)
        dx = np.zeros(shape)
        dy = np.zeros(shape)
        for m, f in zip(mags / total, fields):
            dx += m * f.dx
            dy += m * f.dy
        return DisplacementField(dx, dy)

    raise GridError(f"unhandled strategy {strategy!r}")


def _inverse_distance(mask: Mask, handle: Point) -> np.ndarray:
    """1/P per cell, inf where the handle sits exactly on the cell center.

    The aggregation turns the inf into a one-hot weight for that handle;
    coincident handles are rejected upstream so at most one P_i vanishes
    per cell.
    """
    p = distance_map(mask, handle).values
    zero = p == 0.0
    return np.where(zero, np.inf, 1.0 / np.where(zero, 1.0, p))


@dataclass(frozen=True)
class ConflictDiagnostics:
    """How much of the per-pair displacement survives aggregation (1 = all)."""

    score: float
    evaluated_cells: int
    min_cell_ratio: float


def conflict_score(
    pairs: DragSet,
    field_per_pair: list[DisplacementField],
    combined: DisplacementField,
    eps: float = 1e-12,
) -> ConflictDiagnostics:
    """Mean over supported cells of |combined| / max(sum_i |f_i|, eps).

    Evaluated on cells where the per-pair fields carry any displacement;
    with no such cells (all-zero drags) the score is 1 by convention.
    """
    if len(field_per_pair) != len(pairs):
        raise GridError(f"{len(field_per_pair)} fields for {len(pairs)} pairs")
    for f in field_per_pair:
        if f.dx.shape != combined.dx.shape:
            raise GridError("per-pair field dimensions do not match the combined field")
    total = np.zeros(combined.dx.shape)
    for f in field_per_pair:
        total += f.magnitude()
    support = total > 0.0
    if not support.any():
        return ConflictDiagnostics(score=1.0, evaluated_cells=0, min_cell_ratio=1.0)
    ratio = combined.magnitude()[support] / np.maximum(total[support], eps)
    return ConflictDiagnostics(
        score=float(ratio.mean()),
        evaluated_cells=int(support.sum()),
        min_cell_ratio=float(ratio.min()),
    )
