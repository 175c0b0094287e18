"""Shared end-to-end compute path used by both the CLI and the service.

ingest -> multi-point field -> forward warp -> hole fill -> optional
stochastic refinement of the interpolated region -> visualization +
report. Everything is a pure function of the inputs and the seed, so
identical requests produce identical artifacts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import DisplacementField, DragSet
from .grid import FloatGrid, GridError, ImageGrid, Mask
from .partition import (
    AggregationStrategy,
    ConflictDiagnostics,
    FieldParams,
    RegionLabels,
    aggregate_fields,
    conflict_score,
    partition_mask,
    per_pair_fields,
)
from .warp import (
    DiffusionSchedule,
    WarpResult,
    fill_holes,
    forward_warp,
    masked_stochastic_step,
    sigma_schedule,
    zero_predictor,
)

# Validation bounds for user-supplied parameters; wider values produce
# unbounded fields that warp content off-grid.
ALPHA_RANGE = (0.0, 5.0)
BETA_RANGE = (0.0, 5.0)  # exclusive below
GAMMA_RANGE = (0.0, 5.0)
ETA_RANGE = (0.0, 1.0)

# Refinement schedule for the interpolated region: close to 1 so the
# deterministic part barely rescales pixel values while eta still
# controls a visible noise amplitude (sigma ~ 0.05 at eta = 1).
REFINE_ALPHABAR = (0.995, 0.99)
REFINE_T = 1


def validate_params(alpha: float, beta: float, gamma_scale: float, eta: float) -> None:
    if not (ALPHA_RANGE[0] <= alpha <= ALPHA_RANGE[1]):
        raise GridError(f"alpha must lie in [{ALPHA_RANGE[0]}, {ALPHA_RANGE[1]}], got {alpha}")
    if not (BETA_RANGE[0] < beta <= BETA_RANGE[1]):
        raise GridError(f"beta must lie in ({BETA_RANGE[0]}, {BETA_RANGE[1]}], got {beta}")
    if not (GAMMA_RANGE[0] <= gamma_scale <= GAMMA_RANGE[1]):
        raise GridError(f"gamma must lie in [{GAMMA_RANGE[0]}, {GAMMA_RANGE[1]}], got {gamma_scale}")
    if not (ETA_RANGE[0] <= eta <= ETA_RANGE[1]):
        raise GridError(f"eta must lie in [{ETA_RANGE[0]}, {ETA_RANGE[1]}], got {eta}")


@dataclass(frozen=True)
class EditOutcome:
    field: DisplacementField
    per_pair: list[DisplacementField]
    labels: RegionLabels | None
    warp: WarpResult
    output: ImageGrid
    diagnostics: ConflictDiagnostics
    report: dict


def run_edit(
    image: ImageGrid,
    depth: FloatGrid,
    mask: Mask,
    pairs: DragSet,
    params: FieldParams,
    strategy: AggregationStrategy = AggregationStrategy.CONFLICT_FREE_PARTITION,
    eta: float = 0.0,
    seed: int = 0,
    fill_k: int = 4,
) -> EditOutcome:
    validate_params(params.geometry.alpha, params.plane.beta, params.fusion.gamma_scale, eta)
    if mask.is_empty():
        raise GridError("editing mask is empty")

    fields = per_pair_fields(depth, mask, pairs, params, strategy)
    combined = aggregate_fields(mask, pairs, fields, strategy)
    labels = None
    if strategy is AggregationStrategy.CONFLICT_FREE_PARTITION:
        labels = partition_mask(mask, pairs.handles)

    warped = forward_warp(image, combined, mask, depth)
    filled = fill_holes(warped, k=fill_k)
    output = _refine_interpolated(filled, eta, seed)
    diag = conflict_score(pairs, fields, combined)

    report = {
        "holes": filled.holes_before_fill,
        "collisions": filled.collisions,
        "conflict_score": diag.score,
        "params_echo": {
            "alpha": params.geometry.alpha,
            "beta": params.plane.beta,
            "gamma": params.fusion.gamma_scale,
            "strategy": strategy.value,
            "eta": eta,
            "seed": seed,
        },
    }
    return EditOutcome(
        field=combined,
        per_pair=fields,
        labels=labels,
        warp=filled,
        output=output,
        diagnostics=diag,
        report=report,
    )


def _refine_interpolated(filled: WarpResult, eta: float, seed: int) -> ImageGrid:
    """Re-noise the interpolated cells with the seeded masked update.

    The update runs with a near-one schedule and the zero predictor, and
    only the cells inside the interpolated mask are replaced, so an edit
    with no holes (or eta = 0) passes the warped image through untouched.
    """
    region = filled.interpolated
    if eta == 0.0 or not region.bits.any():
        return filled.grid
    schedule = DiffusionSchedule(alphabar=REFINE_ALPHABAR, eta=eta)
    rng = np.random.default_rng(seed)
    stepped = masked_stochastic_step(
        filled.grid.values, filled.grid.values, zero_predictor, schedule, REFINE_T, region, rng
    )
    region_b = region.bits[..., None]
    out = np.where(region_b, np.clip(stepped, 0.0, 1.0), filled.grid.values)
    return ImageGrid(out)


def refinement_sigma(eta: float) -> float:
    """Noise amplitude the refinement step applies inside holes at this eta."""
    return sigma_schedule(DiffusionSchedule(alphabar=REFINE_ALPHABAR, eta=eta), REFINE_T)
