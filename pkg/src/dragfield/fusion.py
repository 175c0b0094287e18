"""Distance-adaptive blending of plane and depth-aware fields.

The blend weight lambda = P / (P + gamma) grows from 0 at the handle
(pure plane field, precise local control) toward 1 far away (pure
depth-aware field, global structure). gamma is specified as a multiple
of the enclosing circle's diameter so the handoff scales with the
editing region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import DisplacementField
from .grid import Circle, FloatGrid, GridError


@dataclass(frozen=True)
class FusionParams:
    gamma_scale: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.gamma_scale) and self.gamma_scale >= 0.0):
            raise GridError(f"gamma_scale must be finite and >= 0, got {self.gamma_scale}")


def fusion_weights(p: FloatGrid, circle: Circle, params: FusionParams) -> FloatGrid:
    """lambda = P / (P + gamma) with gamma = gamma_scale * circle diameter.

    gamma = 0 is resolved as the pointwise limit: 1 wherever P > 0, 0 at P = 0.
    """
    gamma = params.gamma_scale * 2.0 * circle.radius
    if gamma == 0.0:
        lam = np.where(p.values > 0.0, 1.0, 0.0)
    else:
        lam = p.values / (p.values + gamma)
    return FloatGrid(lam)


def fuse_fields(f_p: DisplacementField, f_d: DisplacementField, lam: FloatGrid) -> DisplacementField:
    """Convex per-cell combination (1 - lambda) * f_p + lambda * f_d."""
    if not (f_p.dx.shape == f_d.dx.shape == lam.values.shape):
        raise GridError(
            f"dimension mismatch: plane {f_p.dx.shape}, geometry {f_d.dx.shape}, weights {lam.values.shape}"
        )
    w = lam.values
    return DisplacementField(
        (1.0 - w) * f_p.dx + w * f_d.dx,
        (1.0 - w) * f_p.dy + w * f_d.dy,
    )
