"""Depth-aware drag-editing displacement fields.

Given an image grid, a depth map, an editing mask and handle-to-target
drag pairs, this package computes a hybrid displacement field (depth-ratio
scaled + radially decaying, fused by a distance-adaptive weight), splits
multi-handle edits into conflict-free Voronoi sub-regions, applies the
field by forward warping with hole interpolation, and exposes the whole
pipeline as a library, a CLI (``field``) and an HTTP service.
"""

from .fusion import FusionParams, fuse_fields, fusion_weights
from .geometry import (
    DisplacementField,
    DragPair,
    DragSet,
    GeometryParams,
    geometry_field,
)
from .grid import (
    Circle,
    FloatGrid,
    GridError,
    ImageGrid,
    Mask,
    Point,
    bilinear_sample,
    distance_map,
    enclosing_circle,
    invert_disparity,
    load_image,
    load_mask,
    read_float_grid,
    round_half_away,
    save_image,
    save_mask,
    write_float_grid,
)
from .partition import (
    AggregationStrategy,
    ConflictDiagnostics,
    FieldParams,
    RegionLabels,
    conflict_score,
    multi_point_field,
    pair_field,
    partition_mask,
    per_pair_fields,
)
from .pipeline import EditOutcome, run_edit, validate_params
from .plane import PlaneParams, plane_field, ray_circle_extent
from .viz import visualize_field, visualize_scalar
from .warp import (
    DiffusionSchedule,
    NoisePredictor,
    SeededRandomPredictor,
    WarpResult,
    fill_holes,
    forward_warp,
    identity_predictor,
    masked_stochastic_step,
    sigma_schedule,
    zero_predictor,
)

__version__ = "0.1.0"

__all__ = [
    "AggregationStrategy",
    "Circle",
    "ConflictDiagnostics",
    "DiffusionSchedule",
    "DisplacementField",
    "DragPair",
    "DragSet",
    "EditOutcome",
    "FieldParams",
    "FloatGrid",
    "FusionParams",
    "GeometryParams",
    "GridError",
    "ImageGrid",
    "Mask",
    "NoisePredictor",
    "PlaneParams",
    "Point",
    "RegionLabels",
    "SeededRandomPredictor",
    "WarpResult",
    "bilinear_sample",
    "conflict_score",
    "distance_map",
    "enclosing_circle",
    "fill_holes",
    "forward_warp",
    "fuse_fields",
    "fusion_weights",
    "geometry_field",
    "identity_predictor",
    "invert_disparity",
    "load_image",
    "load_mask",
    "masked_stochastic_step",
    "multi_point_field",
    "pair_field",
    "partition_mask",
    "per_pair_fields",
    "plane_field",
    "ray_circle_extent",
    "read_float_grid",
    "round_half_away",
    "run_edit",
    "save_image",
    "save_mask",
    "sigma_schedule",
    "validate_params",
    "visualize_field",
    "visualize_scalar",
    "write_float_grid",
    "zero_predictor",
]
