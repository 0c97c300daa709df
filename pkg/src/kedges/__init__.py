"""Exact census, crossing-number and motion toolkit for planar point
sets in general position.

All coordinates are integers and every count is exact; no floating
point enters a combinatorial result.  Point indices are 0-based
everywhere.
"""

from .geometry import (
    GeneralPositionError,
    OrderType,
    Orientation,
    Point,
    PointSet,
    convex_hull,
    cross,
    hull_size,
    is_extreme,
    order_type,
    orientation,
    validate_general_position,
)
from .census import (
    CumulativeEdgeVector,
    EdgeVector,
    cumulative,
    edge_depth,
    edge_vector_bruteforce,
    edge_vector_sweep,
    good_k_edge_count,
    halving_edge_count,
    max_depth,
    oriented_edge_counts,
    strictly_inside_triangle,
)
from .crossings import (
    CensusError,
    CrossingReport,
    crossings_bruteforce,
    crossings_via_identity,
    exact_lcr_from_E,
    identity_weighted_sum,
    is_convex_quadrilateral,
    quadruple_constant,
)
from .bounds import (
    BoundRow,
    BoundTable,
    adaptive_simpson,
    asymptotic_coefficient,
    bound_refined,
    bound_refined_sum,
    bound_simple,
    bound_sqrt,
    bound_table,
    crossing_lower_bound_exact,
    epsilon_integral,
    halving_upper_bound,
    sqrt_bound_crossover,
    sqrt_bound_dominates,
)
from .motion import (
    ConfigSummary,
    HalvingRay,
    MotionStep,
    MutationEvent,
    Ray,
    ReductionTrace,
    SimultaneousEventError,
    apply_motion,
    config_summary,
    halving_ray,
    halving_ray_pair,
    halving_ray_stable,
    is_halving_ray,
    motion_events,
    reduce_to_triangle,
)
from .generators import KINDS, GenerationError, GeneratorSpec, generate
from .fileio import (
    PointSetFormatError,
    format_point_set,
    load_point_set,
    packaged_point_set,
    parse_point_set,
    save_point_set,
)
from .checks import containing_triangle, verify_point_set

__version__ = "0.1.0"

__all__ = [
    "BoundRow",
    "BoundTable",
    "CensusError",
    "ConfigSummary",
    "CrossingReport",
    "CumulativeEdgeVector",
    "EdgeVector",
    "GeneralPositionError",
    "GenerationError",
    "GeneratorSpec",
    "HalvingRay",
    "KINDS",
    "MotionStep",
    "MutationEvent",
    "OrderType",
    "Orientation",
    "Point",
    "PointSet",
    "PointSetFormatError",
    "Ray",
    "ReductionTrace",
    "SimultaneousEventError",
    "adaptive_simpson",
    "apply_motion",
    "asymptotic_coefficient",
    "bound_refined",
    "bound_refined_sum",
    "bound_simple",
    "bound_sqrt",
    "bound_table",
    "config_summary",
    "containing_triangle",
    "convex_hull",
    "cross",
    "crossing_lower_bound_exact",
    "crossings_bruteforce",
    "crossings_via_identity",
    "cumulative",
    "edge_depth",
    "edge_vector_bruteforce",
    "edge_vector_sweep",
    "epsilon_integral",
    "exact_lcr_from_E",
    "format_point_set",
    "generate",
    "good_k_edge_count",
    "halving_edge_count",
    "halving_ray",
    "halving_ray_pair",
    "halving_ray_stable",
    "halving_upper_bound",
    "hull_size",
    "identity_weighted_sum",
    "is_convex_quadrilateral",
    "is_extreme",
    "is_halving_ray",
    "load_point_set",
    "max_depth",
    "motion_events",
    "order_type",
    "orientation",
    "oriented_edge_counts",
    "packaged_point_set",
    "parse_point_set",
    "quadruple_constant",
    "reduce_to_triangle",
    "save_point_set",
    "sqrt_bound_crossover",
    "sqrt_bound_dominates",
    "strictly_inside_triangle",
    "validate_general_position",
    "verify_point_set",
]
