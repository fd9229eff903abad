"""Trade-off-space comparison, combination, and search for tunable approximation frameworks."""

from .core import (
    CapExceededError,
    Configuration,
    DataError,
    DegenerateFitError,
    DegenerateMathError,
    DegenerateRangeError,
    EmptySpaceError,
    EvaluatorMissError,
    FrontierCurve,
    Knob,
    NormalizationBounds,
    TradeoffPoint,
    TradeoffSpace,
    dominates,
    frontier_from_records,
    lower_convex_hull,
    normalization_bounds,
    normalized_euclidean_distance,
    pareto_extract,
    pareto_points,
    weakly_dominates,
)

__all__ = [
    "CapExceededError",
    "Configuration",
    "DataError",
    "DegenerateFitError",
    "DegenerateMathError",
    "DegenerateRangeError",
    "EmptySpaceError",
    "EvaluatorMissError",
    "FrontierCurve",
    "Knob",
    "NormalizationBounds",
    "TradeoffPoint",
    "TradeoffSpace",
    "dominates",
    "frontier_from_records",
    "lower_convex_hull",
    "normalization_bounds",
    "normalized_euclidean_distance",
    "pareto_extract",
    "pareto_points",
    "weakly_dominates",
]
