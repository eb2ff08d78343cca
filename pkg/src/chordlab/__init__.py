"""Horizontal chord sets of continuous functions, and their application
to average-pace sub-intervals of race profiles."""

from .builders import (
    SHAPE_KINDS,
    SmoothFunction,
    SmoothShapeSpec,
    build_hopf,
    build_levy,
    eval_generalized,
    eval_smooth,
    smooth_chord_function,
)
from .intervals import (
    DEFAULT_TOL,
    AdditivityResult,
    BoundaryProjection,
    ClosedIntervalSet,
    GapList,
    Interval,
    ValidationError,
    ValidationReport,
    boundary_projections,
    complement_components,
    is_additive,
    validate_chord_spec,
)
from .io import (
    function_to_obj,
    interval_set_to_obj,
    load_json,
    parse_function,
    parse_interval_set,
    parse_profile,
    profile_to_obj,
    save_json,
    smooth_samples_to_obj,
    svg_for_curves,
    write_chord_scan,
)
from .oracle import (
    AdditivityCheck,
    ChordQueryResult,
    ChordScan,
    chord_set_scan,
    has_horizontal_chord,
    levit_bound,
    sign_changes,
    verify_complement_additivity,
)
from .piecewise import PiecewiseLinearFunction
from .race import (
    RaceProfile,
    WindowExtrema,
    build_adversarial_profile,
    exists_average_split,
    find_average_split,
    from_chord_function,
    to_chord_problem,
    window_time_extrema,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "SHAPE_KINDS",
    "AdditivityCheck",
    "AdditivityResult",
    "BoundaryProjection",
    "ChordQueryResult",
    "ChordScan",
    "ClosedIntervalSet",
    "GapList",
    "Interval",
    "PiecewiseLinearFunction",
    "RaceProfile",
    "SmoothFunction",
    "SmoothShapeSpec",
    "ValidationError",
    "ValidationReport",
    "WindowExtrema",
    "boundary_projections",
    "build_adversarial_profile",
    "build_hopf",
    "build_levy",
    "chord_set_scan",
    "complement_components",
    "eval_generalized",
    "eval_smooth",
    "exists_average_split",
    "find_average_split",
    "from_chord_function",
    "function_to_obj",
    "has_horizontal_chord",
    "interval_set_to_obj",
    "is_additive",
    "levit_bound",
    "load_json",
    "parse_function",
    "parse_interval_set",
    "parse_profile",
    "profile_to_obj",
    "save_json",
    "sign_changes",
    "smooth_chord_function",
    "smooth_samples_to_obj",
    "svg_for_curves",
    "to_chord_problem",
    "validate_chord_spec",
    "verify_complement_additivity",
    "window_time_extrema",
]
