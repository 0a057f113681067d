"""Exact enumeration, counting, and rendering of rotational sets of the
angle d-tupling map on the circle, with pullback laminations."""

from .circle import (
    CircleAngle,
    InvalidAngle,
    InvalidDigit,
    InvalidItinerary,
    Itinerary,
    angle_of,
    as_angle,
    check_degree,
    dtupling,
    format_angle,
    interval_index,
    itinerary_of,
    make_angle,
    parse_angle,
    parse_itinerary,
    preimages,
)
from .counting import binomial, count_coverings, count_sets, max_intra_preimages
from .emit import (
    ParseError,
    RenderOptions,
    SchemaError,
    from_json,
    to_json,
    to_svg,
)
from .laminations import (
    Lamination,
    Leaf,
    Polygon,
    PullbackObstruction,
    crossing_violations,
    lamination_of,
    polygons_of,
    pullback,
)
from .oracle import (
    BudgetExceeded,
    CheckRecord,
    OracleReport,
    PeriodicOrbit,
    brute_force_orbits,
    brute_force_sets,
    cross_check,
)
from .orbits import (
    DEFAULT_BUDGET,
    NoPrincipal,
    NotPeriodic,
    OrbitRecord,
    RotationalOrbit,
    canonical_itinerary,
    enumerate_rotational_orbits,
    format_rotation,
    make_rotation,
    orbit_from_itinerary,
    orbit_of,
    parse_rotation,
    principal_preimage,
    rotation_number,
    rotational_orbit_of,
)
from .rotsets import (
    DegreeMismatch,
    GapClassification,
    GapPlacement,
    Group,
    InvalidPlacement,
    NotRotationalSet,
    ReconstructionInconsistent,
    RotationMismatch,
    RotationalSet,
    classify_gaps,
    enumerate_placements,
    enumerate_sets,
    placement_of,
    set_from_placement,
    sets_containing,
    validate_set,
)

__version__ = "0.1.0"
