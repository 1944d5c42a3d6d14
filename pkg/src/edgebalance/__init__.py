"""Balance a uniform convex body on the edge of a self-similar cavity.

Cutting an internally tangent, same-orientation scaled copy out of a convex
body moves the centroid of the remainder; one particular scale ratio puts it
exactly on the cavity edge.  That ratio solves a small polynomial in the
dimension k and the chord offset beta, and at beta = 1/2 it is the golden
ratio (k = 2), the tribonacci constant (k = 3), and so on toward 2.

The package ships the polynomial solver, generalized Fibonacci sequences as
an independent oracle for the constants, exact 2-D and k-D geometry for
planning and verifying excisions, a Monte Carlo centroid oracle, and a CLI.
"""

from .montecarlo import (
    McEstimate,
    bounding_box,
    contains,
    point_in_shape,
    sample_region_centroid,
)
from .ndim import (
    ExcisionPlanKd,
    Hyperball,
    Hypercube,
    ShapeKd,
    Simplex,
    balanced_boundary_point,
    barycentric_coordinates,
    centroid_kd,
    composite_centroid_kd,
    excision_with_ratio_kd,
    plan_excision_kd,
    shape_kd_from_dict,
    shape_kd_to_dict,
    verify_balance_kd,
    volume_kd,
)
from .planar import (
    BalanceReport,
    Chord,
    Circle,
    Ellipse,
    ExcisionPlan,
    Polygon,
    Shape2D,
    area,
    beta_complement,
    boundary_points,
    centroid,
    chord_through_centroid,
    composite_centroid,
    excision_with_ratio,
    find_balanced_chord,
    find_chord_with_beta,
    plan_excision,
    random_convex_polygon,
    regular_polygon,
    regular_polygon_betas,
    scan_balanced_chords,
    shape_from_dict,
    shape_to_dict,
    verify_balance,
)
from .polynomials import (
    MAX_DIMENSION,
    BalancePolynomial,
    BalanceProblem,
    PhysicalityError,
    RootResult,
    RootSolverError,
    build_general,
    evaluate,
    knacci_constant,
    physicality_threshold,
    positive_root,
)
from .report import RunReport, shape_digest
from .sequences import (
    ConvergenceError,
    DoublingSequence,
    KnacciSequence,
    converged_ratio,
    doubling_prefix,
    generate,
    ratio,
)

__version__ = "0.1.0"

__all__ = [
    "BalancePolynomial",
    "BalanceProblem",
    "BalanceReport",
    "Chord",
    "Circle",
    "ConvergenceError",
    "DoublingSequence",
    "Ellipse",
    "ExcisionPlan",
    "ExcisionPlanKd",
    "Hyperball",
    "Hypercube",
    "KnacciSequence",
    "MAX_DIMENSION",
    "McEstimate",
    "PhysicalityError",
    "Polygon",
    "RootResult",
    "RootSolverError",
    "RunReport",
    "Shape2D",
    "ShapeKd",
    "Simplex",
    "area",
    "balanced_boundary_point",
    "barycentric_coordinates",
    "beta_complement",
    "boundary_points",
    "bounding_box",
    "build_general",
    "centroid",
    "centroid_kd",
    "chord_through_centroid",
    "composite_centroid",
    "composite_centroid_kd",
    "contains",
    "converged_ratio",
    "doubling_prefix",
    "evaluate",
    "excision_with_ratio",
    "excision_with_ratio_kd",
    "find_balanced_chord",
    "find_chord_with_beta",
    "generate",
    "knacci_constant",
    "physicality_threshold",
    "plan_excision",
    "plan_excision_kd",
    "point_in_shape",
    "positive_root",
    "random_convex_polygon",
    "ratio",
    "regular_polygon",
    "regular_polygon_betas",
    "sample_region_centroid",
    "scan_balanced_chords",
    "shape_digest",
    "shape_from_dict",
    "shape_kd_from_dict",
    "shape_kd_to_dict",
    "shape_to_dict",
    "verify_balance",
    "verify_balance_kd",
    "volume_kd",
]
