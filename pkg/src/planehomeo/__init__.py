"""Toolkit for homeomorphisms of the complex plane.

Symbolic maps with exact inverses, the metric of uniform convergence of maps
and inverses on compacts, Hausdorff distances between sampled compacts,
fixed-point certificates, and finite-stage genericity constructions.
"""

from ._accel import BACKEND
from .compact import (
    CompactSet,
    EmptySupport,
    circle_net,
    hausdorff,
    image,
    in_neighborhood,
    limit_test,
    singleton,
    square_grid,
    support_sample,
)
from .errors import (
    ConvergenceError,
    DomainError,
    InconclusiveError,
    MalformedTreeError,
    NoBoundError,
    OverflowGuardError,
    PlaneHomeoError,
)
from .fixed_points import (
    Certificate,
    FixedPointExists,
    FixedPointFree,
    Inconclusive,
    WindingResult,
    certify_fixed_point_free,
    fixed_point_certificate,
    min_displacement,
    separation_radius,
    winding_certificate,
)
from .genericity import (
    EscapeReport,
    Family,
    PerturbationReport,
    avoid_fixed_points_on_grid,
    conjugate,
    conjugacy_witness,
    lemma3_experiment,
    lemma4_experiment,
    nowhere_dense_escape,
)
from .grammar import ParseError, parse_expr, to_text
from .homeo import (
    Cell2,
    CellBump,
    Compose,
    Conjugation,
    Disk,
    DiskCompose,
    DiskConjugate,
    DiskHomeo,
    DiskIdentity,
    DiskInverse,
    Homeo,
    Identity,
    Inverse,
    RadialBump,
    Rotation,
    Scaling,
    Translation,
    cell_bump,
    compose,
    disk_to_plane,
    evaluate,
    evaluate_inverse,
    inverse,
    lipschitz_bound,
    plane_from_disk,
    plane_to_disk,
)
from .metric import MetricConfig, dist, du, sup_on_disk, truncation_error_bound

__version__ = "0.1.0"
