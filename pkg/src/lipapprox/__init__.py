"""Lipschitz extension, separated nets and certified Lipschitz approximation
on finite metric spaces."""

from .approx import (
    ApproximationCertificate,
    ModulusTable,
    StarModulus,
    UCModulus,
    check_star,
    growth_bound_check,
    lipschitz_approximant,
    prop2_constant,
    star_modulus,
    star_modulus_table,
    uc_modulus,
)
from .errors import *  # noqa: F401,F403
from .extension import (
    RestrictedFunction,
    SampledFunction,
    extend_complex,
    lipschitz_constant,
    mcshane_extend_real,
    mcshane_extend_real_min,
)
from .metric import (
    DiskPoint,
    FiniteMetricSpace,
    ValidationReport,
    diameter,
    disk_moment_estimate,
    euclidean_space,
    graph_space,
    hyperbolic_distance,
    matrix_space,
    poincare_disk_space,
    validate_metric,
)
from .nets import SeparatedNet, greedy_maximal_separated, verify_net

__version__ = "0.1.0"
