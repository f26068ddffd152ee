"""Numeric referee: specialize, solve, compare."""

from .checks import (
    CampaignReport,
    PointCheck,
    check_decomposition,
    check_wrsd_at_points,
    union_of_chain_solutions,
)
from .numeric import (
    CLUSTER_TOL,
    MEMBER_TOL,
    ROOT_TOL,
    CandidateExplosionError,
    ConditioningWarning,
    InitialVanishesError,
    NotZeroDimensionalError,
    NumericPoly,
    NumericSolutionSet,
    cluster_points,
    filter_points,
    numeric_roots,
    sets_equal,
    solve_chain,
    solve_system,
    univariate_roots,
)
from .sampling import SamplingExhaustedError, random_rational, sample_stable_points

__all__ = [
    "CLUSTER_TOL", "MEMBER_TOL", "ROOT_TOL", "CampaignReport", "CandidateExplosionError",
    "ConditioningWarning", "InitialVanishesError", "NotZeroDimensionalError", "NumericPoly",
    "NumericSolutionSet", "PointCheck", "SamplingExhaustedError", "check_decomposition",
    "check_wrsd_at_points", "cluster_points", "filter_points", "numeric_roots",
    "random_rational", "sample_stable_points", "sets_equal", "solve_chain", "solve_system",
    "union_of_chain_solutions", "univariate_roots",
]
