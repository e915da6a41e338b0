"""Minimum-error versus unambiguous discrimination of two quantum states."""

from .errors import (
    BasisNotOrthonormal,
    ConvergenceFailure,
    DimensionMismatch,
    DiscriminationError,
    InvalidDetectionPair,
    InvalidPriors,
    NotHermitian,
    NotPositiveSemidefinite,
    TraceNotOne,
)
from .minimum_error import (
    DetectionPair,
    DiscriminationProblem,
    HelstromResult,
    Strategy,
    classify_strategy,
    error_probability,
    helstrom_min_error,
    weighted_difference,
)
from .operator_core import (
    DEFAULT_TOL,
    SpectralDecomposition,
    Tolerances,
    psd_sqrt,
    random_density,
    random_pure,
    spectral_decompose,
    trace_norm,
    validate_density,
)
from .pure_vs_uniform import (
    FilteringRegime,
    FilteringResult,
    PureVsUniformScenario,
    embed_scenario,
    equal_prior_specials,
    failure_analytic,
    lambda_spectrum_analytic,
    min_error_analytic,
    parallel_norm_of,
)
from .unambiguous_bounds import (
    BoundReport,
    Branch,
    check_half_inequality,
    failure_lower_bound_branch,
    failure_lower_bound_QL,
    fidelity,
)

__version__ = "0.1.0"
