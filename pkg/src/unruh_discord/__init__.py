"""Correlation structure of a Dirac mode shared with an accelerated observer.

Library layers, bottom up: :mod:`~unruh_discord.qmat` (small dense complex
linear algebra), :mod:`~unruh_discord.optimizer` (deterministic two-angle
minimisation), :mod:`~unruh_discord.measures` (mutual information, classical
correlation, discord, negativity), :mod:`~unruh_discord.rindler` (the state
family and its closed forms), :mod:`~unruh_discord.sweep` /
:mod:`~unruh_discord.verify` / :mod:`~unruh_discord.figures` behind the
``unruh-discord`` command line tool in :mod:`~unruh_discord.cli`.
"""

from .measures import (
    CorrelationResult,
    MeasurementOutcome,
    classical_correlation,
    evaluate_correlations,
    log_negativity,
    measure_first,
    measured_conditional_entropy,
    mutual_information,
    projectors,
    quantum_discord,
)
from .optimizer import (
    DEFAULT_CONFIG,
    MeasurementAngles,
    OptimizerConfig,
    OptimizerFailure,
    OptimumReport,
    minimize,
)
from .qmat import (
    BadSubsystemSpecError,
    DensityMatrix,
    NoConvergenceError,
    NotHermitianError,
    NotPositiveSemidefiniteError,
    StateVector,
    eig_hermitian,
    partial_trace,
    partial_transpose,
    trace_norm,
    von_neumann_entropy,
)
from .rindler import (
    NonPositiveInputError,
    Pair,
    R_MAX,
    UnruhParameter,
    acceleration_to_r,
    closed_form_conditional_eigenvalues,
    closed_form_entropy,
    reduced_state,
    thermal_occupation,
    tripartite_state,
)
from .sweep import CorrelationRecord, SweepConfig, evaluate_point, sweep_records

__version__ = "0.1.0"

__all__ = [
    "BadSubsystemSpecError",
    "CorrelationRecord",
    "CorrelationResult",
    "DEFAULT_CONFIG",
    "DensityMatrix",
    "MeasurementAngles",
    "MeasurementOutcome",
    "NoConvergenceError",
    "NonPositiveInputError",
    "NotHermitianError",
    "NotPositiveSemidefiniteError",
    "OptimizerConfig",
    "OptimizerFailure",
    "OptimumReport",
    "Pair",
    "R_MAX",
    "StateVector",
    "SweepConfig",
    "UnruhParameter",
    "acceleration_to_r",
    "classical_correlation",
    "closed_form_conditional_eigenvalues",
    "closed_form_entropy",
    "eig_hermitian",
    "evaluate_correlations",
    "evaluate_point",
    "log_negativity",
    "measure_first",
    "measured_conditional_entropy",
    "minimize",
    "mutual_information",
    "partial_trace",
    "partial_transpose",
    "projectors",
    "quantum_discord",
    "reduced_state",
    "sweep_records",
    "thermal_occupation",
    "trace_norm",
    "tripartite_state",
    "von_neumann_entropy",
]
