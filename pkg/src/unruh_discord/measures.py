"""Bipartite correlation measures for two-qubit states.

Total correlation is the quantum mutual information
``I = S(rho_A) + S(rho_B) - S(rho_AB)``.  The classically extractable part
is ``C = S(rho_B) - min S(B|{Pi})``, where the minimum of the measured
conditional entropy runs over all projective measurements on the *first*
subsystem, and the quantum discord is the remainder ``D = I - C``.
Entanglement is tracked separately by the logarithmic negativity
``E_N = log2 ||rho^(T_0)||_1``.  All quantities are in bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .optimizer import (
    DEFAULT_CONFIG,
    MeasurementAngles,
    OptimizerConfig,
    OptimumReport,
    minimize,
)
from .qmat import (
    DensityMatrix,
    _partial_trace_raw,
    partial_trace,
    partial_transpose,
    trace_norm,
    von_neumann_entropy,
)

# Outcomes this unlikely are numerically indistinguishable from impossible:
# they carry no post state and drop out of conditional-entropy averages.
ZERO_PROBABILITY = 1e-12

# Report-time clamp: a computed correlation this close below zero is roundoff.
_NEGATIVE_TOL = 1e-9


def _require_two_qubit(rho: DensityMatrix) -> None:
    if tuple(rho.dims) != (2, 2):
        raise ValueError(f"expected a two-qubit state with dims (2, 2), got {rho.dims}")


def _clamp_small_negative(value: float, name: str) -> float:
    if value < -_NEGATIVE_TOL:
        raise ValueError(f"{name} = {value!r} is negative beyond roundoff tolerance")
    return 0.0 if value < 0.0 else value


@dataclass(frozen=True)
class MeasurementOutcome:
    """One branch of a projective measurement on the first qubit.

    ``post_state`` is the conditional state of the unmeasured qubit; it is
    None when the outcome probability is below ``ZERO_PROBABILITY``, which
    flags the branch as excluded from conditional-entropy averaging.
    """

    probability: float
    post_state: DensityMatrix | None


@dataclass(frozen=True)
class CorrelationResult:
    """All correlation measures of one state, from a single optimizer run."""

    mutual_information: float
    classical_correlation: float
    quantum_discord: float
    log_negativity: float
    optimal_angles: MeasurementAngles
    min_conditional_entropy: float

    def __post_init__(self):
        gap = self.mutual_information - self.classical_correlation - self.quantum_discord
        if abs(gap) > 1e-9:
            raise ValueError(f"additivity violated: I - C - D = {gap!r}")
        for name in ("mutual_information", "classical_correlation",
                     "quantum_discord", "log_negativity"):
            if getattr(self, name) < -1e-9:
                raise ValueError(f"{name} is negative beyond tolerance")


def projectors(angles: MeasurementAngles) -> tuple[np.ndarray, np.ndarray]:
    """Projector pair (I +/- n.sigma)/2 on the first qubit, identity on the second."""
    n1, n2, n3 = angles.bloch_vector()
    n_sigma = np.array([[n3, n1 - 1j * n2], [n1 + 1j * n2, -n3]], dtype=complex)
    pi_plus = np.zeros((4, 4), dtype=complex)
    pi_minus = np.zeros((4, 4), dtype=complex)
    for a in range(2):
        for b in range(2):
            # ((I +/- n.sigma)/2 tensor I_2) in 2x2 blocks over the first qubit
            block_plus = (float(a == b) + n_sigma[a, b]) / 2.0
            block_minus = (float(a == b) - n_sigma[a, b]) / 2.0
            pi_plus[2 * a, 2 * b] = pi_plus[2 * a + 1, 2 * b + 1] = block_plus
            pi_minus[2 * a, 2 * b] = pi_minus[2 * a + 1, 2 * b + 1] = block_minus
    return pi_plus, pi_minus


def measure_first(
    rho: DensityMatrix, angles: MeasurementAngles
) -> tuple[MeasurementOutcome, MeasurementOutcome]:
    """Measure the first qubit along ``angles``; return both outcome branches.

    Probabilities are Tr(Pi rho Pi) and the post states are the normalised
    first-qubit traces of the sandwiched state.
    """
    _require_two_qubit(rho)
    outcomes = []
    for projector in projectors(angles):
        sandwiched = projector @ rho.data @ projector
        reduced = _partial_trace_raw(sandwiched, rho.dims, (1,))
        probability = float(np.trace(reduced).real)
        if probability <= ZERO_PROBABILITY:
            outcomes.append(MeasurementOutcome(probability=max(probability, 0.0),
                                               post_state=None))
        else:
            outcomes.append(MeasurementOutcome(
                probability=probability,
                post_state=DensityMatrix(reduced / probability, (2,)),
            ))
    return outcomes[0], outcomes[1]


def measured_conditional_entropy(rho: DensityMatrix, angles: MeasurementAngles) -> float:
    """Average post-measurement entropy sum_j p_j S(rho_B|j), in bits."""
    total = 0.0
    for outcome in measure_first(rho, angles):
        if outcome.post_state is not None:
            total += outcome.probability * von_neumann_entropy(outcome.post_state)
    return total


def mutual_information(rho: DensityMatrix) -> float:
    """S(rho_A) + S(rho_B) - S(rho_AB) for a two-qubit state."""
    _require_two_qubit(rho)
    s_a = von_neumann_entropy(partial_trace(rho, (0,)))
    s_b = von_neumann_entropy(partial_trace(rho, (1,)))
    return s_a + s_b - von_neumann_entropy(rho)


def log_negativity(rho: DensityMatrix) -> float:
    """log2 of the trace norm of the partial transpose; 0 for PPT states."""
    _require_two_qubit(rho)
    value = float(np.log2(trace_norm(partial_transpose(rho, 0))))
    return _clamp_small_negative(value, "log_negativity")


def evaluate_correlations(
    rho: DensityMatrix, config: OptimizerConfig = DEFAULT_CONFIG
) -> CorrelationResult:
    """All correlation measures of ``rho`` with one shared optimizer run.

    Computing C and D from the same minimisation keeps I = C + D exact up to
    the arithmetic of the subtraction.
    """
    _require_two_qubit(rho)
    report = _minimize_conditional_entropy(rho, config)
    s_b = von_neumann_entropy(partial_trace(rho, (1,)))
    info = mutual_information(rho)
    classical = _clamp_small_negative(s_b - report.value, "classical_correlation")
    discord = _clamp_small_negative(info - classical, "quantum_discord")
    return CorrelationResult(
        mutual_information=info,
        classical_correlation=classical,
        quantum_discord=discord,
        log_negativity=log_negativity(rho),
        optimal_angles=report.angles,
        min_conditional_entropy=report.value,
    )


def _minimize_conditional_entropy(
    rho: DensityMatrix, config: OptimizerConfig
) -> OptimumReport:
    return minimize(lambda angles: measured_conditional_entropy(rho, angles), config)


def classical_correlation(
    rho: DensityMatrix, config: OptimizerConfig = DEFAULT_CONFIG
) -> tuple[float, MeasurementAngles]:
    """Maximal information about the second qubit from measuring the first.

    Returns the correlation in bits together with the minimising angles.
    """
    result = evaluate_correlations(rho, config)
    return result.classical_correlation, result.optimal_angles


def quantum_discord(rho: DensityMatrix, config: OptimizerConfig = DEFAULT_CONFIG) -> float:
    """Mutual information minus classical correlation, clamped at roundoff zero."""
    return evaluate_correlations(rho, config).quantum_discord
