"""Acceleration sweeps and their delimited output.

One row per (r, pair): every correlation measure plus the minimising angles.
Floats are rendered positionally with 12 significant digits (never
scientific notation, bare ``0`` for exact zero) so identical runs produce
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

import numpy as np

from .measures import evaluate_correlations
from .optimizer import DEFAULT_CONFIG, OptimizerConfig
from .rindler import Pair, R_MAX, UnruhParameter, reduced_state

CSV_HEADER = ("r,pair,mutual_information,classical_correlation,quantum_discord,"
              "log_negativity,theta_opt,phi_opt,min_conditional_entropy")


class SweepNumericError(RuntimeError):
    """A row computation failed; carries the offending r and pair."""

    def __init__(self, pair: Pair, r: float, cause: Exception):
        super().__init__(f"numeric failure at r={r!r} (pair {pair.value}): {cause}")
        self.pair = pair
        self.r = r
        self.cause = cause


@dataclass(frozen=True)
class SweepConfig:
    """Which reductions to sweep, over which inclusive r grid."""

    pairs: tuple[Pair, ...]
    r_min: float = 0.0
    r_max: float = R_MAX
    steps: int = 101
    optimizer: OptimizerConfig = DEFAULT_CONFIG

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("at least one pair is required")
        if not 0.0 <= self.r_min <= self.r_max <= R_MAX + 1e-12:
            raise ValueError(
                f"need 0 <= r_min <= r_max <= pi/4, got [{self.r_min!r}, {self.r_max!r}]"
            )
        if self.steps < 2:
            raise ValueError(f"steps must be at least 2, got {self.steps}")

    def r_values(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.steps)


@dataclass(frozen=True)
class CorrelationRecord:
    """One sweep row."""

    r: float
    pair: Pair
    mutual_information: float
    classical_correlation: float
    quantum_discord: float
    log_negativity: float
    theta_opt: float
    phi_opt: float
    min_conditional_entropy: float

    def csv_row(self) -> str:
        return ",".join([
            format_float(self.r),
            self.pair.value,
            format_float(self.mutual_information),
            format_float(self.classical_correlation),
            format_float(self.quantum_discord),
            format_float(self.log_negativity),
            format_float(self.theta_opt),
            format_float(self.phi_opt),
            format_float(self.min_conditional_entropy),
        ])


def format_float(value: float) -> str:
    """12 significant digits, positional notation only, plain 0 for zero."""
    if value == 0.0:
        return "0"
    return np.format_float_positional(value, precision=12, unique=False, fractional=False)


def evaluate_point(
    r: UnruhParameter | float, pair: Pair | str,
    config: OptimizerConfig = DEFAULT_CONFIG,
) -> CorrelationRecord:
    """All measures of one reduction at one acceleration."""
    pair = Pair(pair)
    rv = r.r if isinstance(r, UnruhParameter) else UnruhParameter(float(r)).r
    result = evaluate_correlations(reduced_state(rv, pair), config)
    return CorrelationRecord(
        r=rv,
        pair=pair,
        mutual_information=result.mutual_information,
        classical_correlation=result.classical_correlation,
        quantum_discord=result.quantum_discord,
        log_negativity=result.log_negativity,
        theta_opt=result.optimal_angles.theta,
        phi_opt=result.optimal_angles.phi,
        min_conditional_entropy=result.min_conditional_entropy,
    )


def sweep_records(config: SweepConfig) -> Iterator[CorrelationRecord]:
    """Rows grouped by pair in config order, r ascending within each group."""
    for pair in config.pairs:
        for r in config.r_values():
            try:
                yield evaluate_point(float(r), pair, config.optimizer)
            except Exception as exc:  # surfaced to the CLI as exit code 3
                raise SweepNumericError(pair, float(r), exc) from exc


def write_csv(records: Iterable[CorrelationRecord], stream: TextIO) -> int:
    """Write header plus rows; returns the row count."""
    stream.write(CSV_HEADER + "\n")
    count = 0
    for record in records:
        stream.write(record.csv_row() + "\n")
        count += 1
    return count
