"""Deterministic two-angle minimisation.

A coarse rectangular scan over (theta, phi) locates the basin, then
coordinate-wise golden-section passes shrink each angle bracket below the
requested tolerance.  There is no randomness anywhere: identical inputs give
bit-identical results, and ties on the coarse grid resolve toward the
smallest theta, then the smallest phi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

TWO_PI = 2.0 * math.pi
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0


class OptimizerFailure(RuntimeError):
    """A golden-section pass exhausted its iteration cap before the bracket shrank."""


@dataclass(frozen=True)
class MeasurementAngles:
    """Bloch direction (theta, phi) of a projective qubit measurement.

    theta is polar in [0, pi]; phi is azimuthal and reduced modulo 2*pi, so
    (theta, phi) and (theta, phi + 2*pi) are the same measurement.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        if not 0.0 <= theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
        phi = float(self.phi) % TWO_PI
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)

    def bloch_vector(self) -> tuple[float, float, float]:
        st = math.sin(self.theta)
        return (st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta))


@dataclass(frozen=True)
class OptimizerConfig:
    """Search-control knobs for :func:`minimize`.

    theta_grid points span [0, pi] inclusively; phi_grid points span
    [0, 2*pi) half-open.  Refinement stops once each coordinate bracket is
    narrower than refine_tolerance (radians).
    """

    theta_grid: int = 64
    phi_grid: int = 32
    refine_tolerance: float = 1e-8
    max_refine_iters: int = 200

    def __post_init__(self):
        if self.theta_grid < 8 or self.phi_grid < 8:
            raise ValueError("coarse grids need at least 8 points per angle")
        if not self.refine_tolerance > 0.0:
            raise ValueError("refine_tolerance must be positive")
        if self.max_refine_iters < 1:
            raise ValueError("max_refine_iters must be at least 1")


DEFAULT_CONFIG = OptimizerConfig()


@dataclass(frozen=True)
class OptimumReport:
    """Result of a minimisation: where, how low, and what refinement bought."""

    angles: MeasurementAngles
    value: float
    grid_value: float
    refinement_gain: float

    def __post_init__(self):
        if self.value > self.grid_value + 1e-15:
            raise ValueError("refined value may not exceed the coarse-grid value")


def _golden_pass(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    best_x: float,
    best_f: float,
    tol: float,
    max_iters: int,
) -> tuple[float, float]:
    """Golden-section minimisation on [lo, hi], seeded with an incumbent best.

    Returns the minimum over every point evaluated (incumbent included), so a
    pass can only improve the objective.
    """
    span = hi - lo
    if span <= tol:
        return best_x, best_f
    x1 = lo + _INV_PHI2 * span
    x2 = lo + _INV_PHI * span
    f1 = f(x1)
    f2 = f(x2)
    for x, fx in ((x1, f1), (x2, f2)):
        if fx < best_f:
            best_x, best_f = x, fx
    iters = 0
    while hi - lo > tol:
        if iters >= max_iters:
            raise OptimizerFailure(
                f"bracket width {hi - lo:.3e} still above tolerance {tol:.3e} "
                f"after {max_iters} golden-section iterations"
            )
        if f1 < f2:
            hi, x2, f2 = x2, x1, f1
            x1 = lo + _INV_PHI2 * (hi - lo)
            f1 = f(x1)
            if f1 < best_f:
                best_x, best_f = x1, f1
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
            if f2 < best_f:
                best_x, best_f = x2, f2
        iters += 1
    return best_x, best_f


def minimize(
    objective: Callable[[MeasurementAngles], float],
    config: OptimizerConfig = DEFAULT_CONFIG,
) -> OptimumReport:
    """Global minimum of ``objective`` over the measurement-angle rectangle.

    Stage 1 scans the coarse theta x phi grid; stage 2 runs three rounds of
    alternating theta/phi golden-section passes, each bracketed one grid
    spacing around the incumbent and clipped to the domain.  The returned
    value never exceeds any coarse-grid sample.
    """
    thetas = np.linspace(0.0, math.pi, config.theta_grid)
    phis = np.linspace(0.0, TWO_PI, config.phi_grid, endpoint=False)

    best_t = best_p = 0.0
    best_f = math.inf
    for t in thetas:
        for p in phis:
            value = objective(MeasurementAngles(t, p))
            if value < best_f:
                best_t, best_p, best_f = float(t), float(p), value
    grid_value = best_f

    theta_h = math.pi / (config.theta_grid - 1)
    phi_h = TWO_PI / config.phi_grid
    for _ in range(3):
        phi_now = best_p
        best_t, best_f = _golden_pass(
            lambda t, _p=phi_now: objective(MeasurementAngles(t, _p)),
            max(0.0, best_t - theta_h),
            min(math.pi, best_t + theta_h),
            best_t,
            best_f,
            config.refine_tolerance,
            config.max_refine_iters,
        )
        theta_now = best_t
        best_p, best_f = _golden_pass(
            lambda p, _t=theta_now: objective(MeasurementAngles(_t, p)),
            max(0.0, best_p - phi_h),
            min(TWO_PI, best_p + phi_h),
            best_p,
            best_f,
            config.refine_tolerance,
            config.max_refine_iters,
        )

    return OptimumReport(
        angles=MeasurementAngles(best_t, best_p),
        value=best_f,
        grid_value=grid_value,
        refinement_gain=grid_value - best_f,
    )
