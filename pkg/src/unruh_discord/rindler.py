"""States of a Dirac mode shared between an inertial and an accelerated observer.

An observer moving with uniform proper acceleration ``a`` perceives the
Minkowski vacuum of a Dirac mode of frequency ``omega`` as a thermal
Fermi-Dirac distribution.  In the Fock basis of the two causally
disconnected Rindler wedges (here plain qubits ``I`` and ``II``) the vacuum
becomes a two-mode squeezed state truncated by Pauli exclusion,

    |0>  ->  cos(r) |0,0> + sin(r) |1,1>,      |1>  ->  |1,0>,

with the mixing angle fixed by cos(r) = (exp(-2*pi*omega/a) + 1)**(-1/2).
Natural units (c = hbar = 1): omega and a only ever enter through the ratio
2*pi*omega/a, and r runs from 0 (inertial) to pi/4 (infinite acceleration).

Starting from the maximally entangled pair (|00> + |11>)/sqrt(2) held by a
stationary observer A and the accelerated one, the shared state becomes the
pure tripartite vector over |A, I, II> built below; the three bipartite
reductions are what the correlation measures act on.  The measured side is
always the left factor: A for the A-I and A-II pairs, I for the I-II pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .qmat import DensityMatrix, StateVector

R_MAX = math.pi / 4.0
_RANGE_SLACK = 1e-12


class NonPositiveInputError(ValueError):
    """Frequency and acceleration must both be positive."""


@dataclass(frozen=True)
class UnruhParameter:
    """Acceleration parameter r in [0, pi/4]; pi/4 is the infinite-acceleration limit."""

    r: float

    def __post_init__(self):
        r = float(self.r)
        if not -_RANGE_SLACK <= r <= R_MAX + _RANGE_SLACK:
            raise ValueError(f"r must lie in [0, pi/4], got {r!r}")
        object.__setattr__(self, "r", min(max(r, 0.0), R_MAX))


class Pair(str, Enum):
    """One of the three bipartite reductions of the tripartite state."""

    AI = "AI"
    AII = "AII"
    III = "III"

    @property
    def labels(self) -> tuple[str, str]:
        return {Pair.AI: ("A", "I"), Pair.AII: ("A", "II"), Pair.III: ("I", "II")}[self]

    @property
    def measured(self) -> str:
        """Label of the subsystem projective measurements act on (the left factor)."""
        return self.labels[0]

    @property
    def kept_indices(self) -> tuple[int, int]:
        """Tripartite factor indices (A=0, I=1, II=2) this reduction keeps."""
        return {Pair.AI: (0, 1), Pair.AII: (0, 2), Pair.III: (1, 2)}[self]


def _as_r(r: UnruhParameter | float) -> float:
    if isinstance(r, UnruhParameter):
        return r.r
    return UnruhParameter(float(r)).r


def acceleration_to_r(omega: float, a: float) -> UnruhParameter:
    """Mixing angle for a mode of frequency ``omega`` seen at acceleration ``a``.

    r = arccos((exp(-2*pi*omega/a) + 1)**(-1/2)); strictly increasing in a,
    approaching pi/4 as a -> infinity.
    """
    if omega <= 0.0 or a <= 0.0:
        raise NonPositiveInputError(f"omega and a must be positive, got {omega!r}, {a!r}")
    cos_r = (math.exp(-2.0 * math.pi * omega / a) + 1.0) ** -0.5
    return UnruhParameter(math.acos(min(cos_r, 1.0)))


def thermal_occupation(omega: float, a: float) -> float:
    """Mean particle number 1/(exp(2*pi*omega/a) + 1) registered by the detector.

    Equals sin(r)**2 for the matching acceleration parameter.
    """
    if omega <= 0.0 or a <= 0.0:
        raise NonPositiveInputError(f"omega and a must be positive, got {omega!r}, {a!r}")
    # 1/(e^x + 1) written overflow-safe for large x
    ex = math.exp(-2.0 * math.pi * omega / a)
    return ex / (1.0 + ex)


def tripartite_state(r: UnruhParameter | float) -> StateVector:
    """Pure shared state over |A, I, II>, A the most significant qubit.

    The only nonzero amplitudes are cos(r)/sqrt(2) on |000>, sin(r)/sqrt(2)
    on |011> and 1/sqrt(2) on |110>.
    """
    rv = _as_r(r)
    amps = np.zeros(8, dtype=complex)
    amps[0] = math.cos(rv) / math.sqrt(2.0)
    amps[3] = math.sin(rv) / math.sqrt(2.0)
    amps[6] = 1.0 / math.sqrt(2.0)
    return StateVector(amps)


def reduced_state(r: UnruhParameter | float, pair: Pair | str) -> DensityMatrix:
    """Bipartite reduction of the tripartite state, built from its closed form.

    Basis order |00>, |01>, |10>, |11> with the measured subsystem first.
    Agrees entrywise with tracing the unkept qubit out of the tripartite
    projector.
    """
    rv = _as_r(r)
    pair = Pair(pair)
    c = math.cos(rv)
    s = math.sin(rv)
    m = np.zeros((4, 4), dtype=complex)
    if pair is Pair.AI:
        m[0, 0] = c * c
        m[1, 1] = s * s
        m[3, 3] = 1.0
        m[0, 3] = m[3, 0] = c
    elif pair is Pair.AII:
        m[0, 0] = c * c
        m[1, 1] = s * s
        m[2, 2] = 1.0
        m[1, 2] = m[2, 1] = s
    else:
        m[0, 0] = c * c
        m[2, 2] = 1.0
        m[3, 3] = s * s
        m[0, 3] = m[3, 0] = s * c
    return DensityMatrix(m / 2.0, (2, 2))


def closed_form_entropy(r: UnruhParameter | float, pair: Pair | str) -> float:
    """Joint entropy of a reduction, from its analytic spectrum.

    The A-I state has spectrum {(1 + cos^2 r)/2, (1 - cos^2 r)/2, 0, 0}; the
    A-II state has {cos^2(r)/2, 1 - cos^2(r)/2, 0, 0}.  The I-II state has
    spectrum {1/2, 1/2, 0, 0} for every r (it purifies the maximally mixed
    qubit A), so its entropy is exactly one bit.
    """
    rv = _as_r(r)
    pair = Pair(pair)
    c2 = math.cos(rv) ** 2
    if pair is Pair.AI:
        return _two_point_entropy((1.0 + c2) / 2.0)
    if pair is Pair.AII:
        return _two_point_entropy(c2 / 2.0)
    return 1.0


def _two_point_entropy(p: float) -> float:
    """Entropy in bits of the distribution {p, 1 - p}."""
    total = 0.0
    for x in (p, 1.0 - p):
        if x > 0.0:
            total -= x * math.log2(x)
    return total


def closed_form_conditional_eigenvalues(
    r: UnruhParameter | float, theta: float
) -> tuple[float, float, float, float]:
    """Spectra of both post-measurement states of the A-I reduction.

    Measuring qubit A along polar angle theta leaves qubit I in a state with
    eigenvalues (1 +/- sqrt(1 - sin^2(2r) cos^4(theta/2)))/2 for the "+"
    outcome and the same expression with sin^4(theta/2) for the "-" outcome.
    The result is (plus_hi, plus_lo, minus_hi, minus_lo); each pair sums to 1
    and is independent of the azimuthal angle.
    """
    rv = _as_r(r)
    sin2r_sq = math.sin(2.0 * rv) ** 2
    half = float(theta) / 2.0
    disc_plus = math.sqrt(max(1.0 - sin2r_sq * math.cos(half) ** 4, 0.0))
    disc_minus = math.sqrt(max(1.0 - sin2r_sq * math.sin(half) ** 4, 0.0))
    return (
        (1.0 + disc_plus) / 2.0,
        (1.0 - disc_plus) / 2.0,
        (1.0 + disc_minus) / 2.0,
        (1.0 - disc_minus) / 2.0,
    )
