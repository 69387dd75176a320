"""Dense complex linear algebra for few-qubit states.

Everything in this package lives in Hilbert spaces of dimension 2, 4 or 8,
so matrices are plain ``numpy`` arrays of ``complex128`` and the Hermitian
eigensolver is a cyclic Jacobi iteration: at these sizes robustness and
auditability beat asymptotic speed, and the solver has no dependency on a
particular LAPACK build.

Conventions used throughout:

* subsystem 0 is the leftmost tensor factor, i.e. the most significant
  index of the computational basis ordering,
* all entropies and logarithms are base 2 (bits),
* eigenvalues are returned in descending order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
# Eigenvalues in [EIGENVALUE_FLOOR, 0) are roundoff and get clamped to zero;
# anything below the floor means the matrix is genuinely not a state.
EIGENVALUE_FLOOR = -1e-10
JACOBI_OFFDIAG_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100


class NotHermitianError(ValueError):
    """Matrix fails the Hermitian symmetry pre-check."""


class NoConvergenceError(RuntimeError):
    """The Jacobi iteration hit its sweep cap before converging."""


class NotPositiveSemidefiniteError(ValueError):
    """An eigenvalue lies below the roundoff floor for a density matrix."""


class BadSubsystemSpecError(ValueError):
    """Subsystem selection is empty, out of range, or not a strict subset."""


def _as_square_array(matrix) -> np.ndarray:
    a = np.asarray(getattr(matrix, "data", matrix), dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def _hermiticity_defect(a: np.ndarray) -> float:
    return float(np.abs(a - a.conj().T).max())


def _max_offdiag(a: np.ndarray) -> float:
    mags = np.abs(a).copy()
    np.fill_diagonal(mags, 0.0)
    return float(mags.max())


def _jacobi_rotate(a: np.ndarray, vecs: np.ndarray, p: int, q: int) -> None:
    """Annihilate a[p, q] with a complex plane rotation, updating a and vecs."""
    apq = a[p, q]
    if apq == 0:
        return
    mag = abs(apq)
    phase = apq / mag
    # Phase-align the pivot, then rotate the real 2x2 block [[app, mag], [mag, aqq]].
    cot2 = (a[q, q].real - a[p, p].real) / (2.0 * mag)
    if cot2 == 0.0:
        t = 1.0
    else:
        t = math.copysign(1.0, cot2) / (abs(cot2) + math.hypot(cot2, 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    u = np.array([[c * phase, s * phase], [-s, c]], dtype=complex)
    idx = [p, q]
    a[:, idx] = a[:, idx] @ u
    a[idx, :] = u.conj().T @ a[idx, :]
    # Pin the algebraically exact entries to kill roundoff drift.
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    vecs[:, idx] = vecs[:, idx] @ u


def _eig2(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Jacobi for n = 2, unrolled: one rotation diagonalises a 2x2 block exactly."""
    app = a[0, 0].real
    aqq = a[1, 1].real
    apq = complex(a[0, 1])
    mean = (app + aqq) / 2.0
    delta = (app - aqq) / 2.0
    radius = math.hypot(delta, abs(apq))
    hi, lo = mean + radius, mean - radius
    if abs(apq) == 0.0:
        vecs = np.eye(2, dtype=complex)
        if app >= aqq:
            return np.array([app, aqq]), vecs
        return np.array([aqq, app]), vecs[:, ::-1]
    v_hi = np.array([apq, hi - app], dtype=complex)
    v_lo = np.array([apq, lo - app], dtype=complex)
    vecs = np.empty((2, 2), dtype=complex)
    vecs[:, 0] = v_hi / np.linalg.norm(v_hi)
    vecs[:, 1] = v_lo / np.linalg.norm(v_lo)
    return np.array([hi, lo]), vecs


def eig_hermitian(matrix, *, max_sweeps: int = JACOBI_MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(values, vectors)`` with real eigenvalues sorted in descending
    order and ``vectors[:, k]`` the orthonormal eigenvector of ``values[k]``.

    Raises:
        NotHermitianError: if ``matrix`` is not Hermitian within 1e-12.
        NoConvergenceError: if the off-diagonal norm is still above the
            convergence threshold after ``max_sweeps`` full sweeps.
    """
    a = _as_square_array(matrix)
    if _hermiticity_defect(a) > HERMITICITY_TOL:
        raise NotHermitianError(
            f"matrix is not Hermitian (defect {_hermiticity_defect(a):.3e})"
        )
    a = (a + a.conj().T) / 2.0
    n = a.shape[0]
    if n == 2:
        return _eig2(a)
    vecs = np.eye(n, dtype=complex)
    sweeps = 0
    while _max_offdiag(a) > JACOBI_OFFDIAG_TOL:
        if sweeps >= max_sweeps:
            raise NoConvergenceError(
                f"Jacobi iteration did not converge in {max_sweeps} sweeps "
                f"(off-diagonal {_max_offdiag(a):.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                _jacobi_rotate(a, vecs, p, q)
        sweeps += 1
    values = np.diag(a).real.copy()
    order = np.argsort(-values, kind="stable")
    return values[order], vecs[:, order]


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalised pure-state amplitudes over a computational basis."""

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > 1e-12:
            raise ValueError(f"state vector is not normalised: |psi|^2 = {norm2!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.shape[0]

    def density_matrix(self, dims: Sequence[int]) -> "DensityMatrix":
        """Rank-1 projector |psi><psi| carrying the given tensor structure."""
        return DensityMatrix(np.outer(self.amplitudes, self.amplitudes.conj()), tuple(dims))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix with tensor structure.

    ``dims`` lists the dimension of each tensor factor, leftmost first; their
    product must equal the matrix dimension.  Validation happens once at
    construction; the spectrum is computed then and cached for entropy use.
    """

    data: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        a = _as_square_array(self.data).copy()
        dims = tuple(int(d) for d in self.dims)
        if not dims or any(d < 1 for d in dims):
            raise ValueError(f"invalid subsystem dimensions {dims}")
        if math.prod(dims) != a.shape[0]:
            raise ValueError(
                f"subsystem dimensions {dims} do not multiply to matrix dim {a.shape[0]}"
            )
        defect = _hermiticity_defect(a)
        if defect > HERMITICITY_TOL:
            raise NotHermitianError(f"density matrix defect {defect:.3e} exceeds 1e-12")
        a = (a + a.conj().T) / 2.0
        tr = float(np.trace(a).real)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"density matrix trace {tr!r} is not 1 within 1e-12")
        a.setflags(write=False)
        object.__setattr__(self, "data", a)
        object.__setattr__(self, "dims", dims)
        self.spectrum  # eager: positivity is part of construction-time validation

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    @cached_property
    def spectrum(self) -> np.ndarray:
        """Eigenvalues in descending order, with roundoff negatives clamped to 0."""
        values, _ = eig_hermitian(self.data)
        if values[-1] < EIGENVALUE_FLOOR:
            raise NotPositiveSemidefiniteError(
                f"smallest eigenvalue {values[-1]:.3e} is below {EIGENVALUE_FLOOR:.0e}"
            )
        values = np.where(values < 0.0, 0.0, values)
        values.setflags(write=False)
        return values


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Spectral entropy -sum(lam * log2 lam) in bits, with 0*log(0) = 0."""
    lam = rho.spectrum
    pos = lam[lam > 0.0]
    return float(max(0.0, -np.sum(pos * np.log2(pos))))


def _normalize_keep(keep, n_subsystems: int) -> tuple[int, ...]:
    if isinstance(keep, (int, np.integer)):
        keep = (int(keep),)
    kept = tuple(sorted({int(k) for k in keep}))
    if not kept:
        raise BadSubsystemSpecError("keep set is empty")
    if any(k < 0 or k >= n_subsystems for k in kept):
        raise BadSubsystemSpecError(
            f"keep indices {kept} out of range for {n_subsystems} subsystems"
        )
    if len(kept) == n_subsystems:
        raise BadSubsystemSpecError("keep must be a strict subset of the subsystems")
    return kept


def _partial_trace_raw(mat: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Partial trace of an unvalidated square matrix; keeps original factor order."""
    dims = list(dims)
    tensor = mat.reshape(dims + dims)
    n = len(dims)
    drop = [i for i in range(n) if i not in keep]
    for i in sorted(drop, reverse=True):
        tensor = np.trace(tensor, axis1=i, axis2=i + n)
        n -= 1
    d = math.prod(dims[i] for i in keep)
    return tensor.reshape(d, d)


def partial_trace(rho: DensityMatrix, keep: Iterable[int] | int) -> DensityMatrix:
    """Reduced state on the kept subsystems (ascending index order).

    Raises:
        BadSubsystemSpecError: if ``keep`` is empty, out of range, or not a
            strict subset of the subsystems.
    """
    kept = _normalize_keep(keep, len(rho.dims))
    reduced = _partial_trace_raw(rho.data, rho.dims, kept)
    return DensityMatrix(reduced, tuple(rho.dims[i] for i in kept))


def partial_transpose(rho: DensityMatrix, subsystem: int) -> np.ndarray:
    """Transpose one factor of a bipartite state; returns a plain Hermitian array.

    The result is generally not positive, so it is not wrapped as a
    DensityMatrix.  Applying the operation twice restores the input exactly.
    """
    if len(rho.dims) != 2:
        raise BadSubsystemSpecError(
            f"partial transpose needs a bipartite state, got dims {rho.dims}"
        )
    if subsystem not in (0, 1):
        raise BadSubsystemSpecError(f"subsystem must be 0 or 1, got {subsystem}")
    d0, d1 = rho.dims
    tensor = rho.data.reshape(d0, d1, d0, d1)
    if subsystem == 0:
        tensor = tensor.transpose(2, 1, 0, 3)
    else:
        tensor = tensor.transpose(0, 3, 2, 1)
    return np.ascontiguousarray(tensor.reshape(d0 * d1, d0 * d1))


def trace_norm(matrix) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    values, _ = eig_hermitian(matrix)
    return float(np.abs(values).sum())
