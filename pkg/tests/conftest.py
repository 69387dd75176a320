import numpy as np
import pytest

from unruh_discord.optimizer import OptimizerConfig
from unruh_discord.qmat import DensityMatrix


# The Rindler family is flat in phi with a single theta basin, so a modest
# coarse grid plus refinement reaches the continuum minimum; generic states
# in the covariance tests use the default 64x32 config instead.
LIGHT_CONFIG = OptimizerConfig(theta_grid=16, phi_grid=8)


@pytest.fixture(scope="session")
def light_config() -> OptimizerConfig:
    return LIGHT_CONFIG


def random_density_matrix(rng: np.random.Generator, rank: int = 3) -> DensityMatrix:
    """Random rank-``rank`` two-qubit mixed state."""
    m = np.zeros((4, 4), dtype=complex)
    weights = rng.dirichlet(np.ones(rank))
    for w in weights:
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        v /= np.linalg.norm(v)
        m += w * np.outer(v, v.conj())
    return DensityMatrix(m, (2, 2))


def random_unitary(rng: np.random.Generator, n: int = 2) -> np.ndarray:
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))
