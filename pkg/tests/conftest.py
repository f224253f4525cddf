import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tricorr.mapping import OverlapConfig

# Deterministic hypothesis runs: no example database, no wall-clock deadline.
settings.register_profile(
    "ci",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

#: Fixed seed shared by every randomized suite in this repository.
SUITE_SEED = 1234


def overlap_values(max_value: float = 0.95):
    return st.floats(min_value=0.0, max_value=max_value, allow_nan=False)


def overlap_configs(max_value: float = 0.95):
    """Strategy over valid configurations (overlaps capped away from the
    odd-parity singularity)."""
    return st.builds(
        OverlapConfig,
        overlap_values(max_value),
        overlap_values(max_value),
        overlap_values(max_value),
        st.sampled_from([+1, -1]),
    )


def seeded_configs(n: int, tag: int, p_high: float = 0.95) -> list[OverlapConfig]:
    """Reproducible batch of asymmetric configurations."""
    rng = np.random.default_rng([SUITE_SEED, tag])
    out = []
    for _ in range(n):
        p1, p2, p3 = rng.uniform(0.0, p_high, size=3)
        sign = 1 if rng.integers(2) else -1
        out.append(OverlapConfig(p1, p2, p3, sign))
    return out


def random_density(dim: int, seed: int, rank: int | None = None) -> np.ndarray:
    """Reproducible random density matrix (Ginibre construction)."""
    rng = np.random.default_rng(seed)
    cols = rank or dim
    g = rng.normal(size=(dim, cols)) + 1j * rng.normal(size=(dim, cols))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


@pytest.fixture
def rng():
    return np.random.default_rng(SUITE_SEED)
