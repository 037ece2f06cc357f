import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def planted_series(length, starts, shape, noise=None):
    """Series of zeros (or given noise) with `shape` added at each start."""
    values = np.zeros(length) if noise is None else np.array(noise, dtype=float)
    for s in starts:
        values[s : s + len(shape)] += shape
    return values
