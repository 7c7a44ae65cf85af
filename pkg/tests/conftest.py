import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def random_cloud(rng, d=None, n=None, low=0.0, high=1.0):
    d = d if d is not None else int(rng.integers(1, 5))
    n = n if n is not None else int(rng.integers(1, 17))
    return rng.uniform(low, high, size=(d, n))
