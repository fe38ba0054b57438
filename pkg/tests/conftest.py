import numpy as np
import pytest

from ecctensor.collection import UnitVectorCollection


def random_unit_vectors(rng, m, n, field="real"):
    if field == "complex":
        v = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
    else:
        v = rng.standard_normal((m, n))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def random_collection(rng, m, n, field="real", weighted=False):
    vectors = random_unit_vectors(rng, m, n, field)
    weights = None
    if weighted:
        weights = rng.dirichlet(np.ones(m))
        weights = weights / weights.sum()
    return UnitVectorCollection.from_vectors(vectors, weights, renormalize=True)


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)
