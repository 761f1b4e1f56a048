import numpy as np
import pytest

from l1coh.states import ket


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def vec(*terms, dims=None):
    """Sum of ``coef * |label>`` pairs, e.g. ``vec((1, "000"), (1, "111"))``."""
    return sum(c * ket(label, dims) for c, label in terms)
