import numpy as np
import pytest


@pytest.fixture
def bell_phi_plus():
    v = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
    return np.outer(v, v.conj()).astype(complex)


@pytest.fixture
def maximally_mixed():
    return np.eye(4, dtype=complex) / 4.0
