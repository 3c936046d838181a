import math

import numpy as np
import pytest

from hawkingw.sweep import standard_temperatures

SCENARIO_LABELS = ("ABC", "Abc", "ABc")
GAMMAS = (None, 1 / 3, 1 / 2, 2 / 3)


@pytest.fixture(scope="session")
def temperatures():
    """50 log-spaced points on [0.05, 10] plus T=0 and T=inf."""
    return standard_temperatures()


def random_density(rng, n_qubits=3, rank=None):
    d = 2 ** n_qubits
    rank = rank or d
    x = rng.normal(size=(d, rank)) + 1j * rng.normal(size=(d, rank))
    m = x @ x.conj().T
    return m / np.trace(m)


def finite_grid(points=50, t_max=10.0):
    return np.geomspace(0.05, t_max, points)


SQRT3 = math.sqrt(3)
