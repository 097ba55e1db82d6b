import numpy as np
import pytest

from helpers import enumerate_symplectic_group, symplectic_involutions


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture(scope="session")
def sp4():
    return enumerate_symplectic_group(2)


@pytest.fixture(scope="session")
def sp4_involutions(sp4):
    return symplectic_involutions(sp4)
