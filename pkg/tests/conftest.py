import numpy as np
import pytest

from ptdirac.clifford import Representation, gamma_set


@pytest.fixture(scope="session")
def std():
    return gamma_set(Representation.STANDARD)


@pytest.fixture(scope="session")
def weyl():
    return gamma_set(Representation.WEYL)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
