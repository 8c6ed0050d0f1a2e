import numpy as np
import pytest

from casimir_fields import QuadratureConfig


@pytest.fixture
def cfg():
    return QuadratureConfig()


@pytest.fixture
def rng():
    return np.random.default_rng(20250808)
