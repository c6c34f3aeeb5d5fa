import numpy as np
import pytest

from polygrpd.ppsm import solve_a_path
from polygrpd.structures import LieAlgebraData, make_linear_direct_sum

X0 = np.array([0.3, -0.2, 0.4, 0.1, 0.2, -0.3])
COEFFICIENTS = np.array([0.5, -0.3, 0.8])
STEPS = 200


@pytest.fixture(name='so3', scope='module')
def so3_fixture():
    return make_linear_direct_sum(LieAlgebraData.so3(), 2)


@pytest.fixture(name='so3_path', scope='module')
def so3_path_fixture(so3):
    return solve_a_path(so3, X0, lambda t: COEFFICIENTS, steps=STEPS)
