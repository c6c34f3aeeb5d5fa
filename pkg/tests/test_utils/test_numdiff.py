import numpy as np
import pytest

from polygrpd.utils import numdiff


class TestJacobian:

    def test_linear_map(self, rng):
        a = rng.normal(size=(3, 2))
        jacobian = numdiff.jacobian(lambda x: a @ x, np.array([0.3, -0.1]), 1e-5)
        assert np.allclose(jacobian, a, atol=1e-8)

    def test_check_sees_stencil(self):
        seen = []
        numdiff.jacobian(lambda x: x, np.zeros(2), 0.5, check=lambda x: seen.append(x.copy()))
        assert len(seen) == 4
        assert max(float(np.max(np.abs(x))) for x in seen) == 0.5


class TestGridDerivative:

    def test_exact_for_quartics(self):
        times = np.linspace(0.0, 1.0, 21)
        values = np.stack([times ** 3, times ** 4 - times], axis=1)
        expected = np.stack([3 * times ** 2, 4 * times ** 3 - 1], axis=1)
        assert np.allclose(numdiff.grid_derivative(values, times), expected, atol=1e-10)

    def test_pieces(self):
        times = np.array([0.0, 0.5, 1.0, 1.0, 1.5, 2.0])
        assert numdiff.pieces(times) == [(0, 3), (3, 6)]

    def test_piecewise(self):
        times = np.concatenate([np.linspace(0.0, 1.0, 11), np.linspace(1.0, 2.0, 11)])
        values = np.concatenate([times[:11], -times[11:]])
        derivative = numdiff.grid_derivative(values, times)
        assert derivative[:11] == pytest.approx(np.ones(11))
        assert derivative[11:] == pytest.approx(-np.ones(11))
