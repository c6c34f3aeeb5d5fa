import numpy as np
import pytest

from polygrpd.folired import GroupChart, morita_conditions_check, morita_data
from polygrpd.structures import LieAlgebraData
from polygrpd.utils.checks import NOT_VERIFIED, PASS


class TestGroupChart:

    def test_identity(self):
        group = GroupChart(LieAlgebraData.so3())
        assert np.allclose(group.element(np.zeros(3)), np.eye(3))
        assert np.allclose(group.left_generators(np.zeros(3)), np.eye(3))
        assert np.allclose(group.right_generators(np.zeros(3)), -np.eye(3))

    def test_element_is_a_rotation(self):
        group = GroupChart(LieAlgebraData.so3())
        g = group.element([0.2, -0.1, 0.3])
        assert np.allclose(g.T @ g, np.eye(3))
        assert np.linalg.det(g) == pytest.approx(1.0)

    def test_needs_matrices(self):
        with pytest.raises(ValueError):
            GroupChart(LieAlgebraData(np.zeros((1, 1, 1))))

    def test_right_trivialize_at_identity(self):
        momenta = np.array([[0.4, -0.2, 0.1], [0.0, 0.3, -0.5]])
        group = GroupChart(LieAlgebraData.so3())
        assert np.allclose(group.right_trivialize(np.zeros(3), momenta), momenta)

    def test_right_trivialize_is_left_moment(self, rng):
        data = morita_data(LieAlgebraData.so3(), 2)
        group = GroupChart(LieAlgebraData.so3())
        for x in data.structure.chart.sample(rng, 3):
            mu = group.right_trivialize(x[:3], x[3:].reshape(2, 3))
            assert mu.shape == (2, 3)
            assert np.allclose(mu, data.left_moment.at(x))


class TestMorita:

    def test_data(self):
        data = morita_data(LieAlgebraData.so3(), 2)
        assert data.structure.dim == 9
        assert data.target.dim == 6
        assert data.left_moment.order == 2

    def test_conditions(self, rng):
        checks = {check.name: check for check in morita_conditions_check(LieAlgebraData.so3(), 1, 3, rng)}
        assert list(checks) == [
            'cond_1_submersion',
            'cond_1_poisson_map',
            'cond_2_connected_levels',
            'cond_3_orthogonality',
            'cond_4_mixed_brackets',
            'cond_5_completeness',
            'equivariance',
        ]
        assert checks['cond_2_connected_levels'].status == NOT_VERIFIED
        assert checks['cond_5_completeness'].status == NOT_VERIFIED
        for name in ('cond_1_submersion', 'cond_1_poisson_map', 'cond_3_orthogonality',
                     'cond_4_mixed_brackets', 'equivariance'):
            assert checks[name].status == PASS, name
