import numpy as np
import pytest

from polygrpd.structures import LieAlgebraData, hat


class TestLieAlgebra:

    def test_hat_is_cross_product(self):
        a, b = np.array([1.0, 2.0, 3.0]), np.array([-1.0, 0.5, 2.0])
        assert hat(a) @ b == pytest.approx(np.cross(a, b))

    def test_so3(self):
        so3 = LieAlgebraData.so3()
        assert so3.dim == 3
        assert so3.bracket([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]) == pytest.approx([0.0, 0.0, 1.0])
        assert so3.jacobi_defect() == 0.0
        assert not so3.is_abelian

    def test_matrix_representation(self):
        so3 = LieAlgebraData.so3()
        u, v = np.array([0.3, -0.2, 0.5]), np.array([1.0, 0.4, -0.7])
        commutator = so3.matrix(u) @ so3.matrix(v) - so3.matrix(v) @ so3.matrix(u)
        assert np.allclose(commutator, so3.matrix(so3.bracket(u, v)))

    def test_aff1(self):
        aff1 = LieAlgebraData.aff1()
        assert aff1.bracket([1.0, 0.0], [0.0, 1.0]) == pytest.approx([0.0, 1.0])

    def test_abelian(self):
        abelian = LieAlgebraData.abelian(3)
        assert abelian.is_abelian
        assert abelian.matrices.shape == (3, 3, 3)

    def test_coadjoint(self):
        so3 = LieAlgebraData.so3()
        u, v, zeta = np.array([0.1, 0.2, 0.3]), np.array([-1.0, 0.0, 2.0]), np.array([0.5, 0.5, -1.0])
        assert so3.coad(u, zeta) @ v == pytest.approx(zeta @ so3.bracket(u, v))

    def test_rejects_bad_constants(self):
        with pytest.raises(ValueError):
            LieAlgebraData(np.ones((2, 2, 2)))
        with pytest.raises(ValueError):
            LieAlgebraData(np.zeros((2, 3, 3)))

    def test_rejects_non_closed_matrices(self):
        with pytest.raises(ValueError):
            LieAlgebraData.from_matrices(np.array([[[0.0, 1.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]))

    def test_no_matrices(self):
        algebra = LieAlgebraData(np.zeros((1, 1, 1)))
        with pytest.raises(ValueError):
            algebra.matrix([1.0])
