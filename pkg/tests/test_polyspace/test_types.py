import numpy as np
import pytest

from polygrpd.polyspace import CotupleSubspace, CovectorTuple, PolyForm, Subspace
from polygrpd.utils import exceptions


class TestSubspace:

    def test_basis_is_orthonormal(self):
        space = Subspace(3, np.array([[1.0, 1.0], [0.0, 1.0], [0.0, 0.0]]))
        assert space.dim == 2
        assert np.allclose(space.basis.T @ space.basis, np.eye(2))

    def test_dependent_vectors(self):
        assert Subspace.span([1.0, 2.0, 0.0], [2.0, 4.0, 0.0]).dim == 1

    def test_zero_and_full(self):
        assert Subspace.zero(4).dim == 0
        assert Subspace.full(4).dim == 4
        assert Subspace.full(4).contains(Subspace.zero(4))

    def test_intersect_and_sum(self):
        xy = Subspace.span([1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
        yz = Subspace.span([0.0, 1.0, 0.0], [0.0, 0.0, 1.0])
        meet = xy.intersect(yz)
        assert meet.dim == 1
        assert meet.equals(Subspace.span([0.0, 1.0, 0.0]))
        assert xy.sum(yz).dim == 3

    def test_kernel(self):
        kernel = Subspace.kernel(np.array([[1.0, 1.0, 0.0]]))
        assert kernel.dim == 2
        assert kernel.contains(Subspace.span([1.0, -1.0, 0.0]))

    def test_distance_and_mismatch(self):
        x = Subspace.span([1.0, 0.0])
        y = Subspace.span([0.0, 1.0])
        assert x.distance(Subspace.span([2.0, 0.0])) == pytest.approx(0.0, abs=1e-12)
        assert x.distance(Subspace.full(2)) == float('inf')
        assert x.mismatch(x) == 0
        assert x.mismatch(y) == 2

    def test_complement_in(self):
        x = Subspace.span([1.0, 0.0, 0.0])
        rest = x.complement_in(Subspace.full(3))
        assert rest.dim == 2
        assert np.allclose(rest.basis[0], 0.0)

    def test_negative_dimension(self):
        with pytest.raises(ValueError):
            Subspace(-1)


class TestPolyForm:

    def test_from_wedges(self):
        form = PolyForm.from_wedges(3, [[(0, 1, 1.0)], [(1, 2, 2.0)]])
        assert form.order == 2
        assert form.dim == 3
        assert form.evaluate([1.0, 0.0, 0.0], [0.0, 1.0, 0.0]) == pytest.approx([1.0, 0.0])
        assert form.evaluate([0.0, 0.0, 1.0], [0.0, 1.0, 0.0]) == pytest.approx([0.0, -2.0])

    def test_contract(self):
        form = PolyForm.from_wedges(2, [[(0, 1, 1.0)]])
        eta = form.contract([1.0, 0.0])
        assert isinstance(eta, CovectorTuple)
        assert eta.contract([0.0, 1.0]) == pytest.approx([1.0])

    def test_kernel(self):
        assert PolyForm.from_wedges(3, [[(0, 1, 1.0)], [(1, 2, 1.0)]]).is_nondegenerate()
        degenerate = PolyForm.from_wedges(3, [[(0, 1, 1.0)]])
        assert not degenerate.is_nondegenerate()
        assert degenerate.kernel().equals(Subspace.span([0.0, 0.0, 1.0]))

    def test_symmetric_part_is_dropped(self):
        with pytest.warns(exceptions.SkewCorrectionWarning):
            form = PolyForm(np.array([[0.0, 1.0], [0.0, 0.0]]))
        assert np.allclose(form.components[0], [[0.0, 0.5], [-0.5, 0.0]])

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            PolyForm(np.zeros((2, 3)))

    def test_direct_sum_and_pullback(self):
        plane = PolyForm.from_wedges(2, [[(0, 1, 1.0)]])
        total = plane.direct_sum(plane.negate())
        assert total.dim == 4
        assert total.evaluate([0, 0, 1, 0], [0, 0, 0, 1]) == pytest.approx([-1.0])
        diagonal = np.vstack([np.eye(2), np.eye(2)])
        assert total.pullback(diagonal).norm() == pytest.approx(0.0)


class TestCotuples:

    def test_covector_tuple_algebra(self):
        eta = CovectorTuple(np.array([[1.0, 0.0], [0.0, 1.0]]))
        assert ((2 * eta - eta) + (-eta)).rows == pytest.approx(np.zeros((2, 2)))
        assert eta.flat().shape == (4,)
        with pytest.raises(ValueError):
            CovectorTuple(np.zeros(3))

    def test_slotwise(self):
        line = Subspace.span([1.0, 0.0, 0.0])
        sections = CotupleSubspace.slotwise(line, 2)
        assert sections.dim == 2
        assert sections.order == 2
        assert sections.ambient_dim == 3
        assert sections.contains(np.array([[3.0, 0.0, 0.0], [-1.0, 0.0, 0.0]]), 1e-12)
        assert not sections.contains(np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0]]), 1e-12)

    def test_dependent_basis(self):
        with pytest.raises(ValueError):
            CotupleSubspace(np.ones((2, 1, 2)))

    def test_empty_needs_shape(self):
        with pytest.raises(ValueError):
            CotupleSubspace(np.zeros((0, 1, 2)))
        assert CotupleSubspace(np.zeros((0, 1, 2)), order=1, dim=2).dim == 0
