import numpy as np
import pytest

from polygrpd.polyspace import PolyForm
from polygrpd.relational import (
    PolySymplecticSpace,
    compose,
    compose_with_defect,
    darboux_basis,
    everything,
    graph_of,
    identity,
    is_lagrangian_in,
    is_lagrangian_relation,
    random_lagrangian,
    transpose,
)
from polygrpd.utils import exceptions

PLANE = PolySymplecticSpace(PolyForm.from_wedges(2, [[(0, 1, 1.0)]]), 'plane')
ROTATION = np.array([[np.cos(0.3), -np.sin(0.3)], [np.sin(0.3), np.cos(0.3)]])
SHEAR = np.array([[1.0, 2.0], [0.0, 1.0]])


class TestSpaces:

    def test_degenerate(self):
        with pytest.raises(exceptions.DegeneratePolyForm):
            PolySymplecticSpace(PolyForm.from_wedges(3, [[(0, 1, 1.0)]]))

    def test_anti_symplectic(self):
        assert PLANE.is_anti_symplectic(np.diag([1.0, -1.0]))
        assert not PLANE.is_anti_symplectic(ROTATION)

    def test_darboux_basis(self):
        form = PolyForm.from_wedges(4, [[(0, 2, 1.0), (1, 3, 2.0), (0, 1, 0.5)]])
        basis = darboux_basis(form.components[0])
        standard = np.block([[np.zeros((2, 2)), np.eye(2)], [-np.eye(2), np.zeros((2, 2))]])
        assert basis.T @ form.components[0] @ basis == pytest.approx(standard, abs=1e-12)

    def test_darboux_basis_odd(self):
        with pytest.raises(exceptions.DegeneratePolyForm):
            darboux_basis(np.zeros((3, 3)))

    def test_random_lagrangian(self, rng):
        space = PLANE.direct_sum(PLANE)
        subspace = random_lagrangian(space, rng)
        assert subspace.dim == 2
        assert is_lagrangian_in(space, subspace)

    def test_random_lagrangian_needs_symplectic(self, rng):
        bisymplectic = PolySymplecticSpace(PolyForm.from_wedges(2, [[(0, 1, 1.0)], [(0, 1, 2.0)]]))
        with pytest.raises(ValueError):
            random_lagrangian(bisymplectic, rng)


class TestComposition:

    def test_graphs(self):
        composed = compose(graph_of(ROTATION, PLANE, PLANE), graph_of(SHEAR, PLANE, PLANE))
        assert composed.equals(graph_of(SHEAR @ ROTATION, PLANE, PLANE))

    def test_identity(self):
        relation = graph_of(SHEAR, PLANE, PLANE)
        assert compose(identity(PLANE), relation).equals(relation)
        assert compose(relation, identity(PLANE)).equals(relation)

    def test_transpose(self):
        relation = graph_of(ROTATION, PLANE, PLANE)
        assert transpose(relation).equals(graph_of(ROTATION.T, PLANE, PLANE))
        assert compose(relation, transpose(relation)).equals(identity(PLANE))

    def test_defect(self):
        composed, defect = compose_with_defect(everything(PLANE, PLANE), everything(PLANE, PLANE))
        assert defect == 2
        assert composed.equals(everything(PLANE, PLANE))

    def test_mismatch(self):
        other = PLANE.direct_sum(PLANE)
        with pytest.raises(exceptions.SpaceMismatch):
            compose(identity(PLANE), identity(other))


class TestLagrangianRelations:

    @pytest.mark.parametrize('matrix,expected', [
        (ROTATION, True),
        (SHEAR, True),
        (np.diag([1.0, -1.0]), False),
        (2.0 * np.eye(2), False),
    ])
    def test_graph(self, matrix, expected):
        assert is_lagrangian_relation(graph_of(matrix, PLANE, PLANE)) is expected
