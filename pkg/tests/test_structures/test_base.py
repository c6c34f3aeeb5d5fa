import numpy as np
import pytest

from polygrpd.structures import (
    AdmissibleFunction,
    LieAlgebraData,
    Section,
    admissible_bracket,
    bracket,
    check_axioms,
    check_derivatives,
    frame_brackets,
    leibniz_defect,
    make_corrupted_symplectic,
    make_leibniz_witness,
    make_linear_direct_sum,
    make_symplectic_plane,
    projected_bracket,
    structure_functions,
)
from polygrpd.utils import exceptions

X = AdmissibleFunction(lambda x: x[0], lambda x: np.array([[1.0, 0.0]]), 'x')
Y = AdmissibleFunction(lambda x: x[1], lambda x: np.array([[0.0, 1.0]]), 'y')


class TestStructure:

    def test_shapes(self):
        structure = make_linear_direct_sum(LieAlgebraData.so3(), 2)
        assert structure.dim == 6
        assert structure.order == 2
        assert structure.size == 3
        assert structure.has_analytic_derivatives

    def test_sharp(self):
        plane = make_symplectic_plane()
        assert plane.sharp(np.array([[0.0, 1.0]]), np.zeros(2)) == pytest.approx([1.0, 0.0])

    def test_distribution(self):
        plane = make_symplectic_plane()
        assert plane.distribution_at(np.zeros(2)).shape == (2, 2)
        so3 = make_linear_direct_sum(LieAlgebraData.so3(), 1)
        # coadjoint orbits of so(3) are spheres
        assert so3.distribution_at(np.array([0.3, 0.1, -0.2])).shape == (3, 2)
        assert so3.distribution_at(np.zeros(3)).shape == (3, 0)

    def test_restrict_frame(self):
        plane = make_symplectic_plane()
        restricted = plane.restrict_frame([1])
        assert restricted.size == 1
        assert restricted.frame_at(np.zeros(2)) == pytest.approx(np.array([[[-1.0, 0.0]]]))

    def test_bad_frame_shape(self):
        plane = make_symplectic_plane()
        with pytest.raises(ValueError):
            plane.with_anchor(lambda x: np.zeros((3, 2)))


class TestBrackets:

    def test_structure_functions_of_lie_poisson(self):
        algebra = LieAlgebraData.so3()
        structure = make_linear_direct_sum(algebra, 2)
        constants, residual = structure_functions(structure, np.array([0.2, -0.1, 0.3, 0.0, 0.4, -0.5]))
        assert residual < 1e-12
        assert np.allclose(constants, algebra.constants)

    def test_section_bracket_matches_frame_brackets(self):
        structure = make_linear_direct_sum(LieAlgebraData.aff1(), 1)
        x = np.array([0.3, -0.4])
        first = Section.frame_element(structure, 0)
        second = Section.frame_element(structure, 1)
        assert np.allclose(bracket(structure, first, second, x), frame_brackets(structure, x)[0, 1], atol=1e-6)

    def test_constant_sections(self):
        plane = make_symplectic_plane()
        value = bracket(plane, Section.constant([[1.0, 0.0]]), Section.constant([[0.0, 1.0]]), np.zeros(2))
        assert value == pytest.approx(np.zeros((1, 2)), abs=1e-9)

    def test_admissible_bracket(self):
        plane = make_symplectic_plane()
        x = np.array([0.1, 0.2])
        value = admissible_bracket(plane, X, Y, x)
        assert value == pytest.approx(-admissible_bracket(plane, Y, X, x))
        assert value == pytest.approx(projected_bracket(plane, X, Y, x))
        assert abs(value[0]) == pytest.approx(1.0)

    def test_not_admissible(self):
        scenario = make_leibniz_witness()
        with pytest.raises(exceptions.NotAdmissible):
            admissible_bracket(scenario.structure, scenario.h, scenario.f, scenario.point)

    def test_leibniz_witness(self):
        scenario = make_leibniz_witness()
        witness = leibniz_defect(scenario.structure, scenario.h, scenario.f, scenario.g, scenario.point)
        assert witness.exhibited
        x1 = scenario.point[0]
        expected = [(np.exp(-x1) - 1.0) / 2.0, (1.0 - np.exp(x1)) / 2.0]
        assert witness.defect == pytest.approx(expected, abs=1e-5)
        assert witness.as_dict()['product_admissible']


class TestAxioms:

    def test_symplectic_plane(self, rng):
        report = check_axioms(make_symplectic_plane(), 10, rng)
        assert report.passed
        assert [check.name for check in report.checks] == [
            'cond_i', 'cond_ii', 'cond_iii_closure', 'cond_iii_jacobi', 'empty_slots',
        ]

    def test_corrupted_anchor(self, rng):
        report = check_axioms(make_corrupted_symplectic(), 10, rng)
        assert not report.passed
        assert report['cond_i'].passed is False
        assert report['cond_i'].worst_residual >= 1.0 - 1e-12
        assert report['cond_ii'].passed

    def test_linear_direct_sum(self, rng):
        report = check_axioms(make_linear_direct_sum(LieAlgebraData.so3(), 2), 5, rng)
        assert report.passed

    def test_unknown_check(self, rng):
        with pytest.raises(KeyError):
            check_axioms(make_symplectic_plane(), 1, rng)['cond_iv']

    def test_derivatives(self, rng):
        check = check_derivatives(make_linear_direct_sum(LieAlgebraData.aff1(), 2), 5, rng)
        assert check.passed
        assert check.detail['analytic']
