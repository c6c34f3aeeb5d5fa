import numpy as np
import pytest

from polygrpd.cli.commands import linear_endpoint, linear_holonomy
from polygrpd.ppsm import (
    concatenate,
    constant_path,
    holonomy,
    inverse,
    is_gauge_equivalent,
    j_trivial,
    residual,
    solve_a_path,
    source,
    split_product_path,
    target,
    unit,
)
from polygrpd.structures import (
    Chart,
    LieAlgebraData,
    TrivialVariant,
    make_linear_direct_sum,
    make_linear_product,
    make_product,
    make_symplectic_plane,
    make_trivial,
)
from polygrpd.utils import exceptions

from .conftest import COEFFICIENTS, STEPS, X0


@pytest.fixture(name='second_path', scope='module')
def second_path_fixture(so3, so3_path):
    return solve_a_path(so3, target(so3_path), lambda t: np.array([-0.2, 0.6, 0.1]), steps=STEPS)


class TestUnitAndInverse:

    def test_unit(self, so3):
        path = unit(so3, X0, steps=10)
        assert path.on_shell
        assert source(path) == pytest.approx(X0)
        assert target(path) == pytest.approx(X0)
        assert holonomy(path) == pytest.approx(np.eye(3))

    def test_inverse(self, so3_path):
        reverse = inverse(so3_path)
        assert source(reverse) == pytest.approx(target(so3_path))
        assert target(reverse) == pytest.approx(source(so3_path))
        assert residual(reverse) < 1e-6
        assert holonomy(reverse) @ holonomy(so3_path) == pytest.approx(np.eye(3), abs=1e-6)


class TestConcatenate:

    def test_layout(self, so3_path, second_path):
        joined = concatenate(so3_path, second_path)
        assert joined.times.size == STEPS + 2
        assert joined.breaks == [STEPS // 2 + 1]
        assert joined.on_shell
        assert residual(joined) < 1e-6
        assert source(joined) == pytest.approx(source(so3_path))
        assert target(joined) == pytest.approx(target(second_path))

    def test_holonomy_is_multiplicative(self, so3_path, second_path):
        joined = concatenate(so3_path, second_path)
        expected = holonomy(second_path) @ holonomy(so3_path)
        assert holonomy(joined) == pytest.approx(expected, abs=1e-6)

    def test_loop_is_equivalent_to_unit(self, so3, so3_path):
        loop = concatenate(so3_path, inverse(so3_path))
        assert is_gauge_equivalent(loop, unit(so3, X0, steps=10))

    def test_gap(self):
        plane = make_symplectic_plane()
        with pytest.raises(exceptions.NonComposable):
            concatenate(unit(plane, [0.0, 0.0], steps=10), unit(plane, [0.5, 0.0], steps=10))

    def test_odd_steps(self):
        plane = make_symplectic_plane()
        with pytest.raises(exceptions.NonComposable):
            concatenate(unit(plane, [0.0, 0.0], steps=11), unit(plane, [0.0, 0.0], steps=11))

    def test_different_structures(self):
        first = unit(make_symplectic_plane(), [0.0, 0.0], steps=10)
        second = unit(make_symplectic_plane(), [0.0, 0.0], steps=10)
        with pytest.raises(exceptions.NonComposable):
            concatenate(first, second)


class TestHolonomy:

    def test_direct_sum(self, so3, so3_path):
        assert holonomy(so3_path) == pytest.approx(linear_holonomy(so3, COEFFICIENTS), abs=1e-8)

    def test_linear_product(self):
        structure = make_linear_product(LieAlgebraData.so3(), 2)
        coefficients = np.array([0.5, -0.3, 0.8, 0.1, 0.4, -0.2])
        path = solve_a_path(structure, X0, lambda t: coefficients, steps=STEPS)
        result = holonomy(path)
        assert result.shape == (6, 6)
        assert not np.any(result[:3, 3:])
        assert result == pytest.approx(linear_holonomy(structure, coefficients), abs=1e-8)
        assert target(path) == pytest.approx(linear_endpoint(structure, X0, coefficients), abs=1e-8)

    def test_needs_linear_structure(self):
        with pytest.raises(exceptions.WrongStructure):
            holonomy(unit(make_symplectic_plane(), [0.0, 0.0], steps=10))

    def test_gauge_invariants_differ(self, so3, so3_path):
        other = solve_a_path(so3, X0, lambda t: -COEFFICIENTS, steps=STEPS)
        assert not is_gauge_equivalent(so3_path, other)
        assert not is_gauge_equivalent(so3_path, unit(make_symplectic_plane(), [0.0, 0.0], steps=STEPS))


class TestTrivial:

    def test_integral_identification(self):
        structure = make_trivial(TrivialVariant.S1, Chart.cube(1), 2)
        path = constant_path(structure, [0.2], [0.5, -1.0], steps=10)
        assert path.on_shell
        x, integral = j_trivial(path)
        assert x == pytest.approx([0.2])
        assert integral.rows == pytest.approx([[0.5], [-1.0]])

    def test_identification_is_additive(self):
        structure = make_trivial(TrivialVariant.S1, Chart.cube(1), 2)
        first = constant_path(structure, [0.2], [0.5, -1.0], steps=10)
        second = constant_path(structure, [0.2], [1.5, 0.0], steps=10)
        _, total = j_trivial(concatenate(first, second))
        assert total.rows == pytest.approx([[2.0], [-1.0]])

    def test_needs_trivial_structure(self):
        with pytest.raises(exceptions.WrongStructure):
            j_trivial(unit(make_symplectic_plane(), [0.0, 0.0], steps=10))


class TestProducts:

    def test_split(self):
        plane = make_symplectic_plane()
        so3 = make_linear_direct_sum(LieAlgebraData.so3(), 1)
        structure = make_product([plane, so3])
        coefficients = np.array([0.3, -0.4, 0.5, -0.3, 0.8])
        path = solve_a_path(structure, [0.1, 0.2, 0.3, -0.2, 0.4], lambda t: coefficients, steps=STEPS)
        first, second = split_product_path(path)
        assert first.structure is plane
        assert second.structure is so3
        assert first.on_shell and second.on_shell
        assert target(first) == pytest.approx([-0.2, 0.6])
        assert target(second) == pytest.approx(linear_endpoint(so3, [0.3, -0.2, 0.4], coefficients[2:]), abs=1e-8)

    def test_split_needs_product(self):
        with pytest.raises(exceptions.WrongStructure):
            split_product_path(unit(make_symplectic_plane(), [0.0, 0.0], steps=10))
