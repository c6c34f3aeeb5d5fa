import numpy as np
import pytest

from polygrpd.cli.commands import linear_endpoint
from polygrpd.ppsm import (
    CotangentPath,
    GaugeParameter,
    PathVariation,
    constant_path,
    constraint_defect,
    residual,
    solve_a_path,
    uniform_grid,
)
from polygrpd.structures import make_symplectic_plane
from polygrpd.utils import exceptions

from .conftest import COEFFICIENTS, X0


class TestGrid:

    def test_uniform_grid(self):
        assert uniform_grid(4) == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
        with pytest.raises(ValueError):
            uniform_grid(0)


class TestSolve:

    def test_plane_is_a_straight_line(self):
        plane = make_symplectic_plane()
        path = solve_a_path(plane, [0.1, 0.2], np.tile([0.3, -0.4], (51, 1)))
        assert path.steps == 50
        assert path.on_shell
        assert path.points[-1] == pytest.approx([-0.2, 0.6])
        assert residual(path) < 1e-10

    def test_so3_endpoint(self, so3, so3_path):
        expected = linear_endpoint(so3, X0, COEFFICIENTS)
        assert so3_path.on_shell
        assert so3_path.points[-1] == pytest.approx(expected, abs=1e-8)
        # coadjoint orbits of so(3) are spheres
        assert np.linalg.norm(so3_path.points[-1][:3]) == pytest.approx(np.linalg.norm(X0[:3]))

    def test_sampled_and_callable_coefficients_agree(self, so3):
        times = uniform_grid(100)
        sampled = np.array([COEFFICIENTS * np.cos(t) for t in times])
        first = solve_a_path(so3, X0, sampled)
        second = solve_a_path(so3, X0, lambda t: COEFFICIENTS * np.cos(t), steps=100)
        assert first.points[-1] == pytest.approx(second.points[-1], abs=1e-4)

    def test_constraint_defect_shape(self, so3_path):
        defect = constraint_defect(so3_path)
        assert defect.shape == (so3_path.times.size, 6)
        assert np.max(np.abs(defect)) < 1e-6

    def test_left_box(self):
        plane = make_symplectic_plane()
        with pytest.raises(exceptions.LeftBox):
            solve_a_path(plane, [0.9, 0.0], np.tile([-1.0, 0.0], (11, 1)))
        with pytest.raises(exceptions.LeftBox):
            solve_a_path(plane, [1.5, 0.0], np.zeros((11, 2)))

    def test_coefficient_shape(self):
        plane = make_symplectic_plane()
        with pytest.raises(ValueError):
            solve_a_path(plane, [0.0, 0.0], np.zeros((11, 3)))

    def test_off_shell_path(self):
        plane = make_symplectic_plane()
        path = CotangentPath(plane, uniform_grid(10), np.zeros((11, 2)), np.ones((11, 2)))
        assert not path.on_shell
        assert residual(path) == pytest.approx(np.sqrt(2.0))

    def test_bad_shapes(self):
        plane = make_symplectic_plane()
        with pytest.raises(ValueError):
            CotangentPath(plane, uniform_grid(10), np.zeros((11, 3)), np.zeros((11, 2)))
        with pytest.raises(ValueError):
            CotangentPath(plane, [0.0], np.zeros((1, 2)), np.zeros((1, 2)))


class TestConstantPath:

    def test_zero_coefficients(self):
        path = constant_path(make_symplectic_plane(), [0.1, 0.1], steps=10)
        assert path.on_shell
        assert path.covectors().shape == (11, 1, 2)

    def test_nonzero_coefficients(self):
        assert not constant_path(make_symplectic_plane(), [0.1, 0.1], [1.0, 0.0], steps=10).on_shell


class TestParameters:

    def test_gauge_parameter_vanishes_at_ends(self, so3_path, rng):
        gauge = GaugeParameter.random(so3_path, rng)
        assert gauge.coefficients.shape == so3_path.coefficients.shape
        assert not np.any(gauge.coefficients[0])
        assert not np.any(gauge.coefficients[-1])

    def test_gauge_parameter_rejects_endpoint_values(self):
        with pytest.raises(ValueError):
            GaugeParameter(uniform_grid(2), np.ones((3, 1)))

    def test_gauge_parameter_on_other_grid(self, so3_path):
        gauge = GaugeParameter(uniform_grid(10), np.zeros((11, 3)))
        with pytest.raises(ValueError):
            gauge.check_grid(so3_path)

    def test_variation_algebra(self, so3_path, rng):
        variation = PathVariation.random(so3_path, rng)
        total = variation + 2 * variation
        assert total.points == pytest.approx(3 * variation.points)
        displaced = so3_path.displaced(variation, 0.0)
        assert displaced.points == pytest.approx(so3_path.points)
        assert not displaced.on_shell

    def test_variation_grid(self, so3_path):
        with pytest.raises(ValueError):
            so3_path.displaced(PathVariation(np.zeros((3, 6)), np.zeros((3, 3))))


def varying_coefficients(t):
    return np.array([np.sin(3.0 * t), np.cos(2.0 * t), t * t])


class TestConvergence:

    @pytest.mark.slow
    def test_residual_order(self, so3):
        grids = np.array([125, 250, 500, 1000])
        residuals = [residual(solve_a_path(so3, X0, varying_coefficients, steps=int(steps))) for steps in grids]
        assert residuals[-1] < residuals[0]
        slope = -np.polyfit(np.log(grids), np.log(residuals), 1)[0]
        assert 1.8 <= slope <= 4.2
