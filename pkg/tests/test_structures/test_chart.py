import numpy as np
import pytest

from polygrpd.structures import Chart
from polygrpd.utils import exceptions


class TestChart:

    def test_cube(self):
        chart = Chart.cube(3)
        assert chart.dim == 3
        assert chart.center == pytest.approx(np.zeros(3))
        assert chart.contains([1.0, -1.0, 0.0])
        assert not chart.contains([1.1, 0.0, 0.0])

    def test_check(self):
        with pytest.raises(exceptions.OutOfBox):
            Chart.cube(2).check([0.0, 2.0])

    def test_samples_keep_margin(self, rng):
        chart = Chart.cube(2)
        points = chart.sample(rng, 50)
        assert points.shape == (50, 2)
        assert all(chart.contains(point, chart.margin) for point in points)

    def test_probe_points(self):
        points = Chart.from_bounds([(0.0, 4.0), (-1.0, 1.0)]).probe_points()
        assert points.shape == (5, 2)
        assert points[0] == pytest.approx([2.0, 0.0])
        assert points[1] == pytest.approx([1.0, 0.0])

    def test_product(self):
        chart = Chart.product(Chart.cube(1), Chart.cube(2, fd_step=1e-4))
        assert chart.dim == 3
        assert chart.fd_step == 1e-4

    @pytest.mark.parametrize('box', [(), ((1.0, 1.0),)])
    def test_invalid(self, box):
        with pytest.raises(ValueError):
            Chart(box)
