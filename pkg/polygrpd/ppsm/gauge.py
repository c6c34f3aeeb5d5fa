"""
Infinitesimal gauge symmetry of the constraint and its flow.

In frame coordinates the gauge direction of μ is

    δX = −Σ_a μ_a v_a(X),
    δλ^c = dμ^c/dt + Σ_{ab} C^c_{ab}(X) μ^a λ^b,

with C the structure functions of the frame. It preserves
dX/dt + Σ_a λ_a v_a(X) = 0 and keeps X(0), X(1) fixed.
"""
import logging
from dataclasses import replace

import numpy as np

from ..structures import structure_functions
from ..utils import exceptions, numdiff
from .path import CotangentPath, GaugeParameter, PathVariation, anchors_along, residual, solve_a_path

log = logging.getLogger('polygrpd')

DEFAULT_FLOW_STEPS = 10
DEFAULT_FLOW_TIME = 0.1


def _structure_functions_along(path: CotangentPath) -> np.ndarray:
    """
    :raise ClosureFailure: at the first node where the frame does not close
    """
    return np.array([structure_functions(path.structure, x)[0] for x in path.points])


def gauge_vector_field(path: CotangentPath, gauge: GaugeParameter) -> PathVariation:
    gauge.check_grid(path)
    mu = gauge.coefficients
    anchors = anchors_along(path.structure, path.points)
    points = -np.einsum('ka,kan->kn', mu, anchors)
    coefficients = numdiff.grid_derivative(mu, gauge.times)
    if np.any(mu):
        constants = _structure_functions_along(path)
        coefficients = coefficients + np.einsum('kcab,ka,kb->kc', constants, mu, path.coefficients)
    return PathVariation(points, coefficients)


def _flow_rate(path: CotangentPath, gauge: GaugeParameter, points, coefficients):
    chart = path.structure.chart
    for x in points:
        if not chart.contains(x):
            raise exceptions.LeftBox(f"Gauge flow left the chart box at {x.tolist()}")
    field = gauge_vector_field(replace(path, points=points, coefficients=coefficients), gauge)
    return field.points, field.coefficients


def gauge_flow(path: CotangentPath, gauge: GaugeParameter, steps: int = DEFAULT_FLOW_STEPS,
               duration: float = DEFAULT_FLOW_TIME, reproject: bool = True) -> CotangentPath:
    """
    Flow a path along the gauge direction of μ for the given flow time (RK4).

    The result is flagged on-shell when its residual is within the path
    tolerance. Otherwise, with ``reproject``, the path is solved again from
    X(0) with the flowed λ and marked as reprojected.

    :raise LeftBox: if a flowed point leaves the chart box
    """
    if steps < 1:
        raise ValueError('Gauge flow needs at least one step')
    h = duration / steps
    points, coefficients = path.points.copy(), path.coefficients.copy()
    for _ in range(steps):
        k1 = _flow_rate(path, gauge, points, coefficients)
        k2 = _flow_rate(path, gauge, points + 0.5 * h * k1[0], coefficients + 0.5 * h * k1[1])
        k3 = _flow_rate(path, gauge, points + 0.5 * h * k2[0], coefficients + 0.5 * h * k2[1])
        k4 = _flow_rate(path, gauge, points + h * k3[0], coefficients + h * k3[1])
        points = points + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
        coefficients = coefficients + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])

    flowed = replace(path, points=points, coefficients=coefficients, on_shell=False, reprojected=False)
    defect = residual(flowed)
    tolerance = path.structure.tolerances.path
    log.debug("Gauge flow on %r for time %.3g in %d steps, residual %.3e",
              path.structure, duration, steps, defect)
    if defect <= tolerance:
        return replace(flowed, on_shell=True)
    if not reproject:
        return flowed
    log.warning("Gauge flow residual %.3e exceeds %.1e, re-solving from X(0)", defect, tolerance)
    solved = solve_a_path(path.structure, points[0], coefficients, times=path.times)
    return replace(solved, reprojected=True)
