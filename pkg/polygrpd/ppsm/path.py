"""
Discretized cotangent paths (X, η) with η(t) = Σ_a λ_a(t) σ_a(X(t)).

Paths live on a grid of times in [0, 1]. Concatenated paths keep both
one-sided rows at a break, so a repeated time marks the start of a new
uniform piece (see :func:`polygrpd.utils.numdiff.pieces`).
"""
import logging
from dataclasses import dataclass, replace
from typing import Callable, Optional, Union

import numpy as np

from ..structures import PolyPoissonStructure
from ..utils import exceptions, numdiff

log = logging.getLogger('polygrpd')

DEFAULT_STEPS = 1000

Coefficients = Union[np.ndarray, Callable[[float], np.ndarray]]


def uniform_grid(steps: int = DEFAULT_STEPS) -> np.ndarray:
    if steps < 1:
        raise ValueError('A path needs at least one step')
    return np.linspace(0.0, 1.0, steps + 1)


def _envelope(times) -> np.ndarray:
    """
    sin³(πt): vanishes with its first two derivatives at both ends
    """
    profile = np.sin(np.pi * np.asarray(times, dtype=float)) ** 3
    profile[0] = profile[-1] = 0.0
    return profile


@dataclass(frozen=True, eq=False)
class CotangentPath:
    structure: PolyPoissonStructure
    times: np.ndarray
    #: X, shape (N+1, n)
    points: np.ndarray
    #: λ, shape (N+1, K)
    coefficients: np.ndarray
    on_shell: bool = False
    #: set when a gauge flow had to re-solve the path from X(0)
    reprojected: bool = False

    def __post_init__(self):
        for name in ('times', 'points', 'coefficients'):
            object.__setattr__(self, name, np.array(getattr(self, name), dtype=float))
        rows = self.times.size
        if rows < 2:
            raise ValueError('A path needs at least two grid nodes')
        if self.points.shape != (rows, self.structure.dim):
            raise ValueError(f"Points must have shape ({rows}, {self.structure.dim}), got {self.points.shape}")
        if self.coefficients.shape != (rows, self.structure.size):
            raise ValueError(f"Coefficients must have shape ({rows}, {self.structure.size}), "
                             f"got {self.coefficients.shape}")

    @property
    def steps(self) -> int:
        return self.times.size - 1

    @property
    def breaks(self):
        """
        Row indices that start a new piece after a repeated time
        """
        return [start for start, _ in numdiff.pieces(self.times)[1:]]

    def covectors(self) -> np.ndarray:
        """
        η at every node, shape (N+1, r, n)
        """
        return np.einsum('ka,kain->kin', self.coefficients, frames_along(self.structure, self.points))

    def displaced(self, variation: 'PathVariation', scale: float = 1.0) -> 'CotangentPath':
        """
        (X + s δX, λ + s δλ), flagged off-shell
        """
        variation.check_grid(self)
        return replace(self,
                       points=self.points + scale * variation.points,
                       coefficients=self.coefficients + scale * variation.coefficients,
                       on_shell=False, reprojected=False)

    def __repr__(self):
        state = 'on-shell' if self.on_shell else 'off-shell'
        return f"<CotangentPath {self.structure.name!r} N={self.steps} {state}>"


@dataclass(frozen=True, eq=False)
class GaugeParameter:
    """
    Coefficient path μ with μ(0) = μ(1) = 0, β = Σ_a μ_a σ_a(X)
    """

    times: np.ndarray
    coefficients: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'times', np.array(self.times, dtype=float))
        object.__setattr__(self, 'coefficients', np.array(self.coefficients, dtype=float))
        if self.coefficients.ndim != 2 or self.coefficients.shape[0] != self.times.size:
            raise ValueError(f"Gauge coefficients must have shape ({self.times.size}, K), "
                             f"got {self.coefficients.shape}")
        if np.any(self.coefficients[0]) or np.any(self.coefficients[-1]):
            raise ValueError('Gauge parameter must vanish at both endpoints')

    @classmethod
    def zero(cls, path: CotangentPath) -> 'GaugeParameter':
        return cls(path.times, np.zeros_like(path.coefficients))

    @classmethod
    def from_amplitudes(cls, path: CotangentPath, amplitudes) -> 'GaugeParameter':
        """
        μ(t) = sin³(πt)·(a + b t) for amplitude rows a, b of shape (2, K)
        """
        amplitudes = np.asarray(amplitudes, dtype=float).reshape(2, path.structure.size)
        profile = _envelope(path.times)[:, None]
        return cls(path.times, profile * (amplitudes[0] + np.outer(path.times, amplitudes[1])))

    @classmethod
    def random(cls, path: CotangentPath, rng: np.random.Generator, scale: float = 1.0) -> 'GaugeParameter':
        return cls.from_amplitudes(path, scale * rng.standard_normal((2, path.structure.size)))

    def check_grid(self, path: CotangentPath):
        if self.times.shape != path.times.shape or np.any(self.times != path.times):
            raise ValueError('Gauge parameter is not on the grid of the path')


@dataclass(frozen=True, eq=False)
class PathVariation:
    """
    Tangent vector (δX, δλ) to the space of cotangent paths
    """

    points: np.ndarray
    coefficients: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'points', np.array(self.points, dtype=float))
        object.__setattr__(self, 'coefficients', np.array(self.coefficients, dtype=float))
        if self.points.shape[0] != self.coefficients.shape[0]:
            raise ValueError('Variation components have different grid lengths')

    @classmethod
    def zero(cls, path: CotangentPath) -> 'PathVariation':
        return cls(np.zeros_like(path.points), np.zeros_like(path.coefficients))

    @classmethod
    def random(cls, path: CotangentPath, rng: np.random.Generator, scale: float = 1.0) -> 'PathVariation':
        """
        Smooth probe a + b t + c sin(πt) in every component
        """
        t = path.times[:, None]

        def smooth(width):
            a, b, c = scale * rng.standard_normal((3, width))
            return a + b * t + c * np.sin(np.pi * t)

        return cls(smooth(path.structure.dim), smooth(path.structure.size))

    def check_grid(self, path: CotangentPath):
        if self.points.shape != path.points.shape or self.coefficients.shape != path.coefficients.shape:
            raise ValueError('Variation is not grid-matched to the path')

    def __add__(self, other: 'PathVariation') -> 'PathVariation':
        return PathVariation(self.points + other.points, self.coefficients + other.coefficients)

    def __mul__(self, scalar: float) -> 'PathVariation':
        return PathVariation(scalar * self.points, scalar * self.coefficients)

    __rmul__ = __mul__


def frames_along(structure: PolyPoissonStructure, points) -> np.ndarray:
    return np.array([structure.frame_at(x) for x in points])


def anchors_along(structure: PolyPoissonStructure, points) -> np.ndarray:
    return np.array([structure.anchor_at(x) for x in points])


def constraint_defect(path: CotangentPath) -> np.ndarray:
    """
    dX/dt + Σ_a λ_a v_a(X) at every node, shape (N+1, n)
    """
    velocity = numdiff.grid_derivative(path.points, path.times)
    return velocity + np.einsum('ka,kan->kn', path.coefficients, anchors_along(path.structure, path.points))


def residual(path: CotangentPath) -> float:
    """
    max_k ‖dX/dt + P_X(η)‖ over the grid
    """
    defect = constraint_defect(path)
    return float(np.max(np.linalg.norm(defect, axis=1), initial=0.0))


def _velocity(structure: PolyPoissonStructure, x, coefficients) -> np.ndarray:
    return -np.asarray(coefficients) @ structure.anchor_at(x)


def solve_a_path(structure: PolyPoissonStructure, x0, coefficients: Coefficients,
                 times: Optional[np.ndarray] = None, steps: int = DEFAULT_STEPS) -> CotangentPath:
    """
    Integrate dX/dt = −Σ_a λ_a(t) v_a(X) with the classical Runge-Kutta scheme.

    :param coefficients: λ sampled on the grid (interpolated linearly between
        nodes) or a callable t -> λ(t) evaluated at the Runge-Kutta stages
    :param times: grid; defaults to the uniform grid with ``steps`` steps, or
        to the grid implied by the rows of ``coefficients``
    :raise LeftBox: if the trajectory leaves the chart box
    """
    chart = structure.chart
    if times is None:
        times = uniform_grid(len(coefficients) - 1 if not callable(coefficients) else steps)
    times = np.asarray(times, dtype=float)
    if callable(coefficients):
        sampled = np.array([np.asarray(coefficients(t), dtype=float).reshape(structure.size) for t in times])

        def stage(k, fraction):
            return np.asarray(coefficients(times[k] + fraction * (times[k + 1] - times[k])),
                              dtype=float).reshape(structure.size)
    else:
        sampled = np.asarray(coefficients, dtype=float)
        if sampled.shape != (times.size, structure.size):
            raise ValueError(f"Coefficients must have shape ({times.size}, {structure.size}), got {sampled.shape}")

        def stage(k, fraction):
            return (1.0 - fraction) * sampled[k] + fraction * sampled[k + 1]

    x = np.array(x0, dtype=float)
    if not chart.contains(x):
        raise exceptions.LeftBox(f"Initial point {x.tolist()} is outside of the chart box")
    points = np.empty((times.size, structure.dim))
    points[0] = x
    for k in range(times.size - 1):
        h = times[k + 1] - times[k]
        if h > 0:
            middle = stage(k, 0.5)
            k1 = _velocity(structure, x, stage(k, 0.0))
            k2 = _velocity(structure, x + 0.5 * h * k1, middle)
            k3 = _velocity(structure, x + 0.5 * h * k2, middle)
            k4 = _velocity(structure, x + h * k3, stage(k, 1.0))
            x = x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not chart.contains(x):
            raise exceptions.LeftBox(f"A-path left the chart box at t={times[k + 1]:.6g}: {x.tolist()}")
        points[k + 1] = x

    path = CotangentPath(structure, times, points, sampled)
    defect = residual(path)
    log.debug("Solved A-path on %r with N=%d, residual %.3e", structure, path.steps, defect)
    return replace(path, on_shell=defect <= structure.tolerances.path)


def constant_path(structure: PolyPoissonStructure, x, coefficients=None,
                  steps: int = DEFAULT_STEPS) -> CotangentPath:
    """
    X ≡ x with the given constant λ (zero by default); on-shell exactly when
    Σ λ_a v_a(x) = 0
    """
    times = uniform_grid(steps)
    lam = np.zeros(structure.size) if coefficients is None else np.asarray(coefficients, dtype=float)
    path = CotangentPath(structure, times, np.tile(np.asarray(x, dtype=float), (times.size, 1)),
                         np.tile(lam, (times.size, 1)))
    return replace(path, on_shell=residual(path) <= structure.tolerances.path)
