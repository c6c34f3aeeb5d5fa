from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..utils import exceptions
from ..utils.tolerances import DEFAULT

# Sample points keep this many fd steps away from the box faces:
# nested differences in the Jacobi check reach 11 steps out.
SAMPLE_MARGIN_STEPS = 20


@dataclass(frozen=True)
class Chart:
    """
    Coordinate chart with the box used for test-point sampling
    """

    box: Tuple[Tuple[float, float], ...]
    fd_step: float = DEFAULT.fd_step

    def __post_init__(self):
        if not self.box:
            raise ValueError('Chart needs at least one coordinate')
        for low, high in self.box:
            if not high > low:
                raise ValueError(f"Degenerate chart interval [{low}, {high}]")
        if self.fd_step <= 0:
            raise ValueError('Finite-difference step must be positive')

    @classmethod
    def cube(cls, n: int, low: float = -1.0, high: float = 1.0, fd_step: float = DEFAULT.fd_step) -> 'Chart':
        return cls(tuple((float(low), float(high)) for _ in range(n)), fd_step)

    @classmethod
    def from_bounds(cls, bounds: Sequence[Sequence[float]], fd_step: float = DEFAULT.fd_step) -> 'Chart':
        return cls(tuple((float(low), float(high)) for low, high in bounds), fd_step)

    @classmethod
    def product(cls, *charts: 'Chart') -> 'Chart':
        return cls(sum((chart.box for chart in charts), ()), min(chart.fd_step for chart in charts))

    @property
    def dim(self) -> int:
        return len(self.box)

    @property
    def lower(self) -> np.ndarray:
        return np.array([low for low, _ in self.box])

    @property
    def upper(self) -> np.ndarray:
        return np.array([high for _, high in self.box])

    @property
    def center(self) -> np.ndarray:
        return 0.5 * (self.lower + self.upper)

    @property
    def margin(self) -> float:
        return SAMPLE_MARGIN_STEPS * self.fd_step

    def contains(self, x, margin: float = 0.0) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower + margin) and np.all(x <= self.upper - margin))

    def check(self, x):
        if not self.contains(x):
            raise exceptions.OutOfBox(f"Point {np.asarray(x).tolist()} is outside of the chart box")

    def sample(self, rng: np.random.Generator, count: int) -> np.ndarray:
        low = self.lower + self.margin
        high = self.upper - self.margin
        return rng.uniform(low, high, size=(count, self.dim))

    def probe_points(self) -> np.ndarray:
        """
        Deterministic points: the center and center ± a quarter width per axis
        """
        center = self.center
        quarter = 0.25 * (self.upper - self.lower)
        points = [center]
        for j in range(self.dim):
            for sign in (-1.0, 1.0):
                point = center.copy()
                point[j] += sign * quarter[j]
                points.append(point)
        return np.array(points)
