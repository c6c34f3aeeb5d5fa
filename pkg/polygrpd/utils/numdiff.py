"""
Finite differences: pointwise Jacobians of coefficient functions and
fourth-order derivatives of sampled paths.
"""
from typing import Callable, List, Optional, Tuple

import numpy as np


def jacobian(func: Callable[[np.ndarray], np.ndarray], x, step: float,
             check: Optional[Callable[[np.ndarray], None]] = None) -> np.ndarray:
    """
    Central-difference Jacobian.

    :param func: x -> array of any shape
    :param x: point, shape (n,)
    :param step: finite-difference step
    :param check: called on every stencil point before evaluation, may raise
    :return: array of shape ``func(x).shape + (n,)``, last axis is the direction
    """
    x = np.asarray(x, dtype=float)
    columns = []
    for j in range(x.size):
        offset = np.zeros_like(x)
        offset[j] = step
        forward, backward = x + offset, x - offset
        if check is not None:
            check(forward)
            check(backward)
        columns.append((np.asarray(func(forward)) - np.asarray(func(backward))) / (2.0 * step))
    if not columns:
        return np.zeros(np.shape(func(x)) + (0,))
    return np.stack(columns, axis=-1)


# Fourth-order first-derivative stencils, coefficients over 12h
_INTERIOR = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / 12.0
_FIRST = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0
_SECOND = np.array([-3.0, -10.0, 18.0, -6.0, 1.0]) / 12.0


def _uniform_derivative(values: np.ndarray, h: float) -> np.ndarray:
    count = values.shape[0]
    if count < 2:
        return np.zeros_like(values)
    if count < 5:
        return np.gradient(values, h, axis=0, edge_order=2 if count > 2 else 1)

    result = np.empty_like(values)
    result[2:-2] = np.tensordot(_INTERIOR, np.stack([values[k:count - 4 + k] for k in range(5)]), axes=1)
    result[0] = np.tensordot(_FIRST, values[:5], axes=1)
    result[1] = np.tensordot(_SECOND, values[:5], axes=1)
    result[-1] = -np.tensordot(_FIRST, values[::-1][:5], axes=1)
    result[-2] = -np.tensordot(_SECOND, values[::-1][:5], axes=1)
    return result / h


def pieces(times) -> List[Tuple[int, int]]:
    """
    Split a grid at repeated time nodes.

    A concatenated path stores both one-sided limits at a break as two
    rows with equal time, so every piece is a uniform grid on its own.

    :return: list of (start, stop) slices
    """
    times = np.asarray(times, dtype=float)
    breaks = [k for k in range(1, times.size) if times[k] == times[k - 1]]
    bounds = [0] + breaks + [times.size]
    return [(start, stop) for start, stop in zip(bounds[:-1], bounds[1:])]


def grid_derivative(values, times) -> np.ndarray:
    """
    O(h^4) time derivative of samples along axis 0, piecewise between breaks
    """
    values = np.asarray(values, dtype=float)
    times = np.asarray(times, dtype=float)
    result = np.zeros_like(values)
    for start, stop in pieces(times):
        if stop - start < 2:
            continue
        h = (times[stop - 1] - times[start]) / (stop - start - 1)
        result[start:stop] = _uniform_derivative(values[start:stop], h)
    return result
