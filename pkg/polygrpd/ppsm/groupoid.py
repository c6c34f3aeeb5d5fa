"""
Groupoid structure on cotangent paths and the identification maps of the
trivial and linear families.
"""
import logging
from dataclasses import replace
from typing import List, Tuple

import numpy as np
import scipy.linalg
from scipy.integrate import trapezoid

from ..polyspace import CovectorTuple
from ..utils import exceptions, numdiff
from .path import CotangentPath, DEFAULT_STEPS, PathVariation, constant_path, frames_along, residual

log = logging.getLogger('polygrpd')

LINEAR_KINDS = ('linear-direct-sum', 'linear-product')
GAUGE_INVARIANT_TOL = 1e-4


def source(path: CotangentPath) -> np.ndarray:
    return path.points[0].copy()


def target(path: CotangentPath) -> np.ndarray:
    return path.points[-1].copy()


def unit(structure, x, steps: int = DEFAULT_STEPS) -> CotangentPath:
    """
    Constant path at x with λ = 0
    """
    return constant_path(structure, x, steps=steps)


def inverse(path: CotangentPath) -> CotangentPath:
    """
    t ↦ 1 − t with λ negated
    """
    return replace(path,
                   times=1.0 - path.times[::-1],
                   points=path.points[::-1],
                   coefficients=-path.coefficients[::-1])


def _halved_rows(times) -> np.ndarray:
    """
    Every second row of each piece

    :raise NonComposable: if some piece has an odd number of steps
    """
    rows = []
    for start, stop in numdiff.pieces(times):
        if (stop - start - 1) % 2:
            raise exceptions.NonComposable(
                f"Concatenation needs an even number of steps per piece, got {stop - start - 1}"
            )
        rows.extend(range(start, stop, 2))
    return np.array(rows)


def concatenate(first: CotangentPath, second: CotangentPath) -> CotangentPath:
    """
    first on [0, ½] followed by second on [½, 1].

    Each path keeps every second node, its times are halved and its λ is
    doubled, so the constraint survives the reparametrization. Both
    one-sided rows at t = ½ are kept.

    :raise NonComposable: if target(first) and source(second) differ by more
        than the glue tolerance, or the structures differ
    """
    if first.structure is not second.structure:
        raise exceptions.NonComposable(
            f"Paths live on different structures: {first.structure!r} and {second.structure!r}"
        )
    tolerance = first.structure.tolerances.glue
    gap = float(np.max(np.abs(target(first) - source(second)), initial=0.0))
    if gap > tolerance:
        raise exceptions.NonComposable('Target of the first path is not the source of the second') \
            .with_residual(gap, tolerance)

    first_rows, second_rows = _halved_rows(first.times), _halved_rows(second.times)
    times = np.concatenate([0.5 * first.times[first_rows], 0.5 + 0.5 * second.times[second_rows]])
    points = np.vstack([first.points[first_rows], second.points[second_rows]])
    coefficients = 2.0 * np.vstack([first.coefficients[first_rows], second.coefficients[second_rows]])
    log.debug("Concatenated paths with gap %.3e into %d rows", gap, times.size)
    return CotangentPath(first.structure, times, points, coefficients,
                         on_shell=first.on_shell and second.on_shell)


def concatenate_variations(first: CotangentPath, second: CotangentPath,
                           first_variation: PathVariation, second_variation: PathVariation) -> PathVariation:
    """
    Variation along :func:`concatenate` (first, second), δλ doubled like λ
    """
    first_variation.check_grid(first)
    second_variation.check_grid(second)
    first_rows, second_rows = _halved_rows(first.times), _halved_rows(second.times)
    return PathVariation(
        np.vstack([first_variation.points[first_rows], second_variation.points[second_rows]]),
        2.0 * np.vstack([first_variation.coefficients[first_rows], second_variation.coefficients[second_rows]]),
    )


def _transport(generators: np.ndarray, times: np.ndarray) -> np.ndarray:
    """
    g(1) for g' = u(t) g, g(0) = I, u linear between nodes (RK4)
    """
    g = np.eye(generators.shape[-1])
    for k in range(times.size - 1):
        h = times[k + 1] - times[k]
        if h == 0:
            continue
        start, end = generators[k], generators[k + 1]
        middle = 0.5 * (start + end)
        k1 = start @ g
        k2 = middle @ (g + 0.5 * h * k1)
        k3 = middle @ (g + 0.5 * h * k2)
        k4 = end @ (g + h * k3)
        g = g + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return g


def holonomy(path: CotangentPath) -> np.ndarray:
    """
    Holonomy of u(t) = Σ_a λ_a(t) E_a on a linear structure.

    Linear products return the block-diagonal matrix of the holonomies of
    their factors.

    :raise WrongStructure: unless the structure is a linear direct sum or
        linear product over a matrix Lie algebra
    """
    structure = path.structure
    algebra = structure.algebra
    if structure.kind not in LINEAR_KINDS or algebra is None or algebra.matrices is None:
        raise exceptions.WrongStructure(f"Holonomy needs a linear structure over a matrix algebra, got {structure!r}")
    d = algebra.dim
    blocks = path.coefficients.reshape(path.times.size, -1, d)
    transports = [
        _transport(np.einsum('ka,aij->kij', blocks[:, block], algebra.matrices), path.times)
        for block in range(blocks.shape[1])
    ]
    return scipy.linalg.block_diag(*transports)


def j_trivial(path: CotangentPath) -> Tuple[np.ndarray, CovectorTuple]:
    """
    (X(0), ∫ η dt) for paths of a trivial structure, X being constant

    :raise WrongStructure: for structures with a nonzero anchor family
    """
    if path.structure.kind != 'trivial':
        raise exceptions.WrongStructure(
            f"Identification by integrals needs a trivial structure, got {path.structure!r}")
    eta = np.einsum('ka,kain->kin', path.coefficients, frames_along(path.structure, path.points))
    return source(path), CovectorTuple(trapezoid(eta, path.times, axis=0))


def is_gauge_equivalent(first: CotangentPath, second: CotangentPath,
                        tolerance: float = GAUGE_INVARIANT_TOL) -> bool:
    """
    Compare the gauge invariants: endpoints, and holonomy on linear structures
    """
    if first.structure is not second.structure:
        return False
    if np.max(np.abs(source(first) - source(second))) > tolerance:
        return False
    if np.max(np.abs(target(first) - target(second))) > tolerance:
        return False
    if first.structure.kind in LINEAR_KINDS:
        return bool(np.max(np.abs(holonomy(first) - holonomy(second))) <= tolerance)
    return True


def split_product_path(path: CotangentPath) -> List[CotangentPath]:
    """
    Factor paths of a path on a product structure

    :raise WrongStructure: if the structure has no factors
    """
    factors = path.structure.factors
    if not factors:
        raise exceptions.WrongStructure(f"{path.structure!r} is not a product")
    result = []
    n0 = k0 = 0
    for factor in factors:
        piece = CotangentPath(factor, path.times,
                              path.points[:, n0:n0 + factor.dim],
                              path.coefficients[:, k0:k0 + factor.size])
        result.append(replace(piece, on_shell=residual(piece) <= factor.tolerances.path))
        n0, k0 = n0 + factor.dim, k0 + factor.size
    return result
