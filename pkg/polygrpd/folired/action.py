"""
Infinitesimal actions and poly-symplectic moment maps.

Generators are rows: ``generators(x)[a]`` is u_a(x) for the basis e_a of 𝔤.
Moment maps take values in 𝔤*_{(r)} = (𝔤*)^r stored as (r, d) arrays.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..polyspace import Subspace
from ..structures import LieAlgebraData, PolyPoissonStructure
from ..utils import linalg, numdiff
from ..utils.checks import CheckResult
from ..utils.tolerances import DEFAULT

log = logging.getLogger('polygrpd')

ArrayFunction = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class ActionData:
    generators: ArrayFunction
    algebra: Optional[LieAlgebraData] = None
    #: x -> (d, n, n), [a, m, j] = ∂_j u_a^m
    jacobian: Optional[ArrayFunction] = None
    name: str = ''
    fd_step: float = DEFAULT.fd_step

    def at(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.asarray(self.generators(x), dtype=float).reshape(-1, x.size)

    def derivative(self, x) -> np.ndarray:
        if self.jacobian is not None:
            return np.asarray(self.jacobian(np.asarray(x, dtype=float)), dtype=float)
        return numdiff.jacobian(self.at, x, self.fd_step)

    def vertical(self, x) -> Subspace:
        """
        V_x = span{u_a(x)}
        """
        return Subspace(np.size(x), self.at(x).T)

    def isotropy_vertical(self, x, level) -> Subspace:
        """
        V_ζ = span{u(x) : ad*_u ζ_i = 0 for every i}; all of V without algebra data
        """
        generators = self.at(x)
        if self.algebra is None or self.algebra.is_abelian:
            return Subspace(np.size(x), generators.T)
        level = np.atleast_2d(np.asarray(level, dtype=float))
        # rows (i, m), columns u: (ad*_u ζ_i)_m = Σ_k c^k_{um} ζ_{i,k}
        coadjoint = np.einsum('kum,ik->imu', self.algebra.constants, level).reshape(-1, self.algebra.dim)
        stabilizer = linalg.null_space(coadjoint, cols=self.algebra.dim)
        return Subspace(np.size(x), generators.T @ stabilizer)


@dataclass(frozen=True, eq=False)
class MomentMapData:
    value: ArrayFunction
    level: np.ndarray
    #: x -> (r, d, n)
    jacobian: Optional[ArrayFunction] = None
    name: str = ''
    fd_step: float = DEFAULT.fd_step

    def __post_init__(self):
        object.__setattr__(self, 'level', np.atleast_2d(np.asarray(self.level, dtype=float)))

    @property
    def order(self) -> int:
        return self.level.shape[0]

    def at(self, x) -> np.ndarray:
        return np.asarray(self.value(np.asarray(x, dtype=float)), dtype=float).reshape(self.level.shape)

    def differential(self, x) -> np.ndarray:
        """
        dJ as a (r·d, n) matrix
        """
        x = np.asarray(x, dtype=float)
        if self.jacobian is not None:
            jacobian = np.asarray(self.jacobian(x), dtype=float)
        else:
            jacobian = numdiff.jacobian(self.at, x, self.fd_step)
        return jacobian.reshape(-1, x.size)

    def kernel(self, x, rtol=None) -> Subspace:
        return Subspace.kernel(self.differential(x), np.size(x), rtol)

    def offset(self, x) -> float:
        return float(np.max(np.abs(self.at(x) - self.level), initial=0.0))

    def with_level(self, level) -> 'MomentMapData':
        return MomentMapData(self.value, level, self.jacobian, self.name, self.fd_step)


def cotangent_lift(action: ActionData, order: int) -> ActionData:
    """
    Lift of an action on Q to ⊕_r T*Q, coordinates (q, p^1, ..., p^r):
    u_M = (u, −Duᵀp^1, ..., −Duᵀp^r)
    """

    def generators(x):
        x = np.asarray(x, dtype=float)
        n = x.size // (1 + order)
        q, momenta = x[:n], x[n:].reshape(order, n)
        base = action.at(q)
        lifted = -np.einsum('amj,im->aij', action.derivative(q), momenta)
        return np.hstack([base, lifted.reshape(base.shape[0], -1)])

    return ActionData(generators, action.algebra, None, f"{action.name}-lift", action.fd_step)


def covelocity_moment_map(action: ActionData, order: int, level=None) -> MomentMapData:
    """
    J(q, p)_{i,a} = p^i(u_a(q)), the moment map of :func:`cotangent_lift`
    """

    def split(x):
        x = np.asarray(x, dtype=float)
        n = x.size // (1 + order)
        return x[:n], x[n:].reshape(order, n)

    def value(x):
        q, momenta = split(x)
        return momenta @ action.at(q).T

    def jacobian(x):
        q, momenta = split(x)
        n = q.size
        base = action.at(q)
        d = base.shape[0]
        result = np.zeros((order, d, n * (1 + order)))
        result[:, :, :n] = np.einsum('im,amj->iaj', momenta, action.derivative(q))
        for i in range(order):
            result[i, :, n * (1 + i):n * (2 + i)] = base
        return result

    if level is None:
        if action.algebra is None:
            raise ValueError('Level is required for actions without algebra data')
        level = np.zeros((order, action.algebra.dim))
    return MomentMapData(value, level, jacobian, f"{action.name}-moment", action.fd_step)


def moment_condition_residual(structure: PolyPoissonStructure, action: ActionData,
                              moment: MomentMapData, x) -> float:
    """
    max |i_{u_a} ω_i − dJ_{i,a}|
    """
    if structure.form is None:
        raise ValueError(f"{structure!r} carries no poly-form")
    x = np.asarray(x, dtype=float)
    contractions = np.einsum('aj,ijk->iak', action.at(x), structure.form(x))
    differential = moment.differential(x).reshape(contractions.shape)
    return float(np.max(np.abs(contractions - differential), initial=0.0))


def equivariance_residual(action: ActionData, moment: MomentMapData, x) -> float:
    """
    max |dJ(u_b) + ad*_{e_b} J| over generators and slots
    """
    if action.algebra is None:
        raise ValueError('Equivariance needs algebra data')
    x = np.asarray(x, dtype=float)
    generators = action.at(x)
    derivative = (moment.differential(x) @ generators.T).reshape(moment.order, -1, generators.shape[0])
    values = moment.at(x)
    # expected[i, a, b] = −(ad*_{e_b} J_i)_a
    expected = -np.einsum('kba,ik->iab', action.algebra.constants, values)
    return float(np.max(np.abs(derivative - expected), initial=0.0))


def equivariance_check(action: ActionData, moment: MomentMapData, points,
                       tolerance: float = 1e-6) -> CheckResult:
    points = np.atleast_2d(points)
    worst = max((equivariance_residual(action, moment, x) for x in points), default=0.0)
    log.debug("Equivariance of %s: %.3e at %d points", moment.name, worst, len(points))
    return CheckResult.from_residual('equivariance', worst, tolerance, len(points))


def closure_residual(action: ActionData, x) -> float:
    """
    Leakage of the vector-field brackets [u_a, u_b] = Du_b·u_a − Du_a·u_b out of V_x
    """
    x = np.asarray(x, dtype=float)
    generators = action.at(x)
    derivative = action.derivative(x)
    pushed = np.einsum('bmj,aj->abm', derivative, generators)
    brackets = pushed - np.swapaxes(pushed, 0, 1)
    return action.vertical(x).leakage(brackets.reshape(-1, x.size).T)
