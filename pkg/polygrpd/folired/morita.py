"""
Orthogonality conditions for the left and right moment maps on ⊕_r T*G of
a matrix group G.

G is charted by exponential coordinates θ ↦ exp(Σ θ_a E_a) near the identity,
and ⊕_r T*G carries the canonical coordinates (θ, p^1, ..., p^r) of that chart
with the covelocity poly-form. :meth:`GroupChart.right_trivialize` takes them to
the right-trivialized covectors (g, μ^1, ..., μ^r), μ^i_a = p^i(E_a g), in which
the left moment map is the projection onto μ.
"""
import logging
import time
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
import scipy.linalg

from ..polyspace import PolyForm, Subspace, omega_orthogonal, poisson_map_test
from ..structures import Chart, LieAlgebraData, PolyPoissonStructure, make_covelocity, make_linear_direct_sum
from ..utils import linalg
from ..utils.checks import CheckResult
from ..utils.tolerances import DEFAULT, Tolerances
from .action import ActionData, MomentMapData, cotangent_lift, covelocity_moment_map, equivariance_residual

log = logging.getLogger('polygrpd')

THETA_RADIUS = 0.5
MOMENTUM_RADIUS = 1.0


class GroupChart:
    """
    Exponential chart θ ↦ exp(Σ θ_a E_a) of a matrix group
    """

    def __init__(self, algebra: LieAlgebraData):
        if algebra.matrices is None:
            raise ValueError(f"Lie algebra {algebra.name!r} has no matrix representation")
        self.algebra = algebra

    def element(self, theta) -> np.ndarray:
        return scipy.linalg.expm(self.algebra.matrix(theta))

    def differential(self, theta) -> np.ndarray:
        """
        Columns vec(∂g/∂θ_a), computed with the Fréchet derivative of expm
        """
        exponent = self.algebra.matrix(theta)
        columns = [scipy.linalg.expm_frechet(exponent, basis, compute_expm=False).reshape(-1)
                   for basis in self.algebra.matrices]
        return np.column_stack(columns)

    def _coordinates(self, theta, tangent) -> np.ndarray:
        return linalg.lstsq(self.differential(theta), tangent.reshape(-1))[0]

    def left_generators(self, theta) -> np.ndarray:
        """
        u_a(g) = E_a g, the generators of g ↦ h g
        """
        g = self.element(theta)
        return np.array([self._coordinates(theta, basis @ g) for basis in self.algebra.matrices])

    def right_generators(self, theta) -> np.ndarray:
        """
        u_a(g) = −g E_a, the generators of g ↦ g h⁻¹
        """
        g = self.element(theta)
        return np.array([self._coordinates(theta, -g @ basis) for basis in self.algebra.matrices])

    def right_trivialize(self, theta, momenta) -> np.ndarray:
        """
        Right-trivialized covectors μ^i_a = p^i(E_a g) of canonical momenta

        :param momenta: (r, d) rows p^i in the θ coordinates
        :return: (r, d)
        """
        return np.atleast_2d(np.asarray(momenta, dtype=float)) @ self.left_generators(theta).T


@dataclass
class MoritaData:
    algebra: LieAlgebraData
    order: int
    structure: PolyPoissonStructure
    left: ActionData
    right: ActionData
    left_moment: MomentMapData
    right_moment: MomentMapData
    #: ⊕_r 𝔤* with the opposite direct-sum structure, target of both moment maps
    target: PolyPoissonStructure


def morita_data(algebra: LieAlgebraData, order: int, fd_step: float = DEFAULT.fd_step,
                tolerances: Tolerances = DEFAULT) -> MoritaData:
    d = algebra.dim
    chart = Chart.from_bounds([(-THETA_RADIUS, THETA_RADIUS)] * d
                              + [(-MOMENTUM_RADIUS, MOMENTUM_RADIUS)] * (d * order), fd_step)
    group = GroupChart(algebra)
    structure = make_covelocity(d, order, chart, tolerances)
    left = ActionData(group.left_generators, algebra, name='left', fd_step=fd_step)
    right = ActionData(group.right_generators, algebra, name='right', fd_step=fd_step)
    target = make_linear_direct_sum(algebra, order, tolerances=tolerances)
    return MoritaData(
        algebra, order, structure,
        cotangent_lift(left, order), cotangent_lift(right, order),
        covelocity_moment_map(left, order), covelocity_moment_map(right, order),
        target,
    )


def _poisson_test(data: MoritaData, moment: MomentMapData, x):
    """
    Poly-Poisson map test onto the opposite direct-sum structure
    """
    value = moment.at(x).reshape(-1)
    return poisson_map_test(
        data.structure.frame_at(x), data.structure.anchor_at(x),
        data.target.frame_at(value), -data.target.anchor_at(value),
        moment.differential(x), data.structure.tolerances,
    )


def morita_conditions_check(algebra: LieAlgebraData, order: int, samples: int = 50,
                            rng: Optional[np.random.Generator] = None,
                            fd_step: float = DEFAULT.fd_step,
                            tolerances: Tolerances = DEFAULT) -> List[CheckResult]:
    """
    Conditions on the pair ⊕_r 𝔤* ← ⊕_r T*G → ⊕_r 𝔤* at sample points:

    1. both maps are submersions (rank r·d) and poly-Poisson maps,
    2. connected, simply connected levels (global, not verified),
    3. level foliations are mutually poly-symplectically orthogonal,
    4. mixed brackets vanish: dJ_L(u_R) = 0 and dJ_R(u_L) = 0,
    5. completeness (global, not verified).

    Equivariance of both maps is reported as well.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    data = morita_data(algebra, order, fd_step, tolerances)
    points = data.structure.chart.sample(rng, samples)
    expected_rank = order * algebra.dim
    residual_tol = tolerances.axiom

    started = time.perf_counter()
    ranks = {'left': [], 'right': []}
    worst = {'poisson': 0.0, 'equivariance': 0.0, 'orthogonality': 0.0, 'mixed': 0.0}
    poisson = True
    for x in points:
        left_d = data.left_moment.differential(x)
        right_d = data.right_moment.differential(x)
        ranks['left'].append(linalg.rank_svd(left_d, tolerances.rank_rtol))
        ranks['right'].append(linalg.rank_svd(right_d, tolerances.rank_rtol))
        for moment in (data.left_moment, data.right_moment):
            test = _poisson_test(data, moment, x)
            poisson = poisson and test.is_poisson
            worst['poisson'] = max(worst['poisson'], test.pullback_residual)
        worst['equivariance'] = max(worst['equivariance'],
                                    equivariance_residual(data.left, data.left_moment, x),
                                    equivariance_residual(data.right, data.right_moment, x))

        poly = PolyForm(data.structure.form(x))
        left_kernel = Subspace.kernel(left_d, x.size, tolerances.rank_rtol)
        right_kernel = Subspace.kernel(right_d, x.size, tolerances.rank_rtol)
        worst['orthogonality'] = max(worst['orthogonality'],
                                     omega_orthogonal(poly, left_kernel).distance(right_kernel))

        mixed = max(
            float(np.max(np.abs(left_d @ data.right.at(x).T), initial=0.0)),
            float(np.max(np.abs(right_d @ data.left.at(x).T), initial=0.0)),
        )
        worst['mixed'] = max(worst['mixed'], mixed)
    elapsed = time.perf_counter() - started

    submersion = all(rank == expected_rank for rank in ranks['left'] + ranks['right'])
    log.info("Morita conditions for %s, r=%d at %d points in %.2fs", algebra.name, order, samples, elapsed)
    checks = [
        CheckResult('cond_1_submersion', submersion, None, None, samples,
                    {'rank_left': sorted(set(ranks['left'])), 'rank_right': sorted(set(ranks['right'])),
                     'expected': expected_rank}),
        CheckResult('cond_1_poisson_map', poisson, worst['poisson'], tolerances.adm, samples),
        CheckResult.not_verified('cond_2_connected_levels', 'connectivity of level sets is a global property'),
        CheckResult.from_residual('cond_3_orthogonality', worst['orthogonality'], residual_tol, samples),
        CheckResult.from_residual('cond_4_mixed_brackets', worst['mixed'], residual_tol, samples),
        CheckResult.not_verified('cond_5_completeness', 'completeness of Hamiltonian flows is a global property'),
        CheckResult.from_residual('equivariance', worst['equivariance'], residual_tol, samples),
    ]
    for check in checks:
        check.detail.setdefault('wall_time', elapsed)
    return checks
