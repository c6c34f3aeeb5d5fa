"""
Pointwise Marsden-Weinstein reduction.

W = S ∩ ⊕_r Ann(V) is computed through frame coefficients; quotients are
orthogonal complements chosen by SVD.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
import scipy.linalg

from ..polyspace import PolyForm, Subspace, section_intersection
from ..structures import PolyPoissonStructure
from ..structures.chart import Chart
from ..utils import exceptions, linalg
from ..utils.checks import CheckResult
from ..utils.tolerances import DEFAULT, Tolerances
from .action import ActionData, MomentMapData

log = logging.getLogger('polygrpd')

#: perturbations used to probe the rank of dJ along the level set
CLEAN_PROBES = 4
CLEAN_RADIUS = 1e-3


def reduced_sections(structure: PolyPoissonStructure, vertical: Subspace, x) -> np.ndarray:
    """
    Basis (w, r, n) of W = S_x ∩ ⊕_r Ann(V_x)
    """
    frame = structure.frame_at(x)
    coefficients = section_intersection(frame, vertical)
    return np.einsum('aw,ain->win', coefficients, frame)


def reduced_polar(structure: PolyPoissonStructure, vertical: Subspace, x) -> Subspace:
    sections = reduced_sections(structure, vertical, x)
    return Subspace.kernel(sections.reshape(-1, structure.dim), structure.dim)


def reducibility_check(structure: PolyPoissonStructure, action: ActionData,
                       points: Sequence[np.ndarray]) -> List[CheckResult]:
    """
    (a) rank of S ∩ ⊕_r Ann(V) is constant over the points;
    (b) its polar lies in V at every point
    """
    tolerances = structure.tolerances
    ranks = []
    worst = 0.0
    for x in points:
        vertical = action.vertical(x)
        ranks.append(reduced_sections(structure, vertical, x).shape[0])
        worst = max(worst, vertical.leakage(reduced_polar(structure, vertical, x).basis))
    constant = len(set(ranks)) <= 1
    log.debug("Reducibility of %s on %r: ranks %s, polar leakage %.3e",
              action.name, structure, sorted(set(ranks)), worst)
    return [
        CheckResult.from_flag('cond_a_rank_constant', constant, len(ranks), ranks=sorted(set(ranks))),
        CheckResult.from_residual('cond_b_polar_in_V', worst, tolerances.adm, len(ranks)),
    ]


def project_to_level(moment: MomentMapData, x0, tolerances: Tolerances = DEFAULT,
                     chart: Optional[Chart] = None) -> np.ndarray:
    """
    Projected Newton iteration x ← x − dJ⁺ (J(x) − ζ)

    :raise NotCleanValue: without convergence or when the iterate leaves the chart
    """
    x = np.array(x0, dtype=float)
    for iteration in range(tolerances.newton_maxiter):
        offset = moment.at(x) - moment.level
        if np.max(np.abs(offset), initial=0.0) <= tolerances.newton_tol:
            log.debug("Newton projection converged after %d iterations", iteration)
            return x
        x = x - scipy.linalg.pinv(moment.differential(x)) @ offset.reshape(-1)
        if chart is not None and not chart.contains(x):
            raise exceptions.NotCleanValue(f"Newton projection left the chart at {x.tolist()}")
    if moment.offset(x) <= tolerances.newton_tol:
        return x
    raise exceptions.NotCleanValue(
        f"Newton projection did not reach level after {tolerances.newton_maxiter} iterations "
        f"(offset {moment.offset(x):.3e})"
    )


def check_clean(moment: MomentMapData, x, tolerances: Tolerances = DEFAULT,
                chart: Optional[Chart] = None) -> int:
    """
    Rank test of a clean level: x is on the level and dJ keeps its rank at
    nearby level points, so ker dJ is the tangent space of J⁻¹(ζ).

    :raise NotCleanValue:
    :return: rank of dJ
    """
    x = np.asarray(x, dtype=float)
    if moment.offset(x) > tolerances.adm:
        raise exceptions.NotCleanValue(f"Point is off the level by {moment.offset(x):.3e}")
    rank = linalg.rank_svd(moment.differential(x), tolerances.rank_rtol)
    rng = np.random.default_rng(0)
    for _ in range(CLEAN_PROBES):
        direction = rng.standard_normal(x.size)
        nearby = project_to_level(moment, x + CLEAN_RADIUS * direction / np.linalg.norm(direction),
                                  tolerances, chart)
        nearby_rank = linalg.rank_svd(moment.differential(nearby), tolerances.rank_rtol)
        if nearby_rank != rank:
            raise exceptions.NotCleanValue(f"Rank of dJ jumps from {rank} to {nearby_rank} along the level")
    return rank


@dataclass
class MWResult:
    holds: bool
    #: leakage of W° ∩ ker dJ out of V_ζ
    residual: float
    kernel_dim: int
    isotropy_dim: int
    intersection_dim: int


def mw_condition(structure: PolyPoissonStructure, action: ActionData, moment: MomentMapData, x,
                 chart: Optional[Chart] = None) -> MWResult:
    """
    (S ∩ ⊕_r Ann(V))° ∩ ker dJ ⊆ V_ζ at a point of a clean level

    :raise NotCleanValue:
    """
    tolerances = structure.tolerances
    check_clean(moment, x, tolerances, chart or structure.chart)
    kernel = moment.kernel(x, tolerances.rank_rtol)
    isotropy = action.isotropy_vertical(x, moment.level)
    intersection = reduced_polar(structure, action.vertical(x), x).intersect(kernel)
    residual = isotropy.leakage(intersection.basis)
    result = MWResult(residual <= tolerances.adm, residual, kernel.dim, isotropy.dim, intersection.dim)
    log.debug("MW condition at %s: %s", np.asarray(x).tolist(), result)
    return result


@dataclass
class ReducedForm:
    #: orthonormal basis (n, k) of the complement of V_ζ in ker dJ
    basis: np.ndarray
    form: PolyForm
    smallest_singular_value: float


def reduced_form_at(structure: PolyPoissonStructure, action: ActionData, moment: MomentMapData,
                    x) -> ReducedForm:
    """
    ι*ω pushed to ker dJ / V_ζ, written on the orthogonal complement

    :raise DegenerateReduction: if the reduced components share a kernel
    """
    if structure.form is None:
        raise ValueError(f"{structure!r} carries no poly-form")
    tolerances = structure.tolerances
    kernel = moment.kernel(x, tolerances.rank_rtol)
    isotropy = action.isotropy_vertical(x, moment.level)
    basis = isotropy.complement_in(kernel).basis
    components = np.einsum('ja,ijk,kb->iab', basis, structure.form(np.asarray(x, dtype=float)), basis)
    k = basis.shape[1]
    smallest = float(linalg.singular_values(components.reshape(-1, k))[-1]) if k else float('inf')
    if k and Subspace.kernel(components.reshape(-1, k), k, tolerances.rank_rtol).dim:
        raise exceptions.DegenerateReduction(f"Reduced poly-form is degenerate (σ_min {smallest:.3e})")
    return ReducedForm(basis, PolyForm(components), smallest)
