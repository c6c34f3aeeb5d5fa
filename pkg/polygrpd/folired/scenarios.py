"""
Reduction scenarios on spaces of covelocities ⊕_r T*Q.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..structures import Chart, LieAlgebraData, PolyPoissonStructure, hat, make_covelocity, make_r3_bisymplectic
from ..utils.helper import HelperMode, Item, OrderedHelper
from ..utils.tolerances import DEFAULT, Tolerances
from .action import ActionData, MomentMapData, cotangent_lift, covelocity_moment_map


class ScenarioName(OrderedHelper):
    mode = HelperMode.kebab_case

    COVELOCITY_TRANSLATION = Item()  # covelocity-translation
    COVELOCITY_ROTATION = Item()  # covelocity-rotation
    SO3_ORBITS = Item()  # so3-orbits
    MW_VIOLATING = Item()  # mw-violating
    FOLIATION_FAMILY = Item()  # foliation-family
    MORITA_SO3 = Item()  # morita-so3


@dataclass
class ReductionScenario:
    name: str
    structure: PolyPoissonStructure
    action: ActionData
    moment: MomentMapData
    #: action on Q before the cotangent lift
    base: Optional[ActionData] = None


def _covelocity_scenario(name, base: ActionData, n: int, order: int, box, fd_step, tolerances):
    chart = Chart.from_bounds(list(box[:n]) + [box[n]] * (n * order), fd_step)
    structure = make_covelocity(n, order, chart, tolerances)
    return ReductionScenario(name, structure, cotangent_lift(base, order),
                             covelocity_moment_map(base, order), base)


def covelocity_translation(order: int = 2, fd_step: float = DEFAULT.fd_step,
                           tolerances: Tolerances = DEFAULT) -> ReductionScenario:
    """
    ℝ acting on Q = ℝ² by translation in q_1; J = (p^1_1, ..., p^r_1)
    """
    base = ActionData(
        lambda q: np.array([[1.0, 0.0]]),
        LieAlgebraData.abelian(1),
        lambda q: np.zeros((1, 2, 2)),
        'translation',
        fd_step,
    )
    return _covelocity_scenario(ScenarioName.COVELOCITY_TRANSLATION, base, 2, order,
                                [(-1.0, 1.0), (-1.0, 1.0), (-1.0, 1.0)], fd_step, tolerances)


def covelocity_rotation(order: int = 2, fd_step: float = DEFAULT.fd_step,
                        tolerances: Tolerances = DEFAULT) -> ReductionScenario:
    """
    S¹ rotating Q = ℝ², sampled away from the fixed point
    """
    rotation = np.array([[0.0, -1.0], [1.0, 0.0]])
    base = ActionData(
        lambda q: (rotation @ q)[None],
        LieAlgebraData.abelian(1),
        lambda q: rotation[None],
        'rotation',
        fd_step,
    )
    return _covelocity_scenario(ScenarioName.COVELOCITY_ROTATION, base, 2, order,
                                [(0.5, 1.5), (0.5, 1.5), (-1.0, 1.0)], fd_step, tolerances)


def so3_angular_momentum(order: int = 1, fd_step: float = DEFAULT.fd_step,
                         tolerances: Tolerances = DEFAULT) -> ReductionScenario:
    """
    SO(3) rotating Q = ℝ³: u_a(q) = e_a × q, J_i = q × p^i
    """
    generators = np.array([hat(e) for e in np.eye(3)])
    base = ActionData(
        lambda q: generators @ q,
        LieAlgebraData.so3(),
        lambda q: generators,
        'so3-rotation',
        fd_step,
    )
    return _covelocity_scenario(ScenarioName.SO3_ORBITS, base, 3, order,
                                [(0.5, 1.5)] * 3 + [(-1.0, 1.0)], fd_step, tolerances)


def mw_violating_scenario(tolerances: Tolerances = DEFAULT) -> ReductionScenario:
    """
    (ℝ³, (dx₁∧dx₂, dx₂∧dx₃)) with V = span{e₁} and J = (x₂, 0).
    Here W° = span{e₁, e₃} = ker dJ is not inside V.
    """
    structure = make_r3_bisymplectic(tolerances=tolerances)
    action = ActionData(
        lambda x: np.array([[1.0, 0.0, 0.0]]),
        LieAlgebraData.abelian(1),
        lambda x: np.zeros((1, 3, 3)),
        'x1-translation',
    )
    moment = MomentMapData(
        lambda x: np.array([[x[1]], [0.0]]),
        np.zeros((2, 1)),
        lambda x: np.array([[[0.0, 1.0, 0.0]], [[0.0, 0.0, 0.0]]]),
        'x2',
    )
    return ReductionScenario(ScenarioName.MW_VIOLATING, structure, action, moment)
