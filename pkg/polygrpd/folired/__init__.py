from .action import (
    ActionData,
    MomentMapData,
    closure_residual,
    cotangent_lift,
    covelocity_moment_map,
    equivariance_check,
    equivariance_residual,
    moment_condition_residual,
)
from .foliation import LeafForm, distribution_at, leaf_two_form
from .morita import GroupChart, MoritaData, morita_conditions_check, morita_data
from .reduction import (
    MWResult,
    ReducedForm,
    check_clean,
    mw_condition,
    project_to_level,
    reduced_form_at,
    reduced_polar,
    reduced_sections,
    reducibility_check,
)
from .scenarios import (
    ReductionScenario,
    ScenarioName,
    covelocity_rotation,
    covelocity_translation,
    mw_violating_scenario,
    so3_angular_momentum,
)

__all__ = (
    'ActionData',
    'GroupChart',
    'LeafForm',
    'MWResult',
    'MomentMapData',
    'MoritaData',
    'ReducedForm',
    'ReductionScenario',
    'ScenarioName',
    'check_clean',
    'closure_residual',
    'cotangent_lift',
    'covelocity_moment_map',
    'covelocity_rotation',
    'covelocity_translation',
    'distribution_at',
    'equivariance_check',
    'equivariance_residual',
    'leaf_two_form',
    'moment_condition_residual',
    'morita_conditions_check',
    'morita_data',
    'mw_condition',
    'mw_violating_scenario',
    'project_to_level',
    'reduced_form_at',
    'reduced_polar',
    'reduced_sections',
    'reducibility_check',
    'so3_angular_momentum',
)
