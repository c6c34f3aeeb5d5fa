from .gauge import gauge_flow, gauge_vector_field
from .groupoid import (
    concatenate,
    concatenate_variations,
    holonomy,
    inverse,
    is_gauge_equivalent,
    j_trivial,
    source,
    split_product_path,
    target,
    unit,
)
from .io import dump_path, dumps_path, load_path, loads_path
from .pairing import MomentConvention, covector_variation, hamiltonian_identity_check, moment_map, pairing
from .path import (
    DEFAULT_STEPS,
    CotangentPath,
    GaugeParameter,
    PathVariation,
    constant_path,
    constraint_defect,
    residual,
    solve_a_path,
    uniform_grid,
)

__all__ = (
    'DEFAULT_STEPS',
    'CotangentPath',
    'GaugeParameter',
    'MomentConvention',
    'PathVariation',
    'concatenate',
    'concatenate_variations',
    'constant_path',
    'constraint_defect',
    'covector_variation',
    'dump_path',
    'dumps_path',
    'gauge_flow',
    'gauge_vector_field',
    'hamiltonian_identity_check',
    'holonomy',
    'inverse',
    'is_gauge_equivalent',
    'j_trivial',
    'load_path',
    'loads_path',
    'moment_map',
    'pairing',
    'residual',
    'solve_a_path',
    'source',
    'split_product_path',
    'target',
    'uniform_grid',
    'unit',
)
