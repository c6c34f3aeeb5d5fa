from .operations import (
    Classification,
    CoisotropicConditions,
    PoissonMapTest,
    ScanResult,
    annihilator,
    classify,
    coisotropic_conditions,
    is_poly_lagrangian,
    omega_orthogonal,
    omega_sharp,
    poisson_map_test,
    polar,
    scan_poly_lagrangian,
    section_intersection,
)
from .types import CotupleSubspace, CovectorTuple, PolyForm, Subspace

__all__ = (
    'Classification',
    'CoisotropicConditions',
    'CotupleSubspace',
    'CovectorTuple',
    'PoissonMapTest',
    'PolyForm',
    'ScanResult',
    'Subspace',
    'annihilator',
    'classify',
    'coisotropic_conditions',
    'is_poly_lagrangian',
    'omega_orthogonal',
    'omega_sharp',
    'poisson_map_test',
    'polar',
    'scan_poly_lagrangian',
    'section_intersection',
)
