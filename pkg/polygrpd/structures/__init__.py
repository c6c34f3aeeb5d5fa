from .base import (
    AdmissibleFunction,
    AxiomReport,
    LeibnizWitness,
    PolyPoissonStructure,
    Section,
    admissible_bracket,
    bracket,
    check_axioms,
    check_derivatives,
    frame_brackets,
    jacobiator,
    leibniz_defect,
    projected_bracket,
    structure_functions,
)
from .chart import Chart
from .constructors import (
    FoliationVariant,
    LeibnizScenario,
    TrivialVariant,
    covelocity_form,
    make_constant,
    make_corrupted_symplectic,
    make_covelocity,
    make_foliation_family,
    make_leibniz_witness,
    make_linear_direct_sum,
    make_linear_product,
    make_opposite,
    make_polysymplectic,
    make_product,
    make_r3_bisymplectic,
    make_symplectic_plane,
    make_trivial,
    r3_bisymplectic_form,
    standard_symplectic,
)
from .lie import LieAlgebraData, hat
from .registry import Algebra, Constructor, build

__all__ = (
    'AdmissibleFunction',
    'Algebra',
    'AxiomReport',
    'Chart',
    'Constructor',
    'FoliationVariant',
    'LeibnizScenario',
    'LeibnizWitness',
    'LieAlgebraData',
    'PolyPoissonStructure',
    'Section',
    'TrivialVariant',
    'admissible_bracket',
    'bracket',
    'build',
    'check_axioms',
    'check_derivatives',
    'covelocity_form',
    'frame_brackets',
    'hat',
    'jacobiator',
    'leibniz_defect',
    'make_constant',
    'make_corrupted_symplectic',
    'make_covelocity',
    'make_foliation_family',
    'make_leibniz_witness',
    'make_linear_direct_sum',
    'make_linear_product',
    'make_opposite',
    'make_polysymplectic',
    'make_product',
    'make_r3_bisymplectic',
    'make_symplectic_plane',
    'make_trivial',
    'projected_bracket',
    'r3_bisymplectic_form',
    'standard_symplectic',
    'structure_functions',
)
