from .axioms import (
    RelationalGroupoidData,
    RelationalReport,
    RelationalScenario,
    build_scenario,
    check_axioms,
    corrupted_inversion,
    from_bundle_groupoid,
    from_groupoid,
    from_pair_groupoid,
    from_zero_form_product,
    multiplication_is_lagrangian,
    multiplication_is_poly_lagrangian,
    with_random_relation,
)
from .groupoids import LinearGroupoid, bundle_groupoid, pair_groupoid, product_groupoid, zero_form_product
from .relations import (
    LinearRelation,
    classify_relation,
    compose,
    compose_with_defect,
    diagonal,
    everything,
    graph_of,
    identity,
    is_isotropic_in,
    is_lagrangian_in,
    is_lagrangian_relation,
    is_poly_lagrangian_relation,
    product,
    swap,
    transpose,
)
from .spaces import PolySymplecticSpace, darboux_basis, random_lagrangian

__all__ = (
    'LinearGroupoid',
    'LinearRelation',
    'PolySymplecticSpace',
    'RelationalGroupoidData',
    'RelationalReport',
    'RelationalScenario',
    'build_scenario',
    'bundle_groupoid',
    'check_axioms',
    'classify_relation',
    'compose',
    'compose_with_defect',
    'corrupted_inversion',
    'darboux_basis',
    'diagonal',
    'everything',
    'from_bundle_groupoid',
    'from_groupoid',
    'from_pair_groupoid',
    'from_zero_form_product',
    'graph_of',
    'identity',
    'is_isotropic_in',
    'is_lagrangian_in',
    'is_lagrangian_relation',
    'is_poly_lagrangian_relation',
    'multiplication_is_lagrangian',
    'multiplication_is_poly_lagrangian',
    'pair_groupoid',
    'product',
    'product_groupoid',
    'random_lagrangian',
    'swap',
    'transpose',
    'with_random_relation',
)
