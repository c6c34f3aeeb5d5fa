"""
Relational poly-symplectic groupoids (G, L, I) over finite-dimensional models.

L ⊂ G³ is read as a relation G ⊕ G → G. For a groupoid it is
L = I ∘ gr(μ) = {(a, b, (ab)⁻¹)}. The derived relations are

    M  = I ∘ L                       multiplication, G ⊕ G → G
    L₁ = L ∘ {(a, I a)}              units, point → G
    L₂ = M ∘ (L₁ × id)               unit action, G → G
    L₃ = L₂ ∘ M                      multiplication up to L₂

and the axioms are checked as equalities of relations:

    A.1  L is invariant under (a, b, c) ↦ (b, c, a)
    A.2  I ∘ I = id
    A.3  I ∘ M = M ∘ (I × I) ∘ swap
    A.4  M ∘ (M × id) = M ∘ (id × M)
    A.5  M ∘ (L₁ × L₁) = L₁
    A.6  L₃ = M, L₂ ∘ L₁ = L₁ and L₂ ∘ L₂ = L₂

A.1, A.5 and A.6 are read off the group identities they encode
(abc = e gives ab = c⁻¹ and its rotations, ee = e, unit compatibility up to
L₂). Other readings of A.6 would compare M ∘ (L₂ × L₂) with M instead;
both agree on groupoid models.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from ..polyspace import PolyForm, Subspace, is_poly_lagrangian
from ..polyspace.types import CONTAINMENT_TOL
from ..utils.checks import CheckResult
from ..utils.helper import HelperMode, Item, OrderedHelper
from .groupoids import LinearGroupoid, bundle_groupoid, pair_groupoid, zero_form_product
from .relations import (
    LinearRelation,
    compose,
    compose_with_defect,
    graph_of,
    identity,
    is_lagrangian_in,
    is_lagrangian_relation,
    product,
    swap,
)
from .spaces import PolySymplecticSpace, random_lagrangian

log = logging.getLogger('polygrpd')


class RelationalScenario(OrderedHelper):
    mode = HelperMode.kebab_case

    RELATIONAL_PAIR = Item()
    RELATIONAL_BUNDLE = Item()
    RELATIONAL_CORRUPTED = Item()
    RELATIONAL_RANDOM = Item()
    RELATIONAL_ZERO_FORM = Item()


@dataclass(frozen=True, eq=False)
class RelationalGroupoidData:
    space: PolySymplecticSpace
    #: relation G ⊕ G → G
    relation: LinearRelation
    #: relation G → G
    inversion: LinearRelation
    name: str = ''
    groupoid: Optional[LinearGroupoid] = None

    @property
    def pairs(self) -> PolySymplecticSpace:
        return self.space.direct_sum(self.space)

    def multiplication(self) -> LinearRelation:
        return compose(self.relation, self.inversion)

    def units(self) -> LinearRelation:
        """
        L₁: c with (a, I a, c) ∈ L for some a
        """
        dim = self.space.dim
        inverse = _matrix_of(self.inversion)
        point = PolySymplecticSpace.point(self.space.order)
        antidiagonal = LinearRelation(point, self.pairs, Subspace(2 * dim, np.vstack([np.eye(dim), inverse])),
                                      'antidiagonal')
        return compose(antidiagonal, self.relation)

    def unit_action(self) -> LinearRelation:
        """
        L₂ = M ∘ (L₁ × id)
        """
        return compose(product(self.units(), identity(self.space)), self.multiplication())

    def reduced_multiplication(self) -> LinearRelation:
        """
        L₃ = L₂ ∘ M
        """
        return compose(self.multiplication(), self.unit_action())

    def inversion_is_anti_symplectic(self) -> bool:
        matrix = _matrix_of(self.inversion)
        return matrix is not None and self.space.is_anti_symplectic(matrix)

    def triple_is_lagrangian(self) -> bool:
        """
        L as a subspace of (G, ω)³
        """
        return is_lagrangian_in(self.space.power(3), self.relation.graph)


def _matrix_of(relation: LinearRelation) -> Optional[np.ndarray]:
    """
    A with graph {(x, A x)}, if the relation is the graph of a map
    """
    n = relation.source.dim
    basis = relation.graph.basis
    if relation.dim != n or np.linalg.matrix_rank(basis[:n]) < n:
        return None
    return basis[n:] @ np.linalg.inv(basis[:n])


def from_groupoid(groupoid: LinearGroupoid, name: str = '') -> RelationalGroupoidData:
    """
    (G, I ∘ gr(μ), gr(I))
    """
    inversion = groupoid.inversion()
    relation = compose(groupoid.multiplication(), inversion)
    return RelationalGroupoidData(groupoid.space, relation, inversion, name or groupoid.name, groupoid)


def from_pair_groupoid(form: PolyForm) -> RelationalGroupoidData:
    return from_groupoid(pair_groupoid(form), 'pair')


def from_bundle_groupoid(q: int, order: int) -> RelationalGroupoidData:
    return from_groupoid(bundle_groupoid(q, order), 'bundle')


def from_zero_form_product(symplectic: PolyForm) -> RelationalGroupoidData:
    return from_groupoid(zero_form_product(symplectic), 'pair-x-zero')


def corrupted_inversion(data: RelationalGroupoidData, coordinate: int = 0) -> RelationalGroupoidData:
    """
    Same L with the sign of one output coordinate of I flipped
    """
    matrix = _matrix_of(data.inversion).copy()
    matrix[coordinate] *= -1.0
    inversion = graph_of(matrix, data.space, data.space, 'I*')
    return RelationalGroupoidData(data.space, data.relation, inversion, f"{data.name}-corrupted", data.groupoid)


def with_random_relation(data: RelationalGroupoidData,
                         rng: Optional[np.random.Generator] = None) -> RelationalGroupoidData:
    """
    Replace L by a random Lagrangian relation G ⊕ G → G (symplectic spaces only)
    """
    ambient = data.pairs.negate().direct_sum(data.space)
    graph = random_lagrangian(ambient, rng)
    relation = LinearRelation(data.pairs, data.space, graph, 'random')
    return RelationalGroupoidData(data.space, relation, data.inversion, f"{data.name}-random")


def _rotation(space: PolySymplecticSpace) -> np.ndarray:
    """
    (a, b, c) ↦ (b, c, a) on G³
    """
    n = space.dim
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye, zero], [zero, zero, eye], [eye, zero, zero]])


def _equality(name: str, left: LinearRelation, right: LinearRelation, defect: int = 0) -> CheckResult:
    equal = left.equals(right)
    return CheckResult(name, equal, left.distance(right), CONTAINMENT_TOL, 1,
                       {'mismatch': left.mismatch(right), 'defect': defect,
                        'dims': [left.dim, right.dim]})


def _all_equal(name: str, pairs) -> CheckResult:
    results = [_equality(name, left, right, defect) for left, right, defect in pairs]
    distances = [result.worst_residual for result in results]
    worst = None if any(distance is None for distance in distances) else max(distances)
    return CheckResult(name, all(result.passed for result in results), worst, CONTAINMENT_TOL, len(results),
                       {'mismatch': [result.detail['mismatch'] for result in results],
                        'defect': [result.detail['defect'] for result in results]})


@dataclass
class RelationalReport:
    name: str
    checks: List[CheckResult] = field(default_factory=list)
    #: structural facts that are not axioms
    facts: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed is not False for check in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def check_axioms(data: RelationalGroupoidData) -> RelationalReport:
    """
    A.1-A.6 as equalities of composed relations
    """
    space, pairs = data.space, data.pairs
    relation, inversion = data.relation, data.inversion
    ident = identity(space)
    multiplication = data.multiplication()
    units = data.units()
    unit_action = data.unit_action()

    rotation = _rotation(space)
    rotated = LinearRelation(pairs, space, Subspace(3 * space.dim, rotation @ relation.graph.basis), 'rotated')
    a1 = _equality('A1_cyclicity', rotated, relation)

    twice, defect = compose_with_defect(inversion, inversion)
    a2 = _equality('A2_involution', twice, ident, defect)

    inverted, defect = compose_with_defect(multiplication, inversion)
    swapped = compose(compose(swap(space, space), product(inversion, inversion)), multiplication)
    a3 = _equality('A3_inversion_compatibility', inverted, swapped, defect)

    left, left_defect = compose_with_defect(product(multiplication, ident), multiplication)
    right, right_defect = compose_with_defect(product(ident, multiplication), multiplication)
    a4 = _equality('A4_associativity', left, right, max(left_defect, right_defect))

    squared, defect = compose_with_defect(product(units, units), multiplication)
    a5 = _equality('A5_unit_idempotent', squared, units, defect)

    a6 = _all_equal('A6_unit_compatibility', [
        (data.reduced_multiplication(), multiplication, 0),
        (compose(units, unit_action), units, 0),
        (compose(unit_action, unit_action), unit_action, 0),
    ])

    report = RelationalReport(data.name, [a1, a2, a3, a4, a5, a6])
    report.facts['inversion_anti_symplectic'] = data.inversion_is_anti_symplectic()
    report.facts['relation_lagrangian_in_cube'] = data.triple_is_lagrangian()
    report.facts['multiplication_lagrangian'] = is_lagrangian_relation(multiplication)
    report.facts['unit_lagrangian'] = is_lagrangian_relation(units)
    if data.groupoid is not None:
        report.facts['multiplicative'] = data.groupoid.is_multiplicative()
    for check in report.checks:
        log.debug("%s on %s: %s", check.name, data.name, check.status)
    log.info("Relational axioms on %s: %s", data.name, 'pass' if report.passed else 'fail')
    return report


def multiplication_is_poly_lagrangian(groupoid: LinearGroupoid) -> bool:
    """
    gr(μ) poly-Lagrangian in (G, ω) ⊕ (G, ω) ⊕ (G, −ω)
    """
    ambient = groupoid.space.direct_sum(groupoid.space).direct_sum(groupoid.space.negate())
    graph = groupoid.multiplication_graph()
    return is_lagrangian_in(ambient, graph) and is_poly_lagrangian(ambient.form, graph)


def multiplication_is_lagrangian(groupoid: LinearGroupoid) -> bool:
    ambient = groupoid.space.direct_sum(groupoid.space).direct_sum(groupoid.space.negate())
    return is_lagrangian_in(ambient, groupoid.multiplication_graph())


def build_scenario(name: str, rng: Optional[np.random.Generator] = None) -> RelationalGroupoidData:
    """
    Relational scenarios on the symplectic plane, ⊕₂ T*ℝ and their variants
    """
    plane = PolyForm.from_wedges(2, [[(0, 1, 1.0)]])
    if name == RelationalScenario.RELATIONAL_PAIR:
        return from_pair_groupoid(plane)
    if name == RelationalScenario.RELATIONAL_BUNDLE:
        return from_bundle_groupoid(1, 2)
    if name == RelationalScenario.RELATIONAL_CORRUPTED:
        return corrupted_inversion(from_pair_groupoid(plane))
    if name == RelationalScenario.RELATIONAL_RANDOM:
        return with_random_relation(from_pair_groupoid(plane), rng)
    if name == RelationalScenario.RELATIONAL_ZERO_FORM:
        return from_zero_form_product(plane)
    raise ValueError(f"Unknown relational scenario {name!r}, expected one of {RelationalScenario.all()}")
