"""
Linear canonical relations between poly-symplectic vector spaces.

A relation R: A → B is a subspace of A ⊕ B. Composition follows
set-theoretic relations: R₂ ∘ R₁ = {(a, c) : (a, b) ∈ R₁ and (b, c) ∈ R₂
for some b}.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..polyspace import Subspace, classify, is_poly_lagrangian, omega_orthogonal
from ..polyspace.types import CONTAINMENT_TOL
from ..utils import exceptions
from .spaces import PolySymplecticSpace

log = logging.getLogger('polygrpd')


@dataclass(frozen=True, eq=False)
class LinearRelation:
    source: PolySymplecticSpace
    target: PolySymplecticSpace
    #: subspace of source ⊕ target
    graph: Subspace
    name: str = ''

    def __post_init__(self):
        expected = self.source.dim + self.target.dim
        if self.graph.ambient_dim != expected:
            raise exceptions.SpaceMismatch(
                f"Graph lives in R^{self.graph.ambient_dim}, relation {self.name!r} needs R^{expected}"
            )

    @property
    def dim(self) -> int:
        return self.graph.dim

    def ambient(self) -> PolySymplecticSpace:
        """
        (source, −ω) ⊕ (target, ω)
        """
        return self.source.negate().direct_sum(self.target)

    def equals(self, other: 'LinearRelation', tol: float = CONTAINMENT_TOL) -> bool:
        return self.graph.ambient_dim == other.graph.ambient_dim and self.graph.equals(other.graph, tol)

    def distance(self, other: 'LinearRelation') -> Optional[float]:
        """
        Max leakage between the graphs; None when dimensions differ
        """
        if self.graph.ambient_dim != other.graph.ambient_dim or self.dim != other.dim:
            return None
        return self.graph.distance(other.graph)

    def mismatch(self, other: 'LinearRelation') -> int:
        return self.graph.mismatch(other.graph)

    def domain(self) -> Subspace:
        """
        Projection of the graph onto the source
        """
        return Subspace(self.source.dim, self.graph.basis[:self.source.dim])

    def __repr__(self):
        return f"<LinearRelation {self.name!r} {self.source.dim}->{self.target.dim} dim={self.dim}>"


def identity(space: PolySymplecticSpace) -> LinearRelation:
    return graph_of(np.eye(space.dim), space, space, 'id')


def graph_of(matrix, source: PolySymplecticSpace, target: PolySymplecticSpace, name: str = '') -> LinearRelation:
    """
    {(x, A x)} for a (target.dim, source.dim) matrix A
    """
    matrix = np.asarray(matrix, dtype=float).reshape(target.dim, source.dim)
    return LinearRelation(source, target, Subspace(source.dim + target.dim, np.vstack([np.eye(source.dim), matrix])),
                          name)


def transpose(relation: LinearRelation) -> LinearRelation:
    n = relation.source.dim
    basis = relation.graph.basis
    return LinearRelation(relation.target, relation.source,
                          Subspace(basis.shape[0], np.vstack([basis[n:], basis[:n]])),
                          f"{relation.name}^T")


def compose_with_defect(first: LinearRelation, second: LinearRelation) -> Tuple[LinearRelation, int]:
    """
    second ∘ first and the dimension of {b : (0, b) ∈ first, (b, 0) ∈ second}

    :raise SpaceMismatch: if first.target is not second.source
    """
    if not first.target.same_as(second.source):
        raise exceptions.SpaceMismatch(
            f"Cannot compose {first!r} with {second!r}: middle spaces differ"
        )
    a, b, c = first.source.dim, first.target.dim, second.target.dim
    total = a + b + c
    # first ⊕ C and A ⊕ second inside A ⊕ B ⊕ C
    left = np.zeros((total, first.dim + c))
    left[:a + b, :first.dim] = first.graph.basis
    left[a + b:, first.dim:] = np.eye(c)
    right = np.zeros((total, a + second.dim))
    right[:a, :a] = np.eye(a)
    right[a:, a:] = second.graph.basis
    fiber = Subspace(total, left).intersect(Subspace(total, right))

    outer = np.vstack([fiber.basis[:a], fiber.basis[a + b:]])
    graph = Subspace(a + c, outer)
    defect = fiber.dim - graph.dim
    if defect:
        log.debug("Composition %s∘%s has defect %d", second.name, first.name, defect)
    return LinearRelation(first.source, second.target, graph, f"{second.name}∘{first.name}"), defect


def compose(first: LinearRelation, second: LinearRelation) -> LinearRelation:
    return compose_with_defect(first, second)[0]


def product(first: LinearRelation, second: LinearRelation) -> LinearRelation:
    """
    first × second: A₁ ⊕ A₂ → B₁ ⊕ B₂
    """
    a1, b1 = first.source.dim, first.target.dim
    a2, b2 = second.source.dim, second.target.dim
    k1, k2 = first.dim, second.dim
    vectors = np.zeros((a1 + a2 + b1 + b2, k1 + k2))
    vectors[:a1, :k1] = first.graph.basis[:a1]
    vectors[a1 + a2:a1 + a2 + b1, :k1] = first.graph.basis[a1:]
    vectors[a1:a1 + a2, k1:] = second.graph.basis[:a2]
    vectors[a1 + a2 + b1:, k1:] = second.graph.basis[a2:]
    return LinearRelation(first.source.direct_sum(second.source), first.target.direct_sum(second.target),
                          Subspace(vectors.shape[0], vectors), f"{first.name}x{second.name}")


def swap(first: PolySymplecticSpace, second: PolySymplecticSpace) -> LinearRelation:
    """
    Graph of (x, y) ↦ (y, x) from first ⊕ second to second ⊕ first
    """
    m, n = first.dim, second.dim
    matrix = np.zeros((m + n, m + n))
    matrix[:n, m:] = np.eye(n)
    matrix[n:, :m] = np.eye(m)
    return graph_of(matrix, first.direct_sum(second), second.direct_sum(first), 'swap')


def diagonal(space: PolySymplecticSpace) -> LinearRelation:
    """
    Relation from a point to space ⊕ space with graph {(x, x)}
    """
    point = PolySymplecticSpace.point(space.order)
    return LinearRelation(point, space.direct_sum(space), Subspace(2 * space.dim, np.vstack([np.eye(space.dim)] * 2)),
                          'diagonal')


def everything(source: PolySymplecticSpace, target: PolySymplecticSpace) -> LinearRelation:
    return LinearRelation(source, target, Subspace.full(source.dim + target.dim), 'all')


def is_lagrangian_relation(relation: LinearRelation) -> bool:
    """
    graph^ω = graph for (source, −ω) ⊕ (target, ω)
    """
    form = relation.ambient().form
    return omega_orthogonal(form, relation.graph).equals(relation.graph)


def is_poly_lagrangian_relation(relation: LinearRelation) -> bool:
    form = relation.ambient().form
    isotropic = omega_orthogonal(form, relation.graph).contains(relation.graph)
    return isotropic and is_poly_lagrangian(form, relation.graph)


def is_isotropic_in(space: PolySymplecticSpace, subspace: Subspace) -> bool:
    return omega_orthogonal(space.form, subspace).contains(subspace)


def is_lagrangian_in(space: PolySymplecticSpace, subspace: Subspace) -> bool:
    return omega_orthogonal(space.form, subspace).equals(subspace)


def classify_relation(relation: LinearRelation):
    """
    Full classification of the graph; needs a nondegenerate ambient form
    """
    return classify(relation.ambient().form, relation.graph)
