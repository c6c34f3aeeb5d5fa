"""
Linear groupoids G ⇉ M with a poly-form on the arrows.

Composable pairs (g, h) satisfy s(g) = t(h) and the product is a linear map
on that subspace, so every structure map has a linear graph.
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..polyspace import PolyForm, Subspace
from ..structures import covelocity_form
from .relations import LinearRelation, graph_of, is_isotropic_in
from .spaces import PolySymplecticSpace

log = logging.getLogger('polygrpd')


@dataclass(frozen=True, eq=False)
class LinearGroupoid:
    space: PolySymplecticSpace
    base_dim: int
    #: (m, n) matrices of s and t
    source: np.ndarray
    target: np.ndarray
    #: (n, m) matrix of the unit map
    unit: np.ndarray
    #: (n, n) matrix of the inversion
    inverse: np.ndarray
    #: (n, 2n) matrix of the product, meaningful on composable pairs
    product: np.ndarray
    name: str = ''

    @property
    def dim(self) -> int:
        return self.space.dim

    def composable(self) -> Subspace:
        """
        {(g, h) : s(g) = t(h)} in G ⊕ G
        """
        return Subspace.kernel(np.hstack([self.source, -self.target]), 2 * self.dim)

    def multiplication_graph(self) -> Subspace:
        """
        gr(μ) = {(g, h, gh)} in G ⊕ G ⊕ G
        """
        pairs = self.composable().basis
        return Subspace(3 * self.dim, np.vstack([pairs, self.product @ pairs]))

    def multiplication(self) -> LinearRelation:
        """
        μ as a relation G ⊕ G → G
        """
        pairs = self.space.direct_sum(self.space)
        return LinearRelation(pairs, self.space, self.multiplication_graph(), 'mu')

    def inversion(self) -> LinearRelation:
        return graph_of(self.inverse, self.space, self.space, 'I')

    def unit_graph(self) -> Subspace:
        """
        Image of the unit map, the units as a subspace of G
        """
        return Subspace(self.dim, self.unit)

    def unit_relation(self) -> LinearRelation:
        """
        Units as a relation from a point to G
        """
        return LinearRelation(PolySymplecticSpace.point(self.space.order), self.space, self.unit_graph(), 'units')

    def is_multiplicative(self) -> bool:
        """
        gr(μ) is isotropic for ω ⊕ ω ⊕ (−ω)
        """
        ambient = self.space.direct_sum(self.space).direct_sum(self.space.negate())
        return is_isotropic_in(ambient, self.multiplication_graph())

    def __repr__(self):
        return f"<LinearGroupoid {self.name!r} n={self.dim} m={self.base_dim}>"


def pair_groupoid(form: PolyForm, name: str = 'pair', strict: bool = True) -> LinearGroupoid:
    """
    V × V ⇉ V with (x, y)·(y, z) = (x, z) and the form t*ω − s*ω
    """
    k = form.dim
    space = PolySymplecticSpace(form.direct_sum(form.negate()), name, strict=strict)
    eye, zero = np.eye(k), np.zeros((k, k))
    return LinearGroupoid(
        space, k,
        source=np.hstack([zero, eye]),
        target=np.hstack([eye, zero]),
        unit=np.vstack([eye, eye]),
        inverse=np.block([[zero, eye], [eye, zero]]),
        # (x, y, y', z) ↦ (x, z)
        product=np.block([[eye, zero, zero, zero], [zero, zero, zero, eye]]),
        name=name,
    )


def bundle_groupoid(q: int, order: int, name: str = 'bundle') -> LinearGroupoid:
    """
    ⊕_r T*ℝ^q ⇉ ℝ^q, a bundle of groups under fibrewise addition
    """
    n = q * (1 + order)
    space = PolySymplecticSpace(covelocity_form(q, order), name)
    projection = np.hstack([np.eye(q), np.zeros((q, n - q))])
    fibre = np.diag([0.0] * q + [1.0] * (n - q))
    base = np.zeros((n, n))
    base[:q, :q] = np.eye(q)
    return LinearGroupoid(
        space, q,
        source=projection,
        target=projection,
        unit=projection.T,
        inverse=base - fibre,
        # (q, p, q, p') ↦ (q, p + p')
        product=np.hstack([base + fibre, fibre]),
        name=name,
    )


def product_groupoid(first: LinearGroupoid, second: LinearGroupoid, form: Optional[PolyForm] = None,
                     name: str = '') -> LinearGroupoid:
    """
    G₁ × G₂ ⇉ M₁ × M₂; by default with the direct-sum form, otherwise with
    the given form (which may be degenerate)
    """
    n1, n2 = first.dim, second.dim
    m1, m2 = first.base_dim, second.base_dim
    name = name or f"{first.name}x{second.name}"
    if form is None:
        space = first.space.direct_sum(second.space)
    else:
        space = PolySymplecticSpace(form, name, strict=False)

    def block(a, b):
        result = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]))
        result[:a.shape[0], :a.shape[1]] = a
        result[a.shape[0]:, a.shape[1]:] = b
        return result

    # (g1, g2, h1, h2) ↦ (g1 h1, g2 h2)
    product = np.zeros((n1 + n2, 2 * (n1 + n2)))
    product[:n1, :n1] = first.product[:, :n1]
    product[:n1, n1 + n2:2 * n1 + n2] = first.product[:, n1:]
    product[n1:, n1:n1 + n2] = second.product[:, :n2]
    product[n1:, 2 * n1 + n2:] = second.product[:, n2:]
    return LinearGroupoid(
        space, m1 + m2,
        source=block(first.source, second.source),
        target=block(first.target, second.target),
        unit=block(first.unit, second.unit),
        inverse=block(first.inverse, second.inverse),
        product=product,
        name=name,
    )


def zero_form_product(symplectic: PolyForm, zero_dim: int = 1) -> LinearGroupoid:
    """
    Pair groupoid of a symplectic space times the pair groupoid of ℝ^zero_dim,
    with the ℝ²-valued form (ω, 0)
    """
    first = pair_groupoid(symplectic, 'pair')
    second = pair_groupoid(PolyForm(np.zeros((1, zero_dim, zero_dim))), 'zero', strict=False)
    n = first.dim + second.dim
    components = np.zeros((2, n, n))
    components[0, :first.dim, :first.dim] = first.space.form.components[0]
    return product_groupoid(first, second, PolyForm(components), 'pair-x-zero')
