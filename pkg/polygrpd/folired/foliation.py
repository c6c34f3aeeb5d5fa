import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..polyspace import PolyForm, Subspace
from ..structures import PolyPoissonStructure
from ..utils import exceptions

log = logging.getLogger('polygrpd')


def distribution_at(structure: PolyPoissonStructure, x) -> Subspace:
    """
    D_x = span of the anchor vectors v_a(x)
    """
    return Subspace(structure.dim, structure.anchor_at(x).T, rtol=structure.tolerances.rank_rtol)


@dataclass
class LeafForm:
    """
    Leaf poly-form on D_x, written in the orthonormal basis ``basis`` (n, k)
    """
    basis: np.ndarray
    components: np.ndarray
    #: max |ω_O(P(σ_a), ·) − ι*σ_a| over the frame
    consistency_residual: float
    skew_residual: float

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    @property
    def form(self) -> PolyForm:
        return PolyForm(self.components)

    def ambient(self) -> np.ndarray:
        """
        Components Q Ω_i Qᵀ on the ambient tangent space
        """
        return np.einsum('ja,iab,kb->ijk', self.basis, self.components, self.basis)

    def is_nondegenerate(self, rtol=None) -> bool:
        return self.dim == 0 or Subspace.kernel(self.components.reshape(-1, self.dim), self.dim, rtol).dim == 0


def leaf_two_form(structure: PolyPoissonStructure, x) -> LeafForm:
    """
    Solve ω_O(P(σ_a), w) = σ_a(w) for w ∈ D_x, slot by slot.

    With Y_a = Qᵀ v_a and B_{a,i} = Qᵀ σ_{a,i} this is Y Ω_i = B_i; it has
    a solution exactly when the anchor kills every relation among frame
    elements restricted to D.

    :raise IllPosed: if the system is inconsistent or its solution is not skew
    """
    tolerances = structure.tolerances
    basis = distribution_at(structure, x).basis
    k = basis.shape[1]
    if k == 0:
        return LeafForm(basis, np.zeros((structure.order, 0, 0)), 0.0, 0.0)

    anchors = structure.anchor_at(x) @ basis
    restricted = np.einsum('aik,kb->iab', structure.frame_at(x), basis)
    inverse = scipy.linalg.pinv(anchors)
    components = np.einsum('ca,iab->icb', inverse, restricted)

    consistency = float(np.max(np.abs(np.einsum('ac,icb->iab', anchors, components) - restricted), initial=0.0))
    skew = float(np.max(np.abs(components + np.swapaxes(components, 1, 2)), initial=0.0))
    scale = max(1.0, float(np.max(np.abs(restricted), initial=0.0)))
    tolerance = tolerances.adm * scale
    log.debug("Leaf form of %r at %s: dim %d, consistency %.3e, skew %.3e",
              structure, np.asarray(x).tolist(), k, consistency, skew)
    if consistency > tolerance:
        raise exceptions.IllPosed('Leaf form equations are inconsistent').with_residual(consistency, tolerance)
    if skew > tolerance:
        raise exceptions.IllPosed('Leaf form is not skew').with_residual(skew, tolerance)
    return LeafForm(basis, 0.5 * (components - np.swapaxes(components, 1, 2)), consistency, skew)
