"""
Pointwise multilinear algebra of poly-symplectic vector spaces.

Conventions: ω_i(X, Y) = Xᵀ W_i Y and (i_X ω_i)(Y) = ω_i(X, Y).
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from ..utils import exceptions, linalg
from ..utils.tolerances import DEFAULT
from .types import CotupleSubspace, PolyForm, Subspace

log = logging.getLogger('polygrpd')


def annihilator(space: Subspace) -> Subspace:
    """
    Ann(L) = {α : α(X) = 0 for X in L}, as a subspace of the dual (ℝ^n)*
    """
    return Subspace.kernel(space.basis.T, space.ambient_dim)


def polar(section_space: CotupleSubspace) -> Subspace:
    """
    S° = {X : i_X η = 0 for every η in S}
    """
    return Subspace.kernel(section_space.stacked(), section_space.ambient_dim)


def omega_sharp(form: PolyForm, space: Subspace, tolerances=DEFAULT) -> np.ndarray:
    """
    Matrix of X ↦ i_X ω from L to Ann(L) ⊗ ℝ^r.

    Columns follow the orthonormal basis of L, rows run slot by slot over
    the orthonormal basis of Ann(L).

    :raise NotIsotropic: when i_X ω has a component along L
    """
    ann = annihilator(space)
    # (r, n, k): covector rows of i_X ω_i for every basis vector X
    covectors = np.einsum('ja,ijl->ila', space.basis, form.components)
    along = np.einsum('ila,lb->iab', covectors, space.basis)
    leak = float(np.max(np.abs(along), initial=0.0))
    scale = max(1.0, form.norm())
    if leak > tolerances.rank_rtol * scale:
        raise exceptions.NotIsotropic().with_residual(leak, tolerances.rank_rtol * scale)
    coordinates = np.einsum('lc,ila->ica', ann.basis, covectors)
    return coordinates.reshape(form.order * ann.dim, space.dim)


def omega_orthogonal(form: PolyForm, space: Subspace) -> Subspace:
    """
    L^ω = {X : ω_i(Y, X) = 0 for Y in L and every i}
    """
    rows = np.einsum('ja,ijl->ial', space.basis, form.components)
    return Subspace.kernel(rows.reshape(-1, form.dim), form.dim)


@dataclass(frozen=True)
class Classification:
    isotropic: bool
    coisotropic: bool
    lagrangian: bool
    poly_lagrangian: bool

    def as_dict(self):
        return {
            'isotropic': self.isotropic,
            'coisotropic': self.coisotropic,
            'lagrangian': self.lagrangian,
            'poly_lagrangian': self.poly_lagrangian,
        }


def is_poly_lagrangian(form: PolyForm, space: Subspace, tolerances=DEFAULT) -> bool:
    codim = form.dim - space.dim
    if space.dim != form.order * codim:
        return False
    try:
        sharp = omega_sharp(form, space, tolerances)
    except exceptions.NotIsotropic:
        return False
    return linalg.rank_svd(sharp, tolerances.rank_rtol) == space.dim


def classify(form: PolyForm, space: Subspace, tolerances=DEFAULT) -> Classification:
    """
    Isotropic / coisotropic / Lagrangian / poly-Lagrangian flags of L

    :raise DegeneratePolyForm: if ⋂ ker ω_i ≠ {0}
    """
    if not form.is_nondegenerate():
        raise exceptions.DegeneratePolyForm()
    orthogonal = omega_orthogonal(form, space)
    isotropic = orthogonal.contains(space)
    coisotropic = space.contains(orthogonal)
    poly_lagrangian = isotropic and is_poly_lagrangian(form, space, tolerances)
    return Classification(
        isotropic=isotropic,
        coisotropic=coisotropic,
        lagrangian=isotropic and coisotropic,
        poly_lagrangian=poly_lagrangian,
    )


@dataclass
class DimensionScan:
    dim: int
    #: k ≠ r·(n − k), so no poly-Lagrangian subspace of this dimension exists
    impossible: bool
    tried: int = 0
    found: Optional[Subspace] = None


@dataclass
class ScanResult:
    dimensions: List[DimensionScan] = field(default_factory=list)

    @property
    def exists(self) -> bool:
        return any(scan.found is not None for scan in self.dimensions)

    @property
    def certified_absent(self) -> bool:
        """
        Every dimension is excluded by the count argument
        """
        return all(scan.impossible for scan in self.dimensions)


def scan_poly_lagrangian(form: PolyForm, rng: Optional[np.random.Generator] = None,
                         random_draws: int = 50, tolerances=DEFAULT) -> ScanResult:
    """
    Search every dimension for a poly-Lagrangian subspace.

    Dimensions failing k = r·(n − k) are certified empty without search;
    others try all coordinate subspaces and ``random_draws`` random ones.
    """
    n, r = form.dim, form.order
    rng = rng if rng is not None else np.random.default_rng(0)
    result = ScanResult()
    for k in range(n + 1):
        scan = DimensionScan(dim=k, impossible=k != r * (n - k))
        result.dimensions.append(scan)
        if scan.impossible:
            continue
        candidates = (Subspace(n, np.eye(n)[:, list(axes)]) for axes in itertools.combinations(range(n), k))
        randoms = (Subspace(n, rng.standard_normal((n, k))) for _ in range(random_draws))
        for candidate in itertools.chain(candidates, randoms):
            scan.tried += 1
            if is_poly_lagrangian(form, candidate, tolerances):
                scan.found = candidate
                break
    log.debug("Poly-Lagrangian scan on %r: %s", form,
              [(scan.dim, scan.impossible, scan.found is not None) for scan in result.dimensions])
    return result


@dataclass(frozen=True)
class CoisotropicConditions:
    cond_a: bool
    cond_b: bool
    residual_a: float
    residual_b: float
    #: dim of S ∩ Ann(L) ⊗ ℝ^r
    intersection_dim: int


def section_intersection(frame: np.ndarray, space: Subspace) -> np.ndarray:
    """
    Frame coefficients spanning S ∩ Ann(space) ⊗ ℝ^r.

    :param frame: (K, r, n) frame of S
    :return: (K, w) columns of coefficients
    """
    # rows (slot, vector of L), columns frame elements
    pairing = np.einsum('ail,lb->iba', frame, space.basis).reshape(-1, frame.shape[0])
    return linalg.null_space(pairing, cols=frame.shape[0])


def coisotropic_conditions(sections: CotupleSubspace, anchor, space: Subspace,
                           tolerances=DEFAULT) -> CoisotropicConditions:
    """
    (a) P(S ∩ Ann(L)⊗ℝ^r) ⊂ L and (b) Ann(L)⊗ℝ^r ⊂ (S ∩ Ann(L)⊗ℝ^r)^⊥.

    :param sections: S with its basis matching the anchor rows
    :param anchor: (K, n), row a is P of basis element a
    """
    anchor = np.asarray(anchor, dtype=float)
    coefficients = section_intersection(sections.basis, space)
    images = anchor.T @ coefficients
    residual_a = space.leakage(images)
    ann = annihilator(space)
    # every element of Ann(L)⊗ℝ^r puts one annihilator covector in one slot
    residual_b = float(np.max(np.abs(ann.basis.T @ images), initial=0.0))
    scale = max(1.0, float(np.max(np.abs(anchor), initial=0.0)))
    tol = tolerances.adm * scale
    return CoisotropicConditions(
        cond_a=residual_a <= tol,
        cond_b=residual_b <= tol,
        residual_a=residual_a,
        residual_b=residual_b,
        intersection_dim=coefficients.shape[1],
    )


@dataclass(frozen=True)
class PoissonMapTest:
    pullback: bool
    coisotropic: bool
    pullback_residual: float

    @property
    def is_poisson(self) -> bool:
        return self.pullback and self.coisotropic


def poisson_map_test(source_frame, source_anchor, target_frame, target_anchor, differential,
                     tolerances=DEFAULT) -> PoissonMapTest:
    """
    Pointwise test that f: M → N is poly-Poisson: f*S_N ⊂ S_M and graph(df)
    is coisotropic in M × N̄, where N̄ carries the anchor −P_N.

    :param differential: (n_N, n_M) Jacobian of f at the point
    """
    source_frame = np.asarray(source_frame, dtype=float)
    target_frame = np.asarray(target_frame, dtype=float)
    differential = np.asarray(differential, dtype=float)
    k_m, r, n_m = source_frame.shape
    k_n, _, n_n = target_frame.shape

    pulled = np.einsum('ail,lm->aim', target_frame, differential)
    _, pullback_residual = linalg.lstsq(source_frame.reshape(k_m, -1).T, pulled.reshape(k_n, -1).T)

    frame = np.zeros((k_m + k_n, r, n_m + n_n))
    frame[:k_m, :, :n_m] = source_frame
    frame[k_m:, :, n_m:] = target_frame
    anchor = np.zeros((k_m + k_n, n_m + n_n))
    anchor[:k_m, :n_m] = source_anchor
    anchor[k_m:, n_m:] = -np.asarray(target_anchor, dtype=float)
    graph = Subspace(n_m + n_n, np.vstack([np.eye(n_m), differential]))
    conditions = coisotropic_conditions(CotupleSubspace(frame), anchor, graph, tolerances)
    return PoissonMapTest(
        pullback=pullback_residual <= tolerances.adm,
        coisotropic=conditions.cond_a,
        pullback_residual=pullback_residual,
    )
