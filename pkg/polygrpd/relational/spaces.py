import logging
from typing import Optional

import numpy as np

from ..polyspace import PolyForm, Subspace
from ..utils import exceptions

log = logging.getLogger('polygrpd')

#: |ω(e, f)| below this is treated as zero in the Darboux sweep
DARBOUX_TOL = 1e-10


class PolySymplecticSpace:
    """
    Finite-dimensional poly-symplectic vector space (ℝ^n, ω_1..ω_r)

    :raise DegeneratePolyForm: if ⋂ ker ω_i ≠ {0} and ``strict``
    """

    def __init__(self, form: PolyForm, name: str = '', strict: bool = True):
        if strict and form.dim and not form.is_nondegenerate():
            raise exceptions.DegeneratePolyForm(f"Poly-form of {name or 'space'} has a common kernel")
        self.form = form
        self.name = name

    @classmethod
    def point(cls, order: int) -> 'PolySymplecticSpace':
        return cls(PolyForm(np.zeros((order, 0, 0))), 'point')

    @property
    def dim(self) -> int:
        return self.form.dim

    @property
    def order(self) -> int:
        return self.form.order

    def direct_sum(self, other: 'PolySymplecticSpace') -> 'PolySymplecticSpace':
        return PolySymplecticSpace(self.form.direct_sum(other.form),
                                   f"{self.name}+{other.name}", strict=False)

    def power(self, count: int) -> 'PolySymplecticSpace':
        result = self
        for _ in range(count - 1):
            result = result.direct_sum(self)
        return result

    def negate(self) -> 'PolySymplecticSpace':
        return PolySymplecticSpace(self.form.negate(), f"-{self.name}", strict=False)

    def same_as(self, other: 'PolySymplecticSpace', tol: float = 1e-12) -> bool:
        return (self.form.components.shape == other.form.components.shape
                and bool(np.allclose(self.form.components, other.form.components, atol=tol, rtol=0.0)))

    def is_anti_symplectic(self, matrix, tol: float = 1e-12) -> bool:
        """
        Aᵀ W_i A = −W_i for every slot
        """
        return bool(np.allclose(self.form.pullback(matrix).components, -self.form.components, atol=tol, rtol=0.0))

    def __repr__(self):
        return f"<PolySymplecticSpace {self.name!r} n={self.dim} r={self.order}>"


def darboux_basis(matrix) -> np.ndarray:
    """
    Symplectic Gram-Schmidt: columns (e_1..e_k, f_1..f_k) with ω(e_i, f_j) = δ_ij

    :param matrix: nondegenerate skew matrix W, ω(x, y) = xᵀ W y
    """
    matrix = np.asarray(matrix, dtype=float)
    n = matrix.shape[0]
    if n % 2:
        raise exceptions.DegeneratePolyForm('Odd-dimensional space carries no symplectic form')

    def omega(x, y):
        return float(x @ matrix @ y)

    remaining = [column for column in np.eye(n)]
    es, fs = [], []
    while remaining:
        e = remaining.pop(0)
        pairings = [abs(omega(e, v)) for v in remaining]
        if not pairings or max(pairings) < DARBOUX_TOL:
            raise exceptions.DegeneratePolyForm('Form is degenerate')
        f = remaining.pop(int(np.argmax(pairings)))
        f = f / omega(e, f)
        es.append(e)
        fs.append(f)
        projected = [v + omega(v, e) * f - omega(v, f) * e for v in remaining]
        remaining = [v for v in projected if np.max(np.abs(v)) > DARBOUX_TOL]
    return np.column_stack(es + fs)


def random_lagrangian(space: PolySymplecticSpace, rng: Optional[np.random.Generator] = None) -> Subspace:
    """
    span{e_i + Σ_j S_ij f_j} for a random symmetric S in a Darboux basis (r = 1)
    """
    if space.order != 1:
        raise ValueError('Random Lagrangian subspaces are drawn for symplectic spaces only')
    rng = rng if rng is not None else np.random.default_rng(0)
    basis = darboux_basis(space.form.components[0])
    k = space.dim // 2
    symmetric = rng.standard_normal((k, k))
    symmetric = 0.5 * (symmetric + symmetric.T)
    vectors = basis[:, :k] + basis[:, k:] @ symmetric
    log.debug("Drew a random Lagrangian subspace of dimension %d in %r", k, space)
    return Subspace(space.dim, vectors)
