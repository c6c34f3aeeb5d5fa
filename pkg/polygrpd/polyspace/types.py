import logging
import warnings
from typing import Iterable, Optional, Sequence

import numpy as np

from ..utils import exceptions, linalg
from ..utils.tolerances import DEFAULT

log = logging.getLogger('polygrpd')

#: default max-norm tolerance of subspace containment
CONTAINMENT_TOL = 1e-9


def _columns(vectors, rows: int) -> np.ndarray:
    """
    Vectors as a (rows, k) matrix; k may be 0
    """
    vectors = np.asarray(vectors, dtype=float)
    if vectors.size == 0:
        return np.zeros((rows, 0))
    return vectors.reshape(rows, -1)


class Subspace:
    """
    Linear subspace of ℝ^n kept as an orthonormal basis (columns)
    """
    __slots__ = ('ambient_dim', 'basis')

    def __init__(self, ambient_dim: int, vectors=None, rtol: Optional[float] = None):
        if ambient_dim < 0:
            raise ValueError('Ambient dimension must be non-negative')
        self.ambient_dim = int(ambient_dim)
        if vectors is None:
            self.basis = np.zeros((self.ambient_dim, 0))
            return
        self.basis = linalg.orth(_columns(vectors, self.ambient_dim), rows=self.ambient_dim, rtol=rtol)

    @classmethod
    def from_orthonormal(cls, basis) -> 'Subspace':
        basis = np.asarray(basis, dtype=float)
        space = cls(basis.shape[0])
        space.basis = basis
        return space

    @classmethod
    def zero(cls, n: int) -> 'Subspace':
        return cls(n)

    @classmethod
    def full(cls, n: int) -> 'Subspace':
        return cls.from_orthonormal(np.eye(n))

    @classmethod
    def span(cls, *vectors) -> 'Subspace':
        return cls(len(vectors[0]), np.column_stack(vectors))

    @classmethod
    def kernel(cls, matrix, n: Optional[int] = None, rtol=None) -> 'Subspace':
        """
        Kernel of a (m, n) matrix; m may be 0
        """
        matrix = np.asarray(matrix, dtype=float)
        if n is None:
            n = matrix.shape[-1]
        return cls.from_orthonormal(linalg.null_space(matrix.reshape(-1, n), cols=n, rtol=rtol))

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.T

    def leakage(self, vectors) -> float:
        """
        Max-norm of the component of vectors orthogonal to this subspace
        """
        vectors = _columns(vectors, self.ambient_dim)
        if vectors.size == 0:
            return 0.0
        rest = vectors - self.basis @ (self.basis.T @ vectors)
        return float(np.max(np.abs(rest)))

    def contains(self, other, tol: float = CONTAINMENT_TOL) -> bool:
        other_basis = other.basis if isinstance(other, Subspace) else other
        return self.leakage(other_basis) <= tol

    def equals(self, other: 'Subspace', tol: float = CONTAINMENT_TOL) -> bool:
        return self.contains(other, tol) and other.contains(self, tol)

    def distance(self, other: 'Subspace') -> float:
        """
        Max leakage in both directions; inf for different dimensions
        """
        if self.dim != other.dim:
            return float('inf')
        return max(self.leakage(other.basis), other.leakage(self.basis))

    def intersect(self, other: 'Subspace') -> 'Subspace':
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.ambient_dim)
        coefficients = linalg.null_space(np.hstack([self.basis, -other.basis]))
        return Subspace(self.ambient_dim, self.basis @ coefficients[:self.dim])

    def sum(self, other: 'Subspace') -> 'Subspace':
        return Subspace(self.ambient_dim, np.hstack([self.basis, other.basis]))

    def complement_in(self, larger: 'Subspace') -> 'Subspace':
        """
        Orthogonal complement of self inside a larger subspace
        """
        rest = larger.basis - self.basis @ (self.basis.T @ larger.basis)
        return Subspace(self.ambient_dim, rest)

    def mismatch(self, other: 'Subspace') -> int:
        """
        2·dim(A + B) − dim A − dim B; zero exactly when the subspaces coincide
        """
        return 2 * self.sum(other).dim - self.dim - other.dim

    def __repr__(self):
        return f"<Subspace dim={self.dim} in R^{self.ambient_dim}>"


class CovectorTuple:
    """
    Element of ⊕_r T*_x M: r covectors over an n-dimensional chart
    """
    __slots__ = ('rows',)

    def __init__(self, rows):
        rows = np.asarray(rows, dtype=float)
        if rows.ndim != 2:
            raise ValueError(f"Covector tuple needs shape (r, n), got {rows.shape}")
        self.rows = rows

    @classmethod
    def zeros(cls, order: int, n: int) -> 'CovectorTuple':
        return cls(np.zeros((order, n)))

    @property
    def order(self) -> int:
        return self.rows.shape[0]

    @property
    def dim(self) -> int:
        return self.rows.shape[1]

    def contract(self, vector) -> np.ndarray:
        """
        i_X η = (η_1(X), ..., η_r(X))
        """
        return self.rows @ np.asarray(vector, dtype=float)

    def flat(self) -> np.ndarray:
        return self.rows.reshape(-1)

    def __add__(self, other):
        return CovectorTuple(self.rows + other.rows)

    def __sub__(self, other):
        return CovectorTuple(self.rows - other.rows)

    def __neg__(self):
        return CovectorTuple(-self.rows)

    def __mul__(self, scalar):
        return CovectorTuple(self.rows * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return f"<CovectorTuple r={self.order} n={self.dim}>"


class PolyForm:
    """
    r-tuple of skew n×n matrices with ω_i(X, Y) = Xᵀ W_i Y
    """
    __slots__ = ('components',)

    def __init__(self, components, tolerances=DEFAULT):
        components = np.asarray(components, dtype=float)
        if components.ndim == 2:
            components = components[None]
        if components.ndim != 3 or components.shape[1] != components.shape[2]:
            raise ValueError(f"Poly-form needs shape (r, n, n), got {components.shape}")
        skew = linalg.skew_part(components)
        correction = float(np.max(np.abs(components - skew), initial=0.0))
        if correction > tolerances.skew_warn:
            warnings.warn(f"Poly-form components symmetrized, correction {correction:.3e}",
                          exceptions.SkewCorrectionWarning, stacklevel=2)
            log.warning("Symmetrized poly-form components, correction %.3e", correction)
        self.components = skew

    @classmethod
    def from_wedges(cls, n: int, wedges: Sequence[Iterable]) -> 'PolyForm':
        """
        Build from lists of (i, j, coefficient) meaning coefficient·dx_i∧dx_j

        >>> PolyForm.from_wedges(3, [[(0, 1, 1.0)], [(1, 2, 1.0)]])
        """
        components = np.zeros((len(wedges), n, n))
        for slot, terms in enumerate(wedges):
            for i, j, coefficient in terms:
                components[slot, i, j] += coefficient
                components[slot, j, i] -= coefficient
        return cls(components)

    @property
    def order(self) -> int:
        return self.components.shape[0]

    @property
    def dim(self) -> int:
        return self.components.shape[1]

    def evaluate(self, x, y) -> np.ndarray:
        return np.einsum('i,kij,j->k', np.asarray(x, float), self.components, np.asarray(y, float))

    def contract(self, vector) -> CovectorTuple:
        """
        i_X ω as a covector tuple: row i is Xᵀ W_i
        """
        return CovectorTuple(np.einsum('j,kjl->kl', np.asarray(vector, float), self.components))

    def kernel(self, rtol=None) -> Subspace:
        """
        ⋂ ker ω_i
        """
        return Subspace.kernel(self.components.reshape(-1, self.dim), self.dim, rtol=rtol)

    def is_nondegenerate(self) -> bool:
        return self.kernel().dim == 0

    def pullback(self, matrix) -> 'PolyForm':
        """
        Components Aᵀ W_i A for a linear map A with columns in ℝ^n
        """
        matrix = np.asarray(matrix, dtype=float)
        return PolyForm(np.einsum('ja,kjl,lb->kab', matrix, self.components, matrix))

    def negate(self) -> 'PolyForm':
        return PolyForm(-self.components)

    def direct_sum(self, other: 'PolyForm') -> 'PolyForm':
        if self.order != other.order:
            raise ValueError('Direct sum needs equal orders')
        n, m = self.dim, other.dim
        components = np.zeros((self.order, n + m, n + m))
        components[:, :n, :n] = self.components
        components[:, n:, n:] = other.components
        return PolyForm(components)

    def norm(self) -> float:
        return float(np.max(np.abs(self.components), initial=0.0))

    def __repr__(self):
        return f"<PolyForm r={self.order} n={self.dim}>"


class CotupleSubspace:
    """
    Subspace of ⊕_r (ℝ^n)* spanned by the given covector tuples.

    The basis is kept as given (not orthonormalized) so that an anchor
    matrix indexed by the same basis can travel with it.
    """
    __slots__ = ('basis',)

    def __init__(self, basis, order: Optional[int] = None, dim: Optional[int] = None, rtol=None):
        basis = np.asarray(basis, dtype=float)
        if basis.size == 0:
            if order is None or dim is None:
                raise ValueError('Empty cotuple subspace needs order and dim')
            basis = np.zeros((0, order, dim))
        if basis.ndim != 3:
            raise ValueError(f"Cotuple basis needs shape (K, r, n), got {basis.shape}")
        count = basis.shape[0]
        if count and linalg.rank_svd(basis.reshape(count, -1), rtol) != count:
            raise ValueError('Cotuple basis is linearly dependent')
        self.basis = basis

    @classmethod
    def slotwise(cls, space: Subspace, order: int) -> 'CotupleSubspace':
        """
        space ⊗ ℝ^r: every basis covector placed in every slot
        """
        n, k = space.ambient_dim, space.dim
        basis = np.zeros((order * k, order, n))
        for slot in range(order):
            basis[slot * k:(slot + 1) * k, slot, :] = space.basis.T
        return cls(basis, order, n)

    @property
    def ambient(self):
        return self.basis.shape[2], self.basis.shape[1]

    @property
    def order(self) -> int:
        return self.basis.shape[1]

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[2]

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def matrix(self) -> np.ndarray:
        """
        Basis flattened to rows of ℝ^{r·n}
        """
        return self.basis.reshape(self.dim, -1)

    def stacked(self) -> np.ndarray:
        """
        Contraction matrix (K·r, n): X ↦ all i_X η values
        """
        return self.basis.reshape(-1, self.ambient_dim)

    def tuples(self):
        return [CovectorTuple(rows) for rows in self.basis]

    def coefficients(self, eta) -> np.ndarray:
        """
        Least-squares coordinates of η in the basis and the residual
        """
        rows = eta.rows if isinstance(eta, CovectorTuple) else np.asarray(eta, dtype=float)
        return linalg.lstsq(self.matrix().T, rows.reshape(-1))

    def contains(self, eta, tol: float) -> bool:
        return self.coefficients(eta)[1] <= tol

    def __repr__(self):
        return f"<CotupleSubspace dim={self.dim} in ⊕_{self.order} (R^{self.ambient_dim})*>"
