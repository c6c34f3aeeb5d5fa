import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..utils import linalg

log = logging.getLogger('polygrpd')

JACOBI_TOL = 1e-12


def hat(vector) -> np.ndarray:
    """
    ℝ³ → so(3), hat(a) b = a × b
    """
    x, y, z = vector
    return np.array([
        [0.0, -z, y],
        [z, 0.0, -x],
        [-y, x, 0.0],
    ])


@dataclass(frozen=True, eq=False)
class LieAlgebraData:
    """
    Lie algebra with [e_i, e_j] = Σ_k c^k_{ij} e_k, stored as ``constants[k, i, j]``.

    ``matrices`` holds an optional faithful matrix representation of the basis,
    used for holonomy and group charts.
    """

    constants: np.ndarray
    matrices: Optional[np.ndarray] = None
    name: str = ''

    def __post_init__(self):
        constants = np.asarray(self.constants, dtype=float)
        if constants.ndim != 3 or len(set(constants.shape)) != 1:
            raise ValueError(f"Structure constants need shape (d, d, d), got {constants.shape}")
        object.__setattr__(self, 'constants', constants)
        if self.matrices is not None:
            object.__setattr__(self, 'matrices', np.asarray(self.matrices, dtype=float))
        if np.max(np.abs(constants + np.swapaxes(constants, 1, 2)), initial=0.0) > JACOBI_TOL:
            raise ValueError('Structure constants are not antisymmetric')
        defect = self.jacobi_defect()
        if defect > JACOBI_TOL:
            raise ValueError(f"Structure constants violate the Jacobi identity ({defect:.3e})")

    @classmethod
    def so3(cls) -> 'LieAlgebraData':
        constants = np.zeros((3, 3, 3))
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            constants[k, i, j] = 1.0
            constants[k, j, i] = -1.0
        return cls(constants, np.array([hat(e) for e in np.eye(3)]), 'so3')

    @classmethod
    def aff1(cls) -> 'LieAlgebraData':
        """
        Two-dimensional nonabelian algebra, [e_1, e_2] = e_2
        """
        matrices = np.array([
            [[1.0, 0.0], [0.0, 0.0]],
            [[0.0, 1.0], [0.0, 0.0]],
        ])
        return cls.from_matrices(matrices, 'aff1')

    @classmethod
    def abelian(cls, dim: int) -> 'LieAlgebraData':
        matrices = np.array([np.diag(e) for e in np.eye(dim)])
        return cls(np.zeros((dim, dim, dim)), matrices, f"abelian{dim}")

    @classmethod
    def from_matrices(cls, matrices, name: str = '') -> 'LieAlgebraData':
        """
        Structure constants of a matrix Lie algebra from its basis
        """
        matrices = np.asarray(matrices, dtype=float)
        dim = matrices.shape[0]
        flat = matrices.reshape(dim, -1).T
        constants = np.zeros((dim, dim, dim))
        for i in range(dim):
            for j in range(dim):
                commutator = matrices[i] @ matrices[j] - matrices[j] @ matrices[i]
                coefficients, residual = linalg.lstsq(flat, commutator.reshape(-1))
                if residual > JACOBI_TOL:
                    raise ValueError('Matrices do not span a Lie subalgebra')
                constants[:, i, j] = coefficients
        constants[np.abs(constants) < JACOBI_TOL] = 0.0
        return cls(constants, matrices, name)

    @property
    def dim(self) -> int:
        return self.constants.shape[0]

    @property
    def is_abelian(self) -> bool:
        return not np.any(self.constants)

    def jacobi_defect(self) -> float:
        c = self.constants
        # [[e_i, e_j], e_k] + cyclic
        nested = np.einsum('mij,lmk->lijk', c, c)
        cyclic = nested + np.transpose(nested, (0, 2, 3, 1)) + np.transpose(nested, (0, 3, 1, 2))
        return float(np.max(np.abs(cyclic), initial=0.0))

    def bracket(self, u, v) -> np.ndarray:
        return np.einsum('kij,i,j->k', self.constants, u, v)

    def ad(self, u) -> np.ndarray:
        """
        Matrix of v ↦ [u, v]
        """
        return np.einsum('kij,i->kj', self.constants, u)

    def coad(self, u, zeta) -> np.ndarray:
        """
        ad*_u ζ with ⟨ad*_u ζ, v⟩ = ⟨ζ, [u, v]⟩
        """
        return self.ad(u).T @ np.asarray(zeta, dtype=float)

    def matrix(self, u) -> np.ndarray:
        if self.matrices is None:
            raise ValueError(f"Lie algebra {self.name!r} has no matrix representation")
        return np.einsum('a,aij->ij', np.asarray(u, dtype=float), self.matrices)
