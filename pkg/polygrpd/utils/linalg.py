"""
Rank-revealing helpers on top of :mod:`scipy.linalg`.

All rank decisions use the threshold ``rtol * s_max`` with an absolute
floor, so empty and numerically zero matrices have rank 0.
"""
import numpy as np
import scipy.linalg

from .tolerances import DEFAULT

#: singular values below this are zero whatever the scale of the matrix
ABSOLUTE_FLOOR = 1e-13


def as_matrix(a, rows=None, cols=None) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim == 1:
        a = a.reshape(-1, 1) if rows is None else a.reshape(rows, -1)
    if a.size == 0 and rows is not None and cols is not None:
        return np.zeros((rows, cols))
    return a


def threshold(singular, rtol=None) -> float:
    rtol = DEFAULT.rank_rtol if rtol is None else rtol
    if singular.size == 0:
        return ABSOLUTE_FLOOR
    return max(rtol * float(singular[0]), ABSOLUTE_FLOOR)


def singular_values(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return np.zeros(0)
    return scipy.linalg.svd(a, compute_uv=False)


def rank_svd(a, rtol=None) -> int:
    s = singular_values(a)
    return int(np.count_nonzero(s > threshold(s, rtol)))


def rank_qr(a, rtol=None) -> int:
    """
    Rank from the diagonal of a column-pivoted QR factorization
    """
    a = np.asarray(a, dtype=float)
    if a.size == 0:
        return 0
    r = scipy.linalg.qr(a, mode='r', pivoting=True)[0]
    diagonal = np.abs(np.diag(r))
    if diagonal.size == 0:
        return 0
    return int(np.count_nonzero(diagonal > threshold(diagonal, rtol)))


def null_space(a, cols=None, rtol=None) -> np.ndarray:
    """
    Orthonormal basis of the kernel as columns

    :param a: matrix (m, n); ``m`` may be 0
    :param cols: n when ``a`` is empty and its shape is ambiguous
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[-1] if a.ndim == 2 else cols
    if a.ndim != 2 or a.shape[0] == 0:
        return np.eye(n)
    if n == 0:
        return np.zeros((0, 0))
    _, s, vh = scipy.linalg.svd(a, full_matrices=True)
    rank = int(np.count_nonzero(s > threshold(s, rtol)))
    return vh[rank:].T.copy()


def orth(a, rows=None, rtol=None) -> np.ndarray:
    """
    Orthonormal basis of the column space
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[1] == 0 or a.shape[0] == 0:
        n = a.shape[0] if a.ndim == 2 else rows
        return np.zeros((n, 0))
    u, s, _ = scipy.linalg.svd(a, full_matrices=False)
    rank = int(np.count_nonzero(s > threshold(s, rtol)))
    return u[:, :rank].copy()


def lstsq(a, b):
    """
    Least-squares solution and the max-norm of the residual
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[1] == 0:
        return np.zeros((0,) + b.shape[1:]), float(np.max(np.abs(b), initial=0.0))
    solution = scipy.linalg.lstsq(a, b)[0]
    residual = float(np.max(np.abs(a @ solution - b), initial=0.0))
    return solution, residual


def skew_part(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return 0.5 * (a - np.swapaxes(a, -1, -2))
