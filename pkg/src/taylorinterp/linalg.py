"""Dense square solves by Gaussian elimination with partial pivoting."""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .errors import DimensionMismatch, NonFiniteInput, SingularMatrix

__all__ = ["PIVOT_RTOL", "solve_dense", "residual_norm"]

#: Pivots smaller than this fraction of the largest initial |a_ij| are singular.
PIVOT_RTOL = 1e-14


def _as_matrix(a: ArrayLike) -> NDArray[np.float64]:
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {a.shape}")
    return a


def _as_vector(b: ArrayLike) -> NDArray[np.float64]:
    b = np.array(b, dtype=np.float64)
    if b.ndim != 1:
        raise DimensionMismatch(f"expected a 1-D vector, got shape {b.shape}")
    return b


def solve_dense(a: ArrayLike, b: ArrayLike) -> NDArray[np.float64]:
    """Solve ``a @ x = b`` for square ``a``.

    Forward elimination with row swaps on the largest remaining pivot,
    followed by back substitution. The inverse of ``a`` is never formed.

    Parameters
    ----------
    a : array_like, shape (n, n)
        Coefficient matrix. Not modified.
    b : array_like, shape (n,)
        Right-hand side. Not modified.

    Returns
    -------
    ndarray, shape (n,)
        The solution vector.

    Raises
    ------
    DimensionMismatch
        If ``a`` is not square or ``b`` has the wrong length.
    SingularMatrix
        If a pivot falls below ``PIVOT_RTOL`` times the largest initial
        absolute entry of ``a``.
    NonFiniteInput
        If any entry of ``a`` or ``b`` is NaN or infinite.
    """
    a = _as_matrix(a)
    b = _as_vector(b)
    n, m = a.shape
    if n != m:
        raise DimensionMismatch(f"matrix must be square, got {n}x{m}")
    if b.shape[0] != n:
        raise DimensionMismatch(f"rhs has length {b.shape[0]}, expected {n}")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise NonFiniteInput("matrix and rhs entries must be finite")
    if n == 0:
        return np.zeros(0)

    scale = float(np.max(np.abs(a)))
    tol = PIVOT_RTOL * scale
    if scale == 0.0:
        raise SingularMatrix("matrix is all zeros")

    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < tol or a[p, k] == 0.0:
            raise SingularMatrix(f"pivot {a[p, k]:.3e} at step {k} is below {tol:.3e}")
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        factors = a[k + 1:, k] / a[k, k]
        a[k + 1:, k:] -= np.outer(factors, a[k, k:])
        b[k + 1:] -= factors * b[k]

    x = np.empty(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1:] @ x[k + 1:]) / a[k, k]
    return x


def residual_norm(a: ArrayLike, x: ArrayLike, b: ArrayLike) -> float:
    """Return the max-norm of ``a @ x - b``."""
    a = _as_matrix(a)
    x = _as_vector(x)
    b = _as_vector(b)
    if a.shape[1] != x.shape[0] or a.shape[0] != b.shape[0]:
        raise DimensionMismatch(
            f"incompatible shapes a={a.shape}, x={x.shape}, b={b.shape}"
        )
    if a.shape[0] == 0:
        return 0.0
    return float(np.max(np.abs(a @ x - b)))
