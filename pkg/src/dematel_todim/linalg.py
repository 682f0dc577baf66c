"""Dense LU factorization with partial pivoting for small systems."""

from __future__ import annotations

import numpy as np

from .errors import SingularSystem

PIVOT_RTOL = 1e-12


def lu_factor(a: np.ndarray, rtol: float = PIVOT_RTOL) -> tuple[np.ndarray, np.ndarray]:
    """Factor ``P a = L U`` in place on a copy.

    Returns the packed LU matrix (unit lower part below the diagonal) and the
    row permutation as an index array. Raises :class:`SingularSystem` when a
    pivot falls below ``rtol * max|a|``.
    """
    lu = np.array(a, dtype=float, copy=True)
    n = lu.shape[0]
    if lu.ndim != 2 or lu.shape[1] != n:
        raise ValueError(f"expected a square matrix, got shape {lu.shape}")
    perm = np.arange(n)
    scale = np.max(np.abs(lu)) if n else 0.0
    threshold = rtol * scale
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        pivot = lu[p, k]
        if scale == 0.0 or abs(pivot) < threshold or pivot == 0.0:
            raise SingularSystem(
                f"matrix is numerically singular: pivot {abs(pivot):.3e} at step {k + 1} "
                f"(threshold {threshold:.3e})",
                pivot=float(abs(pivot)),
            )
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[[k, p]] = perm[[p, k]]
        lu[k + 1:, k] /= pivot
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, perm


def lu_solve(lu: np.ndarray, perm: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve ``a x = b`` given the output of :func:`lu_factor`; ``b`` may be 1-D or 2-D."""
    x = np.array(b, dtype=float, copy=True)[perm]
    n = lu.shape[0]
    for i in range(1, n):
        x[i] -= lu[i, :i] @ x[:i]
    for i in range(n - 1, -1, -1):
        x[i] -= lu[i, i + 1:] @ x[i + 1:]
        x[i] /= lu[i, i]
    return x


def solve(a: np.ndarray, b: np.ndarray, rtol: float = PIVOT_RTOL) -> np.ndarray:
    lu, perm = lu_factor(a, rtol)
    return lu_solve(lu, perm, b)
