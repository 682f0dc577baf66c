"""DEMATEL criterion weighting.

The direct-relation matrix is scaled by its largest row sum, the total
(direct plus indirect) relation matrix ``T = D (I - D)^-1`` is obtained by an
LU solve, and each criterion is weighted by its prominence ``r + c``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInfluence, ZeroMatrix
from .linalg import PIVOT_RTOL, solve
from .matrix import DirectRelationMatrix


@dataclass(frozen=True, eq=False)
class DematelResult:
    normalized: np.ndarray
    total: np.ndarray
    r: np.ndarray
    c: np.ndarray
    weights: np.ndarray
    rank: np.ndarray

    @property
    def prominence(self) -> np.ndarray:
        return self.r + self.c

    @property
    def relation(self) -> np.ndarray:
        """Cause/effect split ``r - c``; informational only."""
        return self.r - self.c


def rank_descending(values) -> np.ndarray:
    """1-based ranks by descending value; ties go to the lower index."""
    values = np.asarray(values, dtype=float)
    order = sorted(range(len(values)), key=lambda i: (-values[i], i))
    rank = np.empty(len(values), dtype=int)
    rank[order] = np.arange(1, len(values) + 1)
    return rank


def _as_array(a) -> np.ndarray:
    if isinstance(a, DirectRelationMatrix):
        return a.values
    return np.asarray(a, dtype=float)


def normalize_direct(a) -> np.ndarray:
    a = _as_array(a)
    s = np.max(a.sum(axis=1))
    if not s > 0:
        raise ZeroMatrix("direct-relation matrix has no positive row sum")
    return a / s


def total_relation(d, rtol: float = PIVOT_RTOL) -> np.ndarray:
    """Total-relation matrix ``T = D (I - D)^-1``.

    ``D`` and ``(I - D)^-1`` commute, so this solves ``(I - D) T = D`` column
    by column instead of forming the inverse.
    """
    d = np.asarray(d, dtype=float)
    n = d.shape[0]
    return solve(np.eye(n) - d, d, rtol)


def influence_sums(t) -> tuple[np.ndarray, np.ndarray]:
    t = np.asarray(t, dtype=float)
    return t.sum(axis=1), t.sum(axis=0)


def initial_weights(r, c) -> tuple[np.ndarray, np.ndarray]:
    """Normalized prominence weights and their ranking."""
    prominence = np.asarray(r, dtype=float) + np.asarray(c, dtype=float)
    total = prominence.sum()
    if not total > 0:
        raise DegenerateInfluence(f"total prominence is {total}; weights are undefined")
    w = prominence / total
    return w, rank_descending(w)


def run_dematel(a, rtol: float = PIVOT_RTOL) -> DematelResult:
    d = normalize_direct(a)
    t = total_relation(d, rtol)
    r, c = influence_sums(t)
    w, rank = initial_weights(r, c)
    return DematelResult(normalized=d, total=t, r=r, c=c, weights=w, rank=rank)
