"""TODIM ranking with prospect-theoretic gains and losses.

Alternatives are compared pairwise on every criterion. Gains contribute
``sqrt(w_rc * diff / sum(w_rc))``, losses ``-(1/theta) * sqrt(sum(w_rc) * |diff| / w_rc)``,
where ``w_rc`` are weights relative to a reference criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dematel import rank_descending
from .errors import ValidationError, ZeroColumn, ZeroReferenceWeight


@dataclass(frozen=True, eq=False)
class TodimInput:
    decision: np.ndarray
    weights: np.ndarray
    theta: float = 1.0
    reference: int | None = None  # 0-based; None selects the heaviest criterion
    normalize_columns: bool = False

    def __post_init__(self):
        x = np.array(self.decision, dtype=float)
        w = np.array(self.weights, dtype=float)
        if x.ndim != 2:
            raise ValidationError(f"decision matrix must be 2-D, got shape {x.shape}")
        if w.shape != (x.shape[1],):
            raise ValidationError(f"{w.size} weights for {x.shape[1]} criteria")
        if not (np.all(np.isfinite(x)) and np.all(x >= 0)):
            raise ValidationError("decision entries must be finite and non-negative")
        if not (np.all(np.isfinite(w)) and np.all(w >= 0)):
            raise ValidationError("weights must be finite and non-negative")
        if abs(w.sum() - 1.0) > 1e-9:
            raise ValidationError(f"weights must sum to 1, got {w.sum()!r}")
        if not (math.isfinite(self.theta) and self.theta > 0):
            raise ValidationError(f"theta must be positive, got {self.theta}")
        ref = default_reference(w) if self.reference is None else int(self.reference)
        if not 0 <= ref < w.size:
            raise ValidationError(f"reference criterion {ref + 1} out of range 1..{w.size}")
        object.__setattr__(self, "decision", x)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "reference", ref)


@dataclass(frozen=True, eq=False)
class TodimResult:
    """All TODIM stages.

    ``xi`` is the min-max normalized dominance sum (larger is better).
    ``loss_share`` is each alternative's share of the total shortfall from the
    best dominance sum (smaller is better); ``final_weights = (1 - loss_share) / (m - 1)``.
    """

    reference: int
    relative_weights: np.ndarray
    decision: np.ndarray
    dominance: np.ndarray
    dominance_sums: np.ndarray
    xi: np.ndarray
    loss_share: np.ndarray
    final_weights: np.ndarray
    rank: np.ndarray
    degenerate: bool = False


def default_reference(weights) -> int:
    """Index of the largest weight, ties to the lower index."""
    return int(np.argmax(np.asarray(weights, dtype=float)))


def relative_weights(weights, reference: int) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if not w[reference] > 0:
        raise ZeroReferenceWeight(f"reference criterion {reference + 1} has weight {w[reference]}")
    out = w / w[reference]
    out[reference] = 1.0
    return out


def normalize_decision(decision, enabled: bool = True) -> np.ndarray:
    x = np.asarray(decision, dtype=float)
    if not enabled:
        return x
    sums = x.sum(axis=0)
    if np.any(sums <= 0):
        c = int(np.flatnonzero(sums <= 0)[0])
        raise ZeroColumn(f"criterion column {c + 1} sums to zero; cannot normalize")
    return x / sums


def phi(w_rc, c: int, x_ic: float, x_jc: float, theta: float = 1.0) -> float:
    """Contribution of criterion ``c`` when comparing two alternatives."""
    diff = x_ic - x_jc
    if diff > 0:
        return math.sqrt(w_rc[c] * diff / math.fsum(w_rc))
    if diff < 0:
        return -math.sqrt(math.fsum(w_rc) * -diff / w_rc[c]) / theta
    return 0.0


def dominance(decision, w_rc, theta: float = 1.0) -> tuple[np.ndarray, np.ndarray]:
    """Pairwise dominance ``delta[i, j]`` and its row sums.

    ``w_rc`` are the relative weights; every criterion must have positive
    weight since a loss on a weightless criterion is unbounded.
    """
    x = np.asarray(decision, dtype=float)
    w_rc = np.asarray(w_rc, dtype=float)
    if np.any(w_rc <= 0):
        c = int(np.flatnonzero(w_rc <= 0)[0])
        raise ValidationError(f"criterion {c + 1} has non-positive weight")
    total = math.fsum(w_rc)
    diff = x[:, None, :] - x[None, :, :]  # [i, j, c]
    gain = np.sqrt(np.where(diff > 0, diff, 0.0) * (w_rc / total))
    loss = np.sqrt(np.where(diff < 0, -diff, 0.0) * (total / w_rc)) / theta
    delta = (gain - loss).sum(axis=2)
    np.fill_diagonal(delta, 0.0)
    # fsum is order-independent, so reordering alternatives permutes sums exactly
    sums = np.array([math.fsum(row) for row in delta])
    return delta, sums


def global_values(dominance_sums):
    """Turn dominance sums into (xi, loss_share, final_weights, rank, degenerate)."""
    s = np.asarray(dominance_sums, dtype=float)
    m = s.size
    if m < 2:
        raise ValidationError("need at least 2 alternatives to normalize dominance")
    lo, hi = s.min(), s.max()
    if hi == lo:
        xi = np.zeros(m)
        loss = np.full(m, 1.0 / m)
        final = np.full(m, 1.0 / m)
        return xi, loss, final, rank_descending(s), True
    xi = (s - lo) / (hi - lo)
    shortfall = hi - s
    loss = shortfall / math.fsum(shortfall)
    final = (1.0 - loss) / (m - 1)
    return xi, loss, final, rank_descending(s), False


def run_todim(inp: TodimInput) -> TodimResult:
    x = normalize_decision(inp.decision, inp.normalize_columns)
    w_rc = relative_weights(inp.weights, inp.reference)
    delta, sums = dominance(x, w_rc, inp.theta)
    if sums.size < 2:
        xi, loss, final, rank, degenerate = np.zeros(1), np.ones(1), np.ones(1), np.ones(1, dtype=int), True
    else:
        xi, loss, final, rank, degenerate = global_values(sums)
    return TodimResult(
        reference=inp.reference,
        relative_weights=w_rc,
        decision=x,
        dominance=delta,
        dominance_sums=sums,
        xi=xi,
        loss_share=loss,
        final_weights=final,
        rank=rank,
        degenerate=degenerate,
    )
