"""Rank agreement between two orderings."""

from __future__ import annotations

from typing import Sequence

from .errors import LengthMismatch, NotAPermutation


def _check_permutation(rank: Sequence[int], name: str) -> list[int]:
    values = [int(v) for v in rank]
    if sorted(values) != list(range(1, len(values) + 1)):
        raise NotAPermutation(f"{name} is not a permutation of 1..{len(values)}: {values}")
    return values


def spearman(rank_a: Sequence[int], rank_b: Sequence[int]) -> float:
    """Spearman's rho for two tie-free rankings (1-based)."""
    if len(rank_a) != len(rank_b):
        raise LengthMismatch(f"rankings differ in length: {len(rank_a)} vs {len(rank_b)}")
    n = len(rank_a)
    if n < 2:
        raise LengthMismatch("need at least 2 ranked items")
    a = _check_permutation(rank_a, "rank_a")
    b = _check_permutation(rank_b, "rank_b")
    d2 = sum((x - y) ** 2 for x, y in zip(a, b))
    return 1.0 - 6.0 * d2 / (n * (n * n - 1))
