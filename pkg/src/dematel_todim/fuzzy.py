"""Triangular fuzzy numbers and linguistic scales."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import UnknownLabel, ValidationError


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """A triangular fuzzy number ``(l, m, r)`` with ``l <= m <= r``."""

    l: float
    m: float
    r: float

    def __post_init__(self):
        vals = (self.l, self.m, self.r)
        if not all(math.isfinite(v) for v in vals):
            raise ValidationError(f"non-finite TFN component in {vals}")
        if not self.l <= self.m <= self.r:
            raise ValidationError(f"TFN must satisfy l <= m <= r, got {vals}")

    @classmethod
    def crisp(cls, value: float) -> TriangularFuzzyNumber:
        return cls(value, value, value)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l, self.m, self.r)

    def __add__(self, other: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
        return tfn_add(self, other)

    def __sub__(self, other: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
        return tfn_sub(self, other)

    def __neg__(self) -> TriangularFuzzyNumber:
        return TriangularFuzzyNumber(-self.r, -self.m, -self.l)


TFN = TriangularFuzzyNumber


def membership(a: TriangularFuzzyNumber, x: float) -> float:
    """Degree to which ``x`` belongs to ``a``.

    Piecewise linear: rises on ``[l, m]``, falls on ``[m, r]``, zero outside
    the support. A degenerate TFN is the indicator of its mode.
    """
    l, m, r = a.l, a.m, a.r
    if x == m:
        return 1.0
    if x < l or x > r:
        return 0.0
    if x < m:
        return (x - l) / (m - l)
    return (r - x) / (r - m)


def tfn_add(a: TriangularFuzzyNumber, b: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    return TriangularFuzzyNumber(a.l + b.l, a.m + b.m, a.r + b.r)


def tfn_sub(a: TriangularFuzzyNumber, b: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    # outer bounds pair with the opposite bound of b, so the result widens
    return TriangularFuzzyNumber(a.l - b.r, a.m - b.m, a.r - b.l)


class LinguisticScale:
    """Ordered, immutable mapping from judgment labels to TFNs.

    Labels are case-sensitive; surrounding whitespace is trimmed both when the
    scale is built and when a label is looked up.
    """

    __slots__ = ("_entries", "_index")

    def __init__(self, entries: Iterable[tuple[str, TriangularFuzzyNumber]] | Mapping):
        if isinstance(entries, Mapping):
            entries = entries.items()
        items = []
        for label, value in entries:
            if not isinstance(label, str) or not label.strip():
                raise ValidationError(f"scale label must be a non-empty string, got {label!r}")
            if not isinstance(value, TriangularFuzzyNumber):
                value = TriangularFuzzyNumber(*value)
            if not (0.0 <= value.l and value.r <= 1.0):
                raise ValidationError(f"scale value for {label!r} must lie in [0, 1], got {value.as_tuple()}")
            items.append((label.strip(), value))
        if len(items) < 2:
            raise ValidationError("a linguistic scale needs at least 2 labels")
        index = dict(items)
        if len(index) != len(items):
            raise ValidationError("duplicate labels in linguistic scale")
        self._entries = tuple(items)
        self._index = index

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self._entries)

    def items(self):
        return self._entries

    def __contains__(self, label) -> bool:
        return isinstance(label, str) and label.strip() in self._index

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinguisticScale) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        body = ", ".join(f"{k}={v.as_tuple()}" for k, v in self._entries)
        return f"LinguisticScale({body})"

    def lookup(self, label: str) -> TriangularFuzzyNumber:
        return scale_lookup(self, label)

    def to_dict(self) -> dict[str, list[float]]:
        return {k: list(v.as_tuple()) for k, v in self._entries}


def scale_lookup(scale: LinguisticScale, label: str) -> TriangularFuzzyNumber:
    try:
        return scale._index[label.strip()]
    except (KeyError, AttributeError):
        raise UnknownLabel(f"label {label!r} not in scale {list(scale.labels)}") from None


# Conventional five-level influence scale for fuzzy DEMATEL.
DEFAULT_SCALE = LinguisticScale(
    [
        ("NO", TFN(0.0, 0.0, 0.25)),
        ("VL", TFN(0.0, 0.25, 0.5)),
        ("L", TFN(0.25, 0.5, 0.75)),
        ("H", TFN(0.5, 0.75, 1.0)),
        ("VH", TFN(0.75, 1.0, 1.0)),
    ]
)
