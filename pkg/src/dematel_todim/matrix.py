"""The crisp direct-relation matrix shared by DEMATEL and TODIM."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import NegativeEntry, NonSquare, ValidationError


@dataclass(frozen=True, eq=False)
class DirectRelationMatrix:
    """Square, non-negative influence matrix with a zero diagonal.

    ``values[i, j]`` is the direct influence of criterion ``i`` on ``j``.
    The diagonal is forced to zero on construction. The stored array is
    read-only.
    """

    values: np.ndarray
    ids: tuple[str, ...] = field(default=())

    def __post_init__(self):
        a = np.array(self.values, dtype=float, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise NonSquare(f"direct-relation matrix must be square, got shape {a.shape}")
        n = a.shape[0]
        if n < 2:
            raise ValidationError("need at least 2 criteria")
        if not np.all(np.isfinite(a)):
            raise ValidationError("direct-relation matrix has non-finite entries")
        np.fill_diagonal(a, 0.0)
        if np.any(a < 0):
            i, j = np.argwhere(a < 0)[0]
            raise NegativeEntry(f"negative entry {a[i, j]} at row {i + 1}, column {j + 1}")
        a.setflags(write=False)
        object.__setattr__(self, "values", a)
        ids = tuple(self.ids) if self.ids else tuple(f"C{k + 1}" for k in range(n))
        if len(ids) != n:
            raise ValidationError(f"{len(ids)} criterion ids for a {n}x{n} matrix")
        if len(set(ids)) != n:
            raise ValidationError("criterion ids must be unique")
        object.__setattr__(self, "ids", ids)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectRelationMatrix):
            return NotImplemented
        return self.ids == other.ids and np.array_equal(self.values, other.values)

    def index_of(self, criterion_id: str) -> int:
        try:
            return self.ids.index(criterion_id)
        except ValueError:
            raise ValidationError(f"unknown criterion id {criterion_id!r}") from None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], ids: Sequence[str] = ()) -> DirectRelationMatrix:
        return cls(np.asarray(rows, dtype=float), tuple(ids))
