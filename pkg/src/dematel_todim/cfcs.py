"""CFCS defuzzification: multi-expert TFN judgments to crisp scores.

Each ordered criterion pair holds one TFN per expert. The TFNs are
standardized against the spread of the whole cell, left/right normalized,
collapsed to a crisp score per expert (BNP) and averaged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import EmptyCell, MissingCell, RaggedExperts, ValidationError
from .fuzzy import TriangularFuzzyNumber
from .matrix import DirectRelationMatrix


@dataclass(frozen=True)
class CfcsTrace:
    """Intermediate quantities of one cell; per-expert tuples are in expert order.

    On the degenerate path (``delta == 0``) all experts gave the same crisp
    value and the per-expert tuples are empty.
    """

    delta: float
    lower: float
    xl: tuple[float, ...]
    xm: tuple[float, ...]
    xr: tuple[float, ...]
    xls: tuple[float, ...]
    xrs: tuple[float, ...]
    x: tuple[float, ...]
    bnp: tuple[float, ...]
    value: float
    degenerate: bool = False


def cfcs_cell(cell: Sequence[TriangularFuzzyNumber]) -> tuple[float, CfcsTrace]:
    """Defuzzify one cell of K expert judgments.

    Parameters
    ----------
    cell : sequence of TriangularFuzzyNumber
        One TFN per expert for the same ordered pair (i, j).

    Returns
    -------
    value : float
        Mean of the per-expert BNP scores.
    trace : CfcsTrace
    """
    if len(cell) == 0:
        raise EmptyCell("a judgment cell needs at least one expert")
    lo = float(min(t.l for t in cell))
    hi = float(max(t.r for t in cell))
    delta = hi - lo
    if delta == 0.0:
        # every TFN is the same crisp point
        return lo, CfcsTrace(delta, lo, (), (), (), (), (), (), (), lo, degenerate=True)

    xl, xm, xr, xls, xrs, xs, bnp = [], [], [], [], [], [], []
    for t in cell:
        l_ = (t.l - lo) / delta
        m_ = (t.m - lo) / delta
        r_ = (t.r - lo) / delta
        ls = m_ / (1.0 + m_ - l_)
        rs = r_ / (1.0 + r_ - m_)
        x = (ls * (1.0 - ls) + rs * rs) / (1.0 + rs - ls)
        xl.append(l_)
        xm.append(m_)
        xr.append(r_)
        xls.append(ls)
        xrs.append(rs)
        xs.append(x)
        bnp.append(lo + x * delta)
    # fsum is correctly rounded, so the mean does not depend on expert order
    value = math.fsum(bnp) / len(bnp)
    trace = CfcsTrace(
        delta, lo, tuple(xl), tuple(xm), tuple(xr), tuple(xls), tuple(xrs), tuple(xs), tuple(bnp), value
    )
    return value, trace


def defuzzify_surveys(
    cells: Sequence[Sequence[Sequence[TriangularFuzzyNumber] | None]],
    ids: Sequence[str] = (),
) -> DirectRelationMatrix:
    """Build the crisp direct-relation matrix from an n x n grid of cells.

    ``cells[i][j]`` holds the expert TFNs for the pair (i, j). Diagonal cells
    are ignored (and may be ``None``); every off-diagonal cell must be present
    and carry the same number of experts.
    """
    n = len(cells)
    if n < 2:
        raise ValidationError("need at least 2 criteria")
    k_expected = None
    out = np.zeros((n, n))
    for i, row in enumerate(cells):
        if len(row) != n:
            raise MissingCell(f"row {i + 1} has {len(row)} cells, expected {n}")
        for j, cell in enumerate(row):
            if i == j:
                continue
            if cell is None or len(cell) == 0:
                raise MissingCell(f"no judgments for cell ({i + 1}, {j + 1})")
            if k_expected is None:
                k_expected = len(cell)
            elif len(cell) != k_expected:
                raise RaggedExperts(
                    f"cell ({i + 1}, {j + 1}) has {len(cell)} experts, expected {k_expected}"
                )
            out[i, j], _ = cfcs_cell(cell)
    return DirectRelationMatrix(out, tuple(ids))
