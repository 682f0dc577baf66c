"""Delimited-grid format for crisp matrices.

First row: comma-separated criterion ids. Then n rows of decimal numbers.
"""

from __future__ import annotations

import csv
import io
import math
from typing import IO

import numpy as np

from .errors import NegativeEntry, NonSquare, ParseError, ValidationError
from .matrix import DirectRelationMatrix


def _read_text(source) -> str:
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"matrix file is not valid UTF-8: {exc}") from None
    return source


def _rows(text: str) -> list[list[str]]:
    rows = [[cell.strip() for cell in row] for row in csv.reader(io.StringIO(text))]
    return [row for row in rows if any(row)]


def _parse_number(cell: str, i: int, j: int) -> float:
    if cell == "":
        return math.nan
    try:
        return float(cell)
    except ValueError:
        raise ParseError(f"row {i + 1}, column {j + 1}: {cell!r} is not a number") from None


def load_crisp_matrix(source: IO | bytes | str) -> DirectRelationMatrix:
    """Parse a delimited grid into a validated direct-relation matrix.

    A header row of ids is optional: if the first row parses as numbers it is
    treated as data and default ids ``C1..Cn`` are assigned. Diagonal cells
    may be blank; they are forced to zero.
    """
    rows = _rows(_read_text(source))
    if not rows:
        raise ParseError("empty matrix file")
    header = rows[0]
    try:
        [float(c) for c in header if c]
        ids: tuple[str, ...] = ()
        body = rows
    except ValueError:
        ids = tuple(header)
        body = rows[1:]
    n = len(ids) if ids else len(body)
    if len(body) != n:
        raise NonSquare(f"{len(body)} data rows for {n} criteria")
    values = np.zeros((n, n))
    for i, row in enumerate(body):
        if len(row) != n:
            raise NonSquare(f"row {i + 1} has {len(row)} entries, expected {n}")
        for j, cell in enumerate(row):
            v = _parse_number(cell, i, j)
            if i != j:
                if math.isnan(v):
                    raise ParseError(f"row {i + 1}, column {j + 1}: missing value")
                if v < 0:
                    raise NegativeEntry(f"negative entry {v} at row {i + 1}, column {j + 1}")
                values[i, j] = v
    try:
        return DirectRelationMatrix(values, ids)
    except (NonSquare, NegativeEntry):
        raise
    except ValidationError as exc:
        raise ParseError(str(exc)) from None


def dump_crisp_matrix(a: DirectRelationMatrix) -> str:
    """Inverse of :func:`load_crisp_matrix`; values are written with ``repr`` so they round-trip."""
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(a.ids)
    for row in a.values:
        w.writerow([repr(float(v)) for v in row])
    return out.getvalue()


def load_weights(source) -> np.ndarray:
    """Read a weight vector: comma- and/or newline-separated numbers."""
    text = _read_text(source)
    cells = [c.strip() for line in text.splitlines() for c in line.split(",")]
    try:
        return np.array([float(c) for c in cells if c], dtype=float)
    except ValueError as exc:
        raise ParseError(f"weights: {exc}") from None
