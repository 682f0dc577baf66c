"""Survey documents: criteria, a linguistic scale and one label matrix per expert.

The on-disk form is a UTF-8 JSON object::

    {
      "criteria": [{"id": "C1", "name": "...", "category": "..."}, ...],
      "scale": {"NO": [0, 0, 0.25], ...},
      "experts": [{"id": "E1", "matrix": [["", "NO", ...], ...]}, ...]
    }

Diagonal cells are written as empty strings and ignored. ``scale`` may be
omitted, in which case the default five-level scale applies.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import IO

from .cfcs import defuzzify_surveys
from .errors import ParseError, SchemaError, ValidationError
from .fuzzy import DEFAULT_SCALE, LinguisticScale
from .matrix import DirectRelationMatrix


@dataclass(frozen=True)
class Criterion:
    id: str
    name: str = ""
    category: str = ""


@dataclass(frozen=True)
class Expert:
    id: str
    matrix: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class SurveyDocument:
    criteria: tuple[Criterion, ...]
    scale: LinguisticScale
    experts: tuple[Expert, ...]

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.criteria)

    @property
    def n(self) -> int:
        return len(self.criteria)

    def cells(self):
        """n x n grid of per-expert TFN lists; diagonal cells are ``None``."""
        n = self.n
        grid = [[None if i == j else [] for j in range(n)] for i in range(n)]
        for expert in self.experts:
            for i in range(n):
                for j in range(n):
                    if i != j:
                        grid[i][j].append(self.scale.lookup(expert.matrix[i][j]))
        return grid

    def defuzzify(self) -> DirectRelationMatrix:
        return defuzzify_surveys(self.cells(), self.ids)

    def to_dict(self) -> dict:
        return {
            "criteria": [{"id": c.id, "name": c.name, "category": c.category} for c in self.criteria],
            "scale": self.scale.to_dict(),
            "experts": [{"id": e.id, "matrix": [list(row) for row in e.matrix]} for e in self.experts],
        }


def _require(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, kind):
        raise SchemaError(f"{where}: field {key!r} must be {kind.__name__}")
    return value


def parse_survey(doc) -> SurveyDocument:
    """Validate an already-decoded survey object."""
    if not isinstance(doc, dict):
        raise SchemaError("survey document must be an object")
    raw_criteria = _require(doc, "criteria", list, "survey")
    criteria = []
    for k, c in enumerate(raw_criteria):
        where = f"criteria[{k}]"
        cid = _require(c, "id", str, where).strip()
        if not cid:
            raise SchemaError(f"{where}: empty id")
        criteria.append(Criterion(cid, str(c.get("name", "")), str(c.get("category", ""))))
    ids = [c.id for c in criteria]
    if len(set(ids)) != len(ids):
        dup = next(i for i in ids if ids.count(i) > 1)
        raise SchemaError(f"duplicate criterion id {dup!r}")
    n = len(criteria)
    if n < 2:
        raise SchemaError("survey needs at least 2 criteria")

    if "scale" in doc:
        raw_scale = _require(doc, "scale", dict, "survey")
        try:
            scale = LinguisticScale((label, tuple(v)) for label, v in raw_scale.items())
        except (TypeError, ValidationError) as exc:
            raise SchemaError(f"scale: {exc}") from None
    else:
        scale = DEFAULT_SCALE

    raw_experts = _require(doc, "experts", list, "survey")
    if not raw_experts:
        raise SchemaError("survey has no experts")
    experts = []
    seen = set()
    for e_idx, e in enumerate(raw_experts):
        where = f"experts[{e_idx}]"
        eid = str(_require(e, "id", str, where))
        if eid in seen:
            raise SchemaError(f"duplicate expert id {eid!r}")
        seen.add(eid)
        rows = _require(e, "matrix", list, where)
        if len(rows) != n:
            raise SchemaError(f"{where}: matrix has {len(rows)} rows, expected {n}")
        matrix = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                size = len(row) if isinstance(row, list) else "non-list"
                raise SchemaError(f"{where}: row {i + 1} has {size} cells, expected {n}")
            cells = []
            for j, label in enumerate(row):
                if i == j:
                    cells.append("")
                    continue
                if not isinstance(label, str):
                    raise SchemaError(f"{where}: cell ({i + 1}, {j + 1}) must be a string label")
                if label not in scale:
                    raise SchemaError(
                        f"{where}: cell ({i + 1}, {j + 1}) has unknown label {label!r}"
                    )
                cells.append(label.strip())
            matrix.append(tuple(cells))
        experts.append(Expert(eid, tuple(matrix)))
    return SurveyDocument(tuple(criteria), scale, tuple(experts))


def load_survey(source: IO | bytes | str) -> SurveyDocument:
    """Read and validate a survey from a byte/text stream or raw content."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"survey is not valid UTF-8: {exc}") from None
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_survey(doc)


def dump_survey(survey: SurveyDocument) -> str:
    return json.dumps(survey.to_dict(), indent=2, ensure_ascii=False) + "\n"

