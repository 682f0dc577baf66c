"""End-to-end hybrid run: defuzzify -> DEMATEL -> TODIM."""

from __future__ import annotations

from dataclasses import dataclass, field

from .dematel import DematelResult, run_dematel
from .errors import DematelTodimError, ValidationError
from .fuzzy import LinguisticScale
from .matrix import DirectRelationMatrix
from .survey import Criterion, SurveyDocument
from .todim import TodimInput, TodimResult, run_todim


@dataclass(frozen=True)
class Comparison:
    name: str
    spearman: float
    detail: str = ""


@dataclass(frozen=True)
class Check:
    """A pass/fail regression check against published numbers."""

    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class InputDigest:
    criteria: tuple[Criterion, ...]
    experts: int | None  # None when a crisp matrix was given
    scale: LinguisticScale | None
    theta: float
    reference: str
    reference_auto: bool
    normalize_columns: bool

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.criteria)


@dataclass(frozen=True, eq=False)
class HybridReport:
    digest: InputDigest
    direct: DirectRelationMatrix
    dematel: DematelResult
    todim: TodimResult
    comparisons: tuple[Comparison, ...] = ()
    checks: tuple[Check, ...] = ()
    notes: tuple[str, ...] = field(default=())


def _stage(name: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except DematelTodimError as exc:
        if exc.stage is None:
            exc.stage = name
        raise


def resolve_reference(reference, ids) -> int | None:
    """Map a reference given as id, 0-based index, ``"auto"`` or ``None`` to an index."""
    if reference is None or reference == "auto":
        return None
    if isinstance(reference, str):
        if reference not in ids:
            raise ValidationError(f"unknown reference criterion {reference!r}")
        return ids.index(reference)
    return int(reference)


def run_hybrid(
    source: SurveyDocument | DirectRelationMatrix,
    theta: float = 1.0,
    reference=None,
    normalize_columns: bool = False,
) -> HybridReport:
    """Run the full pipeline; the direct-relation matrix doubles as TODIM's decision matrix."""
    if isinstance(source, SurveyDocument):
        a = _stage("defuzzify", source.defuzzify)
        criteria = source.criteria
        experts, scale = len(source.experts), source.scale
    elif isinstance(source, DirectRelationMatrix):
        a = source
        criteria = tuple(Criterion(i) for i in a.ids)
        experts, scale = None, None
    else:
        raise TypeError(f"expected SurveyDocument or DirectRelationMatrix, got {type(source).__name__}")

    dem = _stage("dematel", run_dematel, a)
    ref = _stage("todim", resolve_reference, reference, a.ids)
    inp = _stage(
        "todim",
        TodimInput,
        a.values,
        dem.weights,
        theta=theta,
        reference=ref,
        normalize_columns=normalize_columns,
    )
    tod = _stage("todim", run_todim, inp)
    digest = InputDigest(
        criteria=criteria,
        experts=experts,
        scale=scale,
        theta=float(theta),
        reference=a.ids[tod.reference],
        reference_auto=ref is None,
        normalize_columns=bool(normalize_columns),
    )
    return HybridReport(digest, a, dem, tod)
