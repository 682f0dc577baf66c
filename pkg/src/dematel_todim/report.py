"""Report serialization.

Two formats: ``table`` (fixed-width text for people) and ``machine`` (JSON).
Displayed reals carry 6 significant digits; the machine format additionally
stores every array at full precision under ``full_precision`` so that
:func:`load_report` reconstructs the report exactly.
"""

from __future__ import annotations

import io
import json
from typing import IO

import numpy as np

from .dematel import DematelResult
from .errors import ParseError, SchemaError, SinkError
from .fuzzy import LinguisticScale
from .matrix import DirectRelationMatrix
from .pipeline import Check, Comparison, HybridReport, InputDigest
from .survey import Criterion
from .todim import TodimResult

FORMAT_NAME = "dematel-todim-report"
FORMAT_VERSION = 1

_DEMATEL_ARRAYS = ("normalized", "total", "r", "c", "weights", "rank")
_TODIM_ARRAYS = (
    "relative_weights",
    "decision",
    "dominance",
    "dominance_sums",
    "xi",
    "loss_share",
    "final_weights",
    "rank",
)


def _g6(v: float) -> float:
    return float(f"{v:.6g}")


def _rounded(a) -> list:
    a = np.asarray(a)
    if a.dtype.kind in "iu":
        return a.tolist()
    if a.ndim == 1:
        return [_g6(v) for v in a.tolist()]
    return [[_g6(v) for v in row] for row in a.tolist()]


def _exact(a) -> list:
    # json writes floats with repr(), which round-trips exactly
    return np.asarray(a).tolist()


def _digest_dict(d: InputDigest) -> dict:
    return {
        "criteria": [{"id": c.id, "name": c.name, "category": c.category} for c in d.criteria],
        "experts": d.experts,
        "scale": d.scale.to_dict() if d.scale is not None else None,
        "theta": d.theta,
        "reference": d.reference,
        "reference_auto": d.reference_auto,
        "normalize_columns": d.normalize_columns,
    }


def to_machine(report: HybridReport) -> dict:
    dem, tod = report.dematel, report.todim
    out = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "input": _digest_dict(report.digest),
        "direct_relation": _rounded(report.direct.values),
        "dematel": {
            "normalized": _rounded(dem.normalized),
            "total": _rounded(dem.total),
            "r": _rounded(dem.r),
            "c": _rounded(dem.c),
            "prominence": _rounded(dem.prominence),
            "relation": _rounded(dem.relation),
            "weights": _rounded(dem.weights),
            "rank": _rounded(dem.rank),
        },
        "todim": {
            "reference": report.direct.ids[tod.reference],
            "degenerate": tod.degenerate,
            **{name: _rounded(getattr(tod, name)) for name in _TODIM_ARRAYS},
        },
    }
    if report.comparisons:
        out["comparisons"] = [
            {"name": c.name, "spearman": _g6(c.spearman), "detail": c.detail} for c in report.comparisons
        ]
    if report.checks:
        out["checks"] = [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks]
    out["notes"] = list(report.notes)
    out["full_precision"] = {
        "direct_relation": _exact(report.direct.values),
        "dematel": {name: _exact(getattr(dem, name)) for name in _DEMATEL_ARRAYS},
        "todim": {name: _exact(getattr(tod, name)) for name in _TODIM_ARRAYS},
        "comparisons": [c.spearman for c in report.comparisons],
    }
    return out


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(v)
    return f"{v:.6g}"


def _table(headers, rows) -> str:
    cells = [list(headers)] + [[_fmt(v) if not isinstance(v, str) else v for v in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    lines = []
    for idx, row in enumerate(cells):
        lines.append("  ".join(s.ljust(w) if k == 0 else s.rjust(w) for k, (s, w) in enumerate(zip(row, widths))))
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)


def dematel_table(ids, dem: DematelResult) -> str:
    rows = [
        (ids[i], dem.r[i], dem.c[i], dem.prominence[i], dem.relation[i], dem.weights[i], int(dem.rank[i]))
        for i in range(len(ids))
    ]
    return "DEMATEL initial weights\n" + _table(("", "r", "c", "r+c", "r-c", "weight", "rank"), rows)


def todim_table(ids, tod: TodimResult, dematel_rank=None) -> str:
    headers = ["", "dominance", "xi", "loss share", "final weight", "rank"]
    if dematel_rank is not None:
        headers[-1] = "hybrid rank"
        headers.append("DEMATEL rank")
    rows = []
    for i in range(len(ids)):
        row = [ids[i], tod.dominance_sums[i], tod.xi[i], tod.loss_share[i], tod.final_weights[i], int(tod.rank[i])]
        if dematel_rank is not None:
            row.append(int(dematel_rank[i]))
        rows.append(row)
    title = f"TODIM final weights (reference {ids[tod.reference]})"
    if tod.degenerate:
        title += " (degenerate: all dominance sums equal)"
    return title + "\n" + _table(headers, rows)


def dematel_machine(ids, dem: DematelResult) -> dict:
    return {
        "criteria": list(ids),
        **{k: _rounded(getattr(dem, k)) for k in ("normalized", "total", "r", "c", "prominence", "relation", "weights", "rank")},
        "full_precision": {k: _exact(getattr(dem, k)) for k in _DEMATEL_ARRAYS},
    }


def todim_machine(ids, tod: TodimResult) -> dict:
    return {
        "criteria": list(ids),
        "reference": ids[tod.reference],
        "degenerate": tod.degenerate,
        **{k: _rounded(getattr(tod, k)) for k in _TODIM_ARRAYS},
        "full_precision": {k: _exact(getattr(tod, k)) for k in _TODIM_ARRAYS},
    }


def to_table(report: HybridReport) -> str:
    d = report.digest
    ids = report.direct.ids
    dem, tod = report.dematel, report.todim
    parts = []
    source = f"{d.experts} expert survey" if d.experts is not None else "crisp matrix"
    ref = f"{d.reference} ({'auto' if d.reference_auto else 'given'})"
    parts.append(
        "Input\n"
        f"  criteria: {len(d.criteria)}    source: {source}\n"
        f"  theta: {_fmt(d.theta)}    reference: {ref}    normalize columns: {'yes' if d.normalize_columns else 'no'}"
    )
    if d.scale is not None:
        parts[-1] += "\n  scale: " + ", ".join(f"{k}={tuple(v)}" for k, v in d.scale.to_dict().items())

    parts.append(dematel_table(ids, dem))
    parts.append(todim_table(ids, tod, dem.rank))

    if report.checks:
        lines = [f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}" for c in report.checks]
        parts.append("Checks\n" + "\n".join(lines))
    if report.comparisons:
        lines = [f"  {c.name}: spearman = {c.spearman:+.6g}" + (f"  ({c.detail})" if c.detail else "") for c in report.comparisons]
        parts.append("Rank comparisons\n" + "\n".join(lines))
    if report.notes:
        parts.append("Notes\n" + "\n".join(f"  - {n}" for n in report.notes))
    return "\n\n".join(parts) + "\n"


def render(report: HybridReport, fmt: str = "table") -> str:
    if fmt == "table":
        return to_table(report)
    if fmt == "machine":
        return json.dumps(to_machine(report), indent=2, ensure_ascii=False) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")


def emit_report(report: HybridReport, fmt: str, destination: IO) -> None:
    """Write the rendered report to a binary or text sink."""
    text = render(report, fmt)
    try:
        if isinstance(destination, io.TextIOBase):
            destination.write(text)
        else:
            destination.write(text.encode("utf-8"))
        destination.flush()
    except (OSError, ValueError) as exc:
        raise SinkError(f"could not write report: {exc}") from exc


def load_report(source) -> HybridReport:
    """Rebuild a report from its machine format using the full-precision arrays."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise SchemaError("not a machine-format report")
    try:
        inp = doc["input"]
        full = doc["full_precision"]
        criteria = tuple(Criterion(c["id"], c["name"], c["category"]) for c in inp["criteria"])
        scale = (
            LinguisticScale((k, tuple(v)) for k, v in inp["scale"].items()) if inp["scale"] is not None else None
        )
        digest = InputDigest(
            criteria=criteria,
            experts=inp["experts"],
            scale=scale,
            theta=inp["theta"],
            reference=inp["reference"],
            reference_auto=inp["reference_auto"],
            normalize_columns=inp["normalize_columns"],
        )
        ids = tuple(c.id for c in criteria)
        direct = DirectRelationMatrix(np.array(full["direct_relation"], dtype=float), ids)
        fd = full["dematel"]
        dem = DematelResult(
            **{k: np.array(fd[k], dtype=int if k == "rank" else float) for k in _DEMATEL_ARRAYS}
        )
        ft = full["todim"]
        tod = TodimResult(
            reference=ids.index(doc["todim"]["reference"]),
            degenerate=doc["todim"]["degenerate"],
            **{k: np.array(ft[k], dtype=int if k == "rank" else float) for k in _TODIM_ARRAYS},
        )
        comparisons = tuple(
            Comparison(c["name"], rho, c["detail"])
            for c, rho in zip(doc.get("comparisons", []), full["comparisons"])
        )
        checks = tuple(Check(c["name"], c["passed"], c["detail"]) for c in doc.get("checks", []))
        notes = tuple(doc["notes"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed report: {exc!r}") from None
    return HybridReport(digest, direct, dem, tod, comparisons, checks, notes)
