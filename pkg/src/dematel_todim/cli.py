"""Command-line interface.

Exit codes: 0 success, 1 invalid input (or a failed verification check),
2 numerical failure such as a singular system.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import casestudy, report
from .dematel import run_dematel
from .errors import DematelTodimError, NumericalError, ValidationError
from .grid import dump_crisp_matrix, load_crisp_matrix, load_weights
from .matrix import DirectRelationMatrix
from .pipeline import resolve_reference, run_hybrid
from .survey import SurveyDocument, load_survey
from .todim import TodimInput, run_todim

log = logging.getLogger("dematel_todim")

EXIT_OK, EXIT_INVALID, EXIT_NUMERICAL = 0, 1, 2


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from None


def _is_survey(path: str, data: bytes) -> bool:
    if path.lower().endswith(".json"):
        return True
    return data.lstrip()[:1] == b"{"


def load_input(path: str) -> SurveyDocument | DirectRelationMatrix:
    data = _read_bytes(path)
    return load_survey(data) if _is_survey(path, data) else load_crisp_matrix(data)


def _as_matrix(obj) -> DirectRelationMatrix:
    return obj.defuzzify() if isinstance(obj, SurveyDocument) else obj


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        # exclusive handle; replace only once fully written
        tmp = Path(out + ".tmp")
        with open(tmp, "x", encoding="utf-8", newline="") as fh:
            fh.write(text)
        tmp.replace(out)
    except OSError as exc:
        raise ValidationError(f"cannot write {out}: {exc.strerror}") from None


def cmd_defuzzify(args) -> int:
    survey = load_survey(_read_bytes(args.survey))
    _write(dump_crisp_matrix(survey.defuzzify()), args.out)
    return EXIT_OK


def cmd_dematel(args) -> int:
    a = _as_matrix(load_input(args.input))
    dem = run_dematel(a)
    if args.format == "machine":
        text = json.dumps(report.dematel_machine(a.ids, dem), indent=2) + "\n"
    else:
        text = report.dematel_table(a.ids, dem) + "\n"
    _write(text, args.out)
    return EXIT_OK


def cmd_todim(args) -> int:
    a = _as_matrix(load_input(args.matrix))
    if args.weights == "dematel":
        weights = run_dematel(a).weights
    else:
        weights = load_weights(_read_bytes(args.weights))
    ref = resolve_reference(args.reference, a.ids)
    tod = run_todim(
        TodimInput(a.values, weights, theta=args.theta, reference=ref, normalize_columns=args.normalize_columns)
    )
    if args.format == "machine":
        text = json.dumps(report.todim_machine(a.ids, tod), indent=2) + "\n"
    else:
        text = report.todim_table(a.ids, tod) + "\n"
    _write(text, args.out)
    return EXIT_OK


def cmd_hybrid(args) -> int:
    rep = run_hybrid(
        load_input(args.input),
        theta=args.theta,
        reference=args.reference,
        normalize_columns=args.normalize_columns,
    )
    _write(report.render(rep, args.format), args.out)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    rep = casestudy.verify_paper(theta=args.theta)
    _write(report.render(rep, args.format), args.out)
    return EXIT_OK if all(c.passed for c in rep.checks) else EXIT_INVALID


def _todim_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--theta", type=float, default=1.0, help="loss attenuation factor (default 1)")
    p.add_argument("--reference", default="auto", help="reference criterion id, or 'auto' for the heaviest")
    p.add_argument("--normalize-columns", action="store_true", help="divide each criterion column by its sum")


def _output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "machine"), default="table")
    p.add_argument("--out", help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dematel-todim", description="Fuzzy DEMATEL-TODIM criterion weighting and ranking."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("defuzzify", help="survey -> crisp direct-relation matrix (CSV)")
    p.add_argument("survey")
    p.add_argument("--out")
    p.set_defaults(func=cmd_defuzzify)

    p = sub.add_parser("dematel", help="DEMATEL weights from a matrix or survey")
    p.add_argument("input", metavar="matrix|survey")
    _output_options(p)
    p.set_defaults(func=cmd_dematel)

    p = sub.add_parser("todim", help="TODIM ranking of a decision matrix")
    p.add_argument("matrix")
    p.add_argument("--weights", required=True, help="weights file, or 'dematel' to derive them from the matrix")
    _todim_options(p)
    _output_options(p)
    p.set_defaults(func=cmd_todim)

    p = sub.add_parser("hybrid", help="full defuzzify -> DEMATEL -> TODIM pipeline")
    p.add_argument("input", metavar="survey|matrix")
    _todim_options(p)
    _output_options(p)
    p.set_defaults(func=cmd_hybrid)

    p = sub.add_parser("verify-paper", help="rerun the bundled case study against its published tables")
    p.add_argument("--theta", type=float, default=1.0)
    _output_options(p)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except NumericalError as exc:
        stage = f"[{exc.stage}] " if exc.stage else ""
        print(f"error: {stage}{exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except DematelTodimError as exc:
        stage = f"[{exc.stage}] " if exc.stage else ""
        print(f"error: {stage}{exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
