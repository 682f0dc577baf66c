"""Hybrid fuzzy DEMATEL-TODIM criterion weighting and ranking."""

from .cfcs import CfcsTrace, cfcs_cell, defuzzify_surveys
from .compare import spearman
from .dematel import (
    DematelResult,
    influence_sums,
    initial_weights,
    normalize_direct,
    run_dematel,
    total_relation,
)
from .errors import DematelTodimError, NumericalError, ValidationError
from .fuzzy import (
    DEFAULT_SCALE,
    LinguisticScale,
    TriangularFuzzyNumber,
    membership,
    scale_lookup,
    tfn_add,
    tfn_sub,
)
from .grid import dump_crisp_matrix, load_crisp_matrix
from .matrix import DirectRelationMatrix
from .pipeline import HybridReport, run_hybrid
from .report import emit_report, load_report
from .survey import SurveyDocument, load_survey
from .todim import (
    TodimInput,
    TodimResult,
    dominance,
    global_values,
    normalize_decision,
    phi,
    relative_weights,
    run_todim,
)

__version__ = "0.1.0"

__all__ = [
    "CfcsTrace",
    "DEFAULT_SCALE",
    "DematelResult",
    "DematelTodimError",
    "DirectRelationMatrix",
    "HybridReport",
    "LinguisticScale",
    "NumericalError",
    "SurveyDocument",
    "TodimInput",
    "TodimResult",
    "TriangularFuzzyNumber",
    "ValidationError",
    "cfcs_cell",
    "defuzzify_surveys",
    "dominance",
    "dump_crisp_matrix",
    "emit_report",
    "global_values",
    "influence_sums",
    "initial_weights",
    "load_crisp_matrix",
    "load_report",
    "load_survey",
    "membership",
    "normalize_decision",
    "normalize_direct",
    "phi",
    "relative_weights",
    "run_dematel",
    "run_hybrid",
    "run_todim",
    "scale_lookup",
    "spearman",
    "tfn_add",
    "tfn_sub",
    "total_relation",
]
