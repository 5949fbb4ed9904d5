"""Decision-support engine ranking overseas-placement candidates.

Raw attributes are converted to crisp values by lookup tables, normalized
per criterion column, combined into weighted preference scores, and ranked
deterministically.
"""

from .criteria import (
    CriterionKind,
    CriterionSpec,
    CrispRule,
    WeightLabel,
    apply_crisp_map,
    crispify_profile,
    default_criteria,
    load_criteria,
    override_criteria,
    weight_from_label,
)
from .engine import (
    DecisionMatrix,
    NormalizedMatrix,
    RankedResult,
    SelectionOutcome,
    build_matrix,
    normalize,
    preference_scores,
    rank,
    run_selection,
)
from .errors import (
    CostZeroValue,
    CriteriaConfigError,
    DimensionMismatch,
    DuplicateCandidate,
    EmptyBatch,
    InvalidDateOrder,
    NoMatchingRule,
    NoResults,
    NotFound,
    PlacerankError,
    ValidationError,
)
from .models import (
    AttributeProfile,
    CandidateRecord,
    EducationLevel,
    Gender,
    PsychResult,
    compute_age,
)
from .registry import Registry, Scope, SelectionBatch
from .report import render_report, round_display

__all__ = [
    "AttributeProfile",
    "CandidateRecord",
    "CostZeroValue",
    "CriteriaConfigError",
    "CriterionKind",
    "CriterionSpec",
    "CrispRule",
    "DecisionMatrix",
    "DimensionMismatch",
    "DuplicateCandidate",
    "EducationLevel",
    "EmptyBatch",
    "Gender",
    "InvalidDateOrder",
    "NoMatchingRule",
    "NoResults",
    "NormalizedMatrix",
    "NotFound",
    "PlacerankError",
    "PsychResult",
    "RankedResult",
    "Registry",
    "Scope",
    "SelectionBatch",
    "SelectionOutcome",
    "ValidationError",
    "WeightLabel",
    "apply_crisp_map",
    "build_matrix",
    "compute_age",
    "crispify_profile",
    "default_criteria",
    "load_criteria",
    "normalize",
    "override_criteria",
    "preference_scores",
    "rank",
    "render_report",
    "round_display",
    "run_selection",
    "weight_from_label",
]
