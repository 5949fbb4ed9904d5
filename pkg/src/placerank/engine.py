"""Matrix assembly, benefit/cost normalization, weighted scoring, ranking.

Crisp inputs are table constants, so every intermediate value is a small
rational. Normalization and preference values are therefore computed with
Fraction and only converted to float in the published result rows; ties
compare exactly and the outcome is independent of summation order.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .criteria import CriterionKind, CriterionSpec, crispify_profile
from .errors import (
    CostZeroValue,
    DimensionMismatch,
    EmptyBatch,
    NoMatchingRule,
    ValidationError,
)
from .models import AttributeProfile


@dataclass(frozen=True)
class DecisionMatrix:
    """Crisp values, one row per alternative, one column per criterion."""

    alternative_ids: tuple[int, ...]
    criterion_codes: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if not self.alternative_ids or not self.criterion_codes:
            raise ValidationError("matrix", "needs at least one row and one column")
        if len(self.values) != len(self.alternative_ids):
            raise ValidationError("matrix", "row count does not match alternative ids")
        n = len(self.criterion_codes)
        for row in self.values:
            if len(row) != n:
                raise ValidationError("matrix", "row length does not match criterion codes")
            for x in row:
                if not math.isfinite(x) or x < 0:
                    raise ValidationError("matrix", f"entry {x!r} is not finite and >= 0")

    def column(self, j: int) -> tuple[float, ...]:
        return tuple(row[j] for row in self.values)


@dataclass(frozen=True)
class NormalizedMatrix:
    """Per-column normalized ratings in [0, 1], held as exact fractions."""

    alternative_ids: tuple[int, ...]
    criterion_codes: tuple[str, ...]
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for row in self.values:
            for r in row:
                if not 0 <= r <= 1:
                    raise ValidationError("matrix", f"normalized entry {r} outside [0, 1]")

    def as_floats(self) -> tuple[tuple[float, ...], ...]:
        return tuple(tuple(float(r) for r in row) for row in self.values)


@dataclass(frozen=True)
class PreferenceScore:
    """Weighted components and their sum for one alternative, exact."""

    candidate_id: int
    components: tuple[Fraction, ...]
    value: Fraction


@dataclass(frozen=True)
class RankedResult:
    candidate_id: int
    weighted_components: tuple[float, ...]
    preference_value: float
    rank: int


@dataclass(frozen=True)
class Exclusion:
    candidate_id: int
    criterion_code: str
    reason: str


@dataclass(frozen=True)
class SelectionOutcome:
    matrix: DecisionMatrix
    normalized: NormalizedMatrix
    ranked: tuple[RankedResult, ...]
    exclusions: tuple[Exclusion, ...]


def _check_alignment(codes: Sequence[str], criteria: Sequence[CriterionSpec]) -> None:
    if len(criteria) != len(codes) or any(s.code != c for s, c in zip(criteria, codes)):
        raise DimensionMismatch(
            f"criteria {[s.code for s in criteria]} do not match matrix columns {list(codes)}"
        )


def build_matrix(
    entries: Sequence[tuple[int, AttributeProfile]],
    criteria: Sequence[CriterionSpec],
) -> DecisionMatrix:
    """Crispify each profile into one matrix row, in input order."""
    if not entries:
        raise EmptyBatch("no profiles to score")
    rows = tuple(
        crispify_profile(profile, criteria, candidate_id=cid) for cid, profile in entries
    )
    return DecisionMatrix(
        alternative_ids=tuple(cid for cid, _ in entries),
        criterion_codes=tuple(s.code for s in criteria),
        values=rows,
    )


def normalize(matrix: DecisionMatrix, criteria: Sequence[CriterionSpec]) -> NormalizedMatrix:
    """Benefit columns divide by the column max, cost columns divide the
    column min by each value. An all-zero benefit column normalizes to
    zeros (with a warning) so a degenerate criterion cannot inflate scores."""
    _check_alignment(matrix.criterion_codes, criteria)
    columns = []
    for j, spec in enumerate(criteria):
        col = [Fraction(x) for x in matrix.column(j)]
        if spec.kind is CriterionKind.COST:
            if any(x == 0 for x in col):
                raise CostZeroValue(f"cost column {spec.code} contains a zero entry")
            low = min(col)
            columns.append([low / x for x in col])
        else:
            top = max(col)
            if top == 0:
                warnings.warn(
                    f"benefit column {spec.code} is all zero; normalizing to zeros",
                    stacklevel=2,
                )
                columns.append([Fraction(0)] * len(col))
            else:
                columns.append([x / top for x in col])
    rows = tuple(
        tuple(columns[j][i] for j in range(len(criteria)))
        for i in range(len(matrix.alternative_ids))
    )
    return NormalizedMatrix(matrix.alternative_ids, matrix.criterion_codes, rows)


def preference_scores(
    normalized: NormalizedMatrix, criteria: Sequence[CriterionSpec]
) -> list[PreferenceScore]:
    """Per-criterion weighted components and their sum V for each alternative."""
    _check_alignment(normalized.criterion_codes, criteria)
    weights = [Fraction(s.weight) for s in criteria]
    scores = []
    for cid, row in zip(normalized.alternative_ids, normalized.values):
        components = tuple(w * Fraction(r) for w, r in zip(weights, row))
        scores.append(PreferenceScore(cid, components, sum(components, Fraction(0))))
    return scores


def rank(scores: Sequence[PreferenceScore]) -> list[RankedResult]:
    """Sort by preference descending, ties by ascending id; ranks are 1..m."""
    if not scores:
        raise EmptyBatch("nothing to rank")
    ordered = sorted(scores, key=lambda s: (-s.value, s.candidate_id))
    return [
        RankedResult(
            candidate_id=s.candidate_id,
            weighted_components=tuple(float(c) for c in s.components),
            preference_value=float(s.value),
            rank=position,
        )
        for position, s in enumerate(ordered, start=1)
    ]


def run_selection(
    entries: Sequence[tuple[int, AttributeProfile]],
    criteria: Sequence[CriterionSpec],
) -> SelectionOutcome:
    """Full pipeline: crispify, normalize, score, rank.

    Candidates whose raw values match no table row are excluded (the
    tables encode statutory eligibility) and reported, not fatal.
    """
    eligible = []
    exclusions = []
    for cid, profile in entries:
        try:
            crispify_profile(profile, criteria, candidate_id=cid)
        except NoMatchingRule as exc:
            exclusions.append(Exclusion(cid, exc.criterion_code, str(exc)))
        else:
            eligible.append((cid, profile))
    if not eligible:
        raise EmptyBatch("no eligible candidate in the batch")
    matrix = build_matrix(eligible, criteria)
    normalized = normalize(matrix, criteria)
    ranked = rank(preference_scores(normalized, criteria))
    return SelectionOutcome(matrix, normalized, tuple(ranked), tuple(exclusions))
