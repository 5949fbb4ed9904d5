"""Criterion specs: crisp conversion tables, fuzzy weight labels, config I/O."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import CriteriaConfigError, NoMatchingRule, ValidationError
from .models import AttributeProfile


class CriterionKind(Enum):
    BENEFIT = "benefit"  # larger is better, normalized by column max
    COST = "cost"        # smaller is better, normalized as column min / value


class WeightLabel(Enum):
    TP = "TP"  # tidak penting
    CP = "CP"  # cukup penting
    P = "P"    # penting
    SP = "SP"  # sangat penting


# TP has no published value; 0.25 keeps the even spacing of the other three.
_WEIGHT_LABEL_VALUES = {
    WeightLabel.TP: 0.25,
    WeightLabel.CP: 0.50,
    WeightLabel.P: 0.75,
    WeightLabel.SP: 1.00,
}


def weight_from_label(label: WeightLabel) -> float:
    """Crisp weight for a fuzzy importance label."""
    return _WEIGHT_LABEL_VALUES[label]


@dataclass(frozen=True)
class CrispRule:
    """One conversion-table row: an inclusive integer range or a category
    label, mapping to a crisp value in [0, 1]. hi=None means unbounded."""

    value: float
    lo: int | None = None
    hi: int | None = None
    label: str | None = None

    def __post_init__(self):
        numeric = self.lo is not None
        if numeric == (self.label is not None):
            raise ValidationError("rule", "needs exactly one of range or label")
        if not 0.0 <= self.value <= 1.0:
            raise ValidationError("rule", f"crisp value {self.value} outside [0, 1]")
        if numeric and self.hi is not None and self.hi < self.lo:
            raise ValidationError("rule", f"range [{self.lo}, {self.hi}] is empty")
        if not numeric and self.hi is not None:
            raise ValidationError("rule", "label rule cannot carry a range bound")

    def matches(self, raw) -> bool:
        if self.label is not None:
            return isinstance(raw, str) and raw == self.label
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            return False
        return raw >= self.lo and (self.hi is None or raw <= self.hi)

    def describe(self) -> str:
        if self.label is not None:
            return self.label
        return f"[{self.lo}, {'inf' if self.hi is None else self.hi}]"


@dataclass(frozen=True)
class CriterionSpec:
    """One criterion: code, benefit/cost kind, crisp weight, conversion rules."""

    code: str
    name: str
    kind: CriterionKind
    weight: float
    rules: tuple[CrispRule, ...]

    def __post_init__(self):
        if not 0.0 < self.weight <= 1.0:
            raise ValidationError("weight", f"{self.code}: weight {self.weight} outside (0, 1]")
        if not self.rules:
            raise ValidationError("rules", f"{self.code}: conversion table is empty")
        ranged = sorted((r for r in self.rules if r.lo is not None), key=lambda r: r.lo)
        for prev, cur in zip(ranged, ranged[1:]):
            if prev.hi is None or prev.hi >= cur.lo:
                raise ValidationError(
                    "rules", f"{self.code}: ranges {prev.describe()} and {cur.describe()} overlap"
                )
        labels = [r.label for r in self.rules if r.label is not None]
        if len(labels) != len(set(labels)):
            raise ValidationError("rules", f"{self.code}: duplicate category labels")
        if self.kind is CriterionKind.BENEFIT and not any(r.value == 1.0 for r in self.rules):
            warnings.warn(
                f"benefit criterion {self.code} has no rule with crisp value 1; "
                "normalization cannot anchor the column at 1.0",
                stacklevel=2,
            )


def apply_crisp_map(raw, rules, *, code: str = "?", candidate_id=None) -> float:
    """Crisp value of the unique rule matching raw; NoMatchingRule otherwise."""
    for rule in rules:
        if rule.matches(raw):
            return rule.value
    raise NoMatchingRule(code, raw, candidate_id)


# Which profile attribute each criterion code reads.
_CODE_ATTRIBUTES = {
    "C1": lambda p: p.age_years,
    "C2": lambda p: p.education_level.value,
    "C3": lambda p: p.psych_result.value,
    "C4": lambda p: p.experience_years,
}


def raw_attribute(profile: AttributeProfile, code: str):
    """The raw input a criterion scores, e.g. C2 -> the education label."""
    try:
        getter = _CODE_ATTRIBUTES[code]
    except KeyError:
        raise CriteriaConfigError(f"criterion {code} reads no known candidate attribute") from None
    raw = getter(profile)
    if raw is None:
        raise ValidationError("age_years", "age not set; resolve it from the record dates first")
    return raw


def crispify_profile(profile, criteria, *, candidate_id=None) -> tuple[float, ...]:
    """Crisp vector for one profile, ordered as the criteria list."""
    return tuple(
        apply_crisp_map(
            raw_attribute(profile, spec.code),
            spec.rules,
            code=spec.code,
            candidate_id=candidate_id,
        )
        for spec in criteria
    )


def default_criteria() -> list[CriterionSpec]:
    """The four statutory criteria with their conversion tables and weights."""
    return [
        CriterionSpec(
            code="C1",
            name="Age (usia)",
            kind=CriterionKind.BENEFIT,
            weight=0.50,
            rules=(
                CrispRule(lo=18, hi=20, value=1.00),
                CrispRule(lo=21, hi=23, value=0.75),
                CrispRule(lo=24, hi=26, value=0.50),
                CrispRule(lo=27, hi=30, value=0.25),
                CrispRule(lo=31, hi=35, value=0.00),
            ),
        ),
        CriterionSpec(
            code="C2",
            name="Education (pendidikan)",
            kind=CriterionKind.BENEFIT,
            weight=0.75,
            rules=(
                CrispRule(label="SMP", value=0.00),
                CrispRule(label="SMA", value=0.25),
                CrispRule(label="DI-DIII", value=0.50),
                CrispRule(label="DIV", value=0.75),
                CrispRule(label="S1", value=1.00),
            ),
        ),
        CriterionSpec(
            code="C3",
            name="Psych test (psikotes)",
            kind=CriterionKind.BENEFIT,
            weight=1.00,
            rules=(
                CrispRule(label="recommended", value=1.00),
                CrispRule(label="not_yet_recommended", value=0.00),
            ),
        ),
        CriterionSpec(
            code="C4",
            name="Work experience (pengalaman kerja)",
            kind=CriterionKind.BENEFIT,
            weight=0.75,
            rules=(
                CrispRule(lo=0, hi=0, value=0.00),
                CrispRule(lo=1, hi=3, value=0.25),
                CrispRule(lo=4, hi=6, value=0.50),
                CrispRule(lo=7, hi=9, value=0.75),
                CrispRule(lo=10, hi=None, value=1.00),
            ),
        ),
    ]


def criteria_to_config(criteria) -> list[dict]:
    """Criteria in the JSON config schema, weights resolved to numbers."""
    out = []
    for spec in criteria:
        rules = []
        for r in spec.rules:
            if r.label is not None:
                rules.append({"label": r.label, "value": r.value})
            else:
                rules.append({"range": [r.lo, r.hi], "value": r.value})
        out.append(
            {
                "code": spec.code,
                "name": spec.name,
                "kind": spec.kind.value,
                "weight": spec.weight,
                "rules": rules,
            }
        )
    return out


def rule_from_config(obj) -> CrispRule:
    """One rule from its config form: {"range": [lo, hi|null]} or {"label": s}, plus "value"."""
    if not isinstance(obj, dict) or "value" not in obj:
        raise ValidationError("rule", f"rule needs a value: {obj!r}")
    value = float(obj["value"])
    if "range" in obj and "label" in obj:
        raise ValidationError("rule", "rule cannot have both range and label")
    if "range" in obj:
        rng = obj["range"]
        if not isinstance(rng, (list, tuple)) or len(rng) != 2:
            raise ValidationError("rule", f"range must be [lo, hi|null]: {rng!r}")
        lo, hi = rng
        return CrispRule(lo=int(lo), hi=None if hi is None else int(hi), value=value)
    if "label" in obj:
        return CrispRule(label=str(obj["label"]), value=value)
    raise ValidationError("rule", f"rule needs a range or a label: {obj!r}")


def criteria_from_config(data) -> list[CriterionSpec]:
    """Parse the config-file structure; CriteriaConfigError on any defect."""
    if not isinstance(data, list) or not data:
        raise CriteriaConfigError("criteria config must be a non-empty array")
    specs = []
    try:
        for item in data:
            if not isinstance(item, dict):
                raise CriteriaConfigError(f"criterion entry must be an object: {item!r}")
            try:
                code = str(item["code"])
                kind = CriterionKind(str(item["kind"]))
            except KeyError as exc:
                raise CriteriaConfigError(f"criterion missing field {exc.args[0]!r}") from None
            except ValueError:
                raise CriteriaConfigError(
                    f"kind must be 'benefit' or 'cost': {item.get('kind')!r}"
                ) from None
            if "weight" in item:
                weight = float(item["weight"])
            elif "weight_label" in item:
                try:
                    weight = weight_from_label(WeightLabel(str(item["weight_label"])))
                except ValueError:
                    raise CriteriaConfigError(
                        f"unknown weight_label {item['weight_label']!r}"
                    ) from None
            else:
                raise CriteriaConfigError(f"criterion {code} needs weight or weight_label")
            rules = tuple(rule_from_config(r) for r in item.get("rules", []))
            specs.append(
                CriterionSpec(
                    code=code,
                    name=str(item.get("name", code)),
                    kind=kind,
                    weight=weight,
                    rules=rules,
                )
            )
    except ValidationError as exc:
        raise CriteriaConfigError(str(exc)) from None
    codes = [s.code for s in specs]
    if len(codes) != len(set(codes)):
        raise CriteriaConfigError("duplicate criterion codes")
    return specs


def override_criteria(criteria, weight_overrides=None, rule_overrides=None) -> list[CriterionSpec]:
    """Criteria with per-code weight and/or conversion-table replacements.

    Weight overrides take a number in (0, 1] or a fuzzy label; rule
    overrides take rules in the config-file shape. Unknown codes and
    out-of-range values raise ValidationError.
    """
    weight_overrides = dict(weight_overrides or {})
    rule_overrides = dict(rule_overrides or {})
    known = {spec.code for spec in criteria}
    for code in list(weight_overrides) + list(rule_overrides):
        if code not in known:
            raise ValidationError(f"overrides.{code}", "unknown criterion code")
    out = []
    for spec in criteria:
        weight = spec.weight
        if spec.code in weight_overrides:
            raw = weight_overrides[spec.code]
            if isinstance(raw, str):
                try:
                    weight = weight_from_label(WeightLabel(raw))
                except ValueError:
                    raise ValidationError(
                        f"weights.{spec.code}", f"unknown weight label {raw!r}"
                    ) from None
            else:
                weight = float(raw)
        rules = spec.rules
        if spec.code in rule_overrides:
            rules = tuple(rule_from_config(r) for r in rule_overrides[spec.code])
        try:
            out.append(
                CriterionSpec(
                    code=spec.code, name=spec.name, kind=spec.kind, weight=weight, rules=rules
                )
            )
        except ValidationError as exc:
            raise ValidationError(f"overrides.{spec.code}", str(exc)) from None
    return out


def load_criteria(path=None) -> list[CriterionSpec]:
    """Criteria from a JSON config file, or the built-in tables when path is None."""
    if path is None:
        return default_criteria()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CriteriaConfigError(f"cannot read criteria config {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CriteriaConfigError(f"criteria config {path} is not valid JSON: {exc}") from None
    return criteria_from_config(data)
