"""Render an executed selection batch as JSON, CSV, or plain text.

JSON carries full-precision doubles plus the 2-decimal display strings;
CSV and TEXT carry display values only. The JSON document intentionally
excludes the batch id and timestamp so repeated runs over the same stored
state are byte-identical; TEXT shows both for the human reader.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_UP, Decimal

from .criteria import criteria_to_config
from .errors import NoResults, ValidationError
from .registry import SelectionBatch

FORMATS = ("json", "csv", "text")


def round_display(value) -> str:
    """Two-decimal display string, rounding half up (0.375 -> '0.38')."""
    return str(Decimal(repr(float(value))).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def report_dict(batch: SelectionBatch) -> dict:
    """The report as a JSON-ready dict; key order is the documented one."""
    if batch.results is None:
        raise NoResults(f"batch {batch.id} has not been executed")
    rows = []
    for row in batch.results.rows:
        rows.append(
            {
                "rank": row.rank,
                "candidate_id": row.candidate_id,
                "name": row.name,
                "raw": list(row.raw),
                "crisp": list(row.crisp),
                "normalized": list(row.normalized),
                "weighted": list(row.weighted),
                "preference": row.preference,
                "display": {
                    "crisp": [round_display(x) for x in row.crisp],
                    "normalized": [round_display(x) for x in row.normalized],
                    "weighted": [round_display(x) for x in row.weighted],
                    "preference": round_display(row.preference),
                },
            }
        )
    return {
        "scope": {
            "destination_country": batch.scope.destination_country,
            "placement_unit": batch.scope.placement_unit,
            "position": batch.scope.position,
        },
        "criteria": criteria_to_config(batch.criteria),
        "rows": rows,
        "exclusions": [
            {
                "candidate_id": e.candidate_id,
                "name": e.name,
                "criterion_code": e.criterion_code,
                "reason": e.reason,
            }
            for e in batch.results.exclusions
        ],
    }


def _render_json(batch: SelectionBatch) -> str:
    return json.dumps(report_dict(batch), ensure_ascii=False, indent=2) + "\n"


def _render_csv(batch: SelectionBatch) -> str:
    if batch.results is None:
        raise NoResults(f"batch {batch.id} has not been executed")
    codes = [spec.code for spec in batch.criteria]
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["rank", "id", "name"]
        + codes
        + [f"R{c}" for c in codes]
        + [f"RxW{j}" for j in range(1, len(codes) + 1)]
        + ["V"]
    )
    for row in batch.results.rows:
        writer.writerow(
            [row.rank, row.candidate_id, row.name]
            + [round_display(x) for x in row.crisp]
            + [round_display(x) for x in row.normalized]
            + [round_display(x) for x in row.weighted]
            + [round_display(row.preference)]
        )
    return out.getvalue()


def _render_text(batch: SelectionBatch) -> str:
    if batch.results is None:
        raise NoResults(f"batch {batch.id} has not been executed")
    lines = []
    lines.append("Selection report (laporan hasil penyeleksian)")
    lines.append(
        f"Scope: {batch.scope.destination_country} / {batch.scope.placement_unit}"
        f" / {batch.scope.position}"
    )
    lines.append(f"Batch: {batch.id}  executed {batch.created_at}")
    lines.append("")
    lines.append("Criteria weights:")
    for spec in batch.criteria:
        lines.append(
            f"  {spec.code}  {spec.name}  [{spec.kind.value}]  weight {round_display(spec.weight)}"
        )
    lines.append("")
    codes = [spec.code for spec in batch.criteria]
    header = (
        ["rank", "id", "name"]
        + codes
        + [f"R{c}" for c in codes]
        + [f"RxW{j}" for j in range(1, len(codes) + 1)]
        + ["V"]
    )
    table = [header]
    for row in batch.results.rows:
        table.append(
            [str(row.rank), str(row.candidate_id), row.name]
            + [round_display(x) for x in row.crisp]
            + [round_display(x) for x in row.normalized]
            + [round_display(x) for x in row.weighted]
            + [round_display(row.preference)]
        )
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    for r in table:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    if batch.results.exclusions:
        lines.append("")
        lines.append("Excluded (no matching table row):")
        for e in batch.results.exclusions:
            lines.append(f"  {e.candidate_id}  {e.name}  {e.criterion_code}: {e.reason}")
    lines.append("")
    return "\n".join(lines)


def render_report(batch: SelectionBatch, fmt: str) -> bytes:
    """Render the executed batch in the given format as UTF-8 bytes."""
    if fmt == "json":
        text = _render_json(batch)
    elif fmt == "csv":
        text = _render_csv(batch)
    elif fmt == "text":
        text = _render_text(batch)
    else:
        raise ValidationError("format", f"unknown report format {fmt!r}")
    return text.encode("utf-8")
