"""File-backed candidate store and selection batches.

Single-writer, multiple-reader: every mutation rewrites the whole store
through a temp file and an atomic rename, so readers only ever see a
fully committed state.
"""

from __future__ import annotations

import json
import os
import re
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path

from .criteria import CriterionSpec, criteria_from_config, criteria_to_config, raw_attribute
from .engine import run_selection
from .errors import DuplicateCandidate, EmptyBatch, NotFound, ValidationError
from .models import AttributeProfile, CandidateRecord, record_from_dict, record_to_dict

CANDIDATES_FILE = "candidates.jsonl"
BATCHES_DIR = "batches"


@dataclass(frozen=True)
class Scope:
    """What a selection batch is run for: country, work unit, position."""

    destination_country: str
    placement_unit: str
    position: str


@dataclass(frozen=True)
class ResultRow:
    """One ranked candidate with the full audit chain of values."""

    rank: int
    candidate_id: int
    name: str
    raw: tuple[str, ...]
    crisp: tuple[float, ...]
    normalized: tuple[float, ...]
    weighted: tuple[float, ...]
    preference: float


@dataclass(frozen=True)
class ExclusionRow:
    candidate_id: int
    name: str
    criterion_code: str
    reason: str


@dataclass(frozen=True)
class SelectionResults:
    rows: tuple[ResultRow, ...]
    exclusions: tuple[ExclusionRow, ...]


@dataclass(frozen=True)
class SelectionBatch:
    """A selection run: scope, frozen criteria snapshot, members, results.

    id is None for ephemeral what-if runs, which are never persisted.
    """

    id: int | None
    scope: Scope
    criteria: tuple[CriterionSpec, ...]
    member_ids: tuple[int, ...]
    created_at: str
    results: SelectionResults | None = None


def _duplicate_key(record: CandidateRecord) -> tuple[str, str]:
    name = " ".join(record.full_name.lower().split())
    return name, record.birth_date.isoformat()


def _atomic_write(path: Path, data: bytes) -> None:
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "wb") as fh:
            fh.write(data)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise


def batch_to_dict(batch: SelectionBatch) -> dict:
    results = None
    if batch.results is not None:
        results = {
            "rows": [
                {
                    "rank": row.rank,
                    "candidate_id": row.candidate_id,
                    "name": row.name,
                    "raw": list(row.raw),
                    "crisp": list(row.crisp),
                    "normalized": list(row.normalized),
                    "weighted": list(row.weighted),
                    "preference": row.preference,
                }
                for row in batch.results.rows
            ],
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
    return {
        "id": batch.id,
        "created_at": batch.created_at,
        "scope": {
            "destination_country": batch.scope.destination_country,
            "placement_unit": batch.scope.placement_unit,
            "position": batch.scope.position,
        },
        "criteria": criteria_to_config(batch.criteria),
        "member_ids": list(batch.member_ids),
        "results": results,
    }


def batch_from_dict(obj: dict) -> SelectionBatch:
    results = None
    if obj.get("results") is not None:
        res = obj["results"]
        results = SelectionResults(
            rows=tuple(
                ResultRow(
                    rank=int(r["rank"]),
                    candidate_id=int(r["candidate_id"]),
                    name=str(r["name"]),
                    raw=tuple(str(x) for x in r["raw"]),
                    crisp=tuple(float(x) for x in r["crisp"]),
                    normalized=tuple(float(x) for x in r["normalized"]),
                    weighted=tuple(float(x) for x in r["weighted"]),
                    preference=float(r["preference"]),
                )
                for r in res["rows"]
            ),
            exclusions=tuple(
                ExclusionRow(
                    candidate_id=int(e["candidate_id"]),
                    name=str(e["name"]),
                    criterion_code=str(e["criterion_code"]),
                    reason=str(e["reason"]),
                )
                for e in res["exclusions"]
            ),
        )
    scope = obj["scope"]
    return SelectionBatch(
        id=int(obj["id"]),
        scope=Scope(
            destination_country=str(scope["destination_country"]),
            placement_unit=str(scope["placement_unit"]),
            position=str(scope["position"]),
        ),
        criteria=tuple(criteria_from_config(obj["criteria"])),
        member_ids=tuple(int(i) for i in obj["member_ids"]),
        created_at=str(obj["created_at"]),
        results=results,
    )


class Registry:
    """System of record for candidates plus persisted selection batches."""

    def __init__(self, data_dir):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._lock = threading.RLock()
        self._entries: list[tuple[CandidateRecord, AttributeProfile]] = []
        self._next_id = 1
        self._load()
        self._next_batch_id = self._scan_next_batch_id()

    @property
    def candidates_path(self) -> Path:
        return self.data_dir / CANDIDATES_FILE

    @property
    def batches_dir(self) -> Path:
        return self.data_dir / BATCHES_DIR

    def _load(self) -> None:
        if not self.candidates_path.exists():
            return
        with open(self.candidates_path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                record, profile = record_from_dict(json.loads(line))
                self._entries.append((record, profile))
        ids = [r.id for r, _ in self._entries if r.id is not None]
        self._next_id = max(ids, default=0) + 1

    def _save(self) -> None:
        lines = [
            json.dumps(record_to_dict(record, profile), ensure_ascii=False)
            for record, profile in self._entries
        ]
        data = ("\n".join(lines) + "\n" if lines else "").encode("utf-8")
        _atomic_write(self.candidates_path, data)

    def _scan_next_batch_id(self) -> int:
        if not self.batches_dir.is_dir():
            return 1
        ids = [
            int(m.group(1))
            for p in self.batches_dir.glob("*.json")
            if (m := re.fullmatch(r"(\d+)\.json", p.name))
        ]
        return max(ids, default=0) + 1

    def _check_duplicate(self, record: CandidateRecord, ignore_id: int | None = None) -> None:
        key = _duplicate_key(record)
        for other, _ in self._entries:
            if other.id != ignore_id and _duplicate_key(other) == key:
                raise DuplicateCandidate(
                    f"candidate {other.id} already has name {other.full_name!r} "
                    f"and birth date {other.birth_date}"
                )

    def add_candidate(self, record: CandidateRecord, profile: AttributeProfile) -> int:
        with self._lock:
            record.validate()
            profile.validate()
            self._check_duplicate(record)
            assigned = replace(record, id=self._next_id)
            self._entries.append((assigned, profile))
            self._next_id += 1
            self._save()
            return assigned.id

    def get_candidate(self, cid: int) -> tuple[CandidateRecord, AttributeProfile]:
        with self._lock:
            for record, profile in self._entries:
                if record.id == cid:
                    return record, profile
        raise NotFound(f"candidate {cid} does not exist")

    def update_candidate(
        self, cid: int, record: CandidateRecord, profile: AttributeProfile
    ) -> None:
        with self._lock:
            index = self._index_of(cid)
            record.validate()
            profile.validate()
            self._check_duplicate(record, ignore_id=cid)
            self._entries[index] = (replace(record, id=cid), profile)
            self._save()

    def delete_candidate(self, cid: int) -> None:
        with self._lock:
            index = self._index_of(cid)
            del self._entries[index]
            self._save()

    def _index_of(self, cid: int) -> int:
        for i, (record, _) in enumerate(self._entries):
            if record.id == cid:
                return i
        raise NotFound(f"candidate {cid} does not exist")

    def list_candidates(
        self,
        destination_country: str | None = None,
        placement_unit: str | None = None,
        position: str | None = None,
    ) -> list[tuple[CandidateRecord, AttributeProfile]]:
        """Insertion order, filtered by exact scope-field match when given."""
        with self._lock:
            out = []
            for record, profile in self._entries:
                if destination_country is not None and record.destination_country != destination_country:
                    continue
                if placement_unit is not None and record.placement_unit != placement_unit:
                    continue
                if position is not None and record.position != position:
                    continue
                out.append((record, profile))
            return out

    # -- selection batches ------------------------------------------------

    def _members_for(self, scope: Scope) -> list[tuple[CandidateRecord, AttributeProfile]]:
        members = self.list_candidates(
            destination_country=scope.destination_country,
            placement_unit=scope.placement_unit,
            position=scope.position,
        )
        if not members:
            raise EmptyBatch(
                f"no candidate matches scope {scope.destination_country} / "
                f"{scope.placement_unit} / {scope.position}"
            )
        return members

    def create_batch(self, scope: Scope, criteria) -> SelectionBatch:
        """New batch over the candidates matching scope; criteria are frozen in."""
        with self._lock:
            members = self._members_for(scope)
            batch = SelectionBatch(
                id=self._next_batch_id,
                scope=scope,
                criteria=tuple(criteria),
                member_ids=tuple(record.id for record, _ in members),
                created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            )
            self._next_batch_id += 1
            return batch

    def _compute_results(self, batch: SelectionBatch) -> SelectionResults:
        entries = []
        names = {}
        for mid in batch.member_ids:
            record, profile = self.get_candidate(mid)
            names[mid] = record.full_name
            entries.append((mid, profile.resolved(record)))
        outcome = run_selection(entries, batch.criteria)

        by_id = {cid: i for i, cid in enumerate(outcome.matrix.alternative_ids)}
        normalized = outcome.normalized.as_floats()
        profiles = dict(entries)
        rows = tuple(
            ResultRow(
                rank=r.rank,
                candidate_id=r.candidate_id,
                name=names[r.candidate_id],
                raw=tuple(
                    str(raw_attribute(profiles[r.candidate_id], spec.code))
                    for spec in batch.criteria
                ),
                crisp=outcome.matrix.values[by_id[r.candidate_id]],
                normalized=normalized[by_id[r.candidate_id]],
                weighted=r.weighted_components,
                preference=r.preference_value,
            )
            for r in outcome.ranked
        )
        exclusions = tuple(
            ExclusionRow(e.candidate_id, names[e.candidate_id], e.criterion_code, e.reason)
            for e in outcome.exclusions
        )
        return SelectionResults(rows, exclusions)

    def execute_batch(self, batch: SelectionBatch) -> SelectionBatch:
        """Run the selection over the batch members and persist the results."""
        with self._lock:
            executed = replace(batch, results=self._compute_results(batch))
            self._save_batch(executed)
            return executed

    def whatif(self, scope: Scope, criteria) -> SelectionBatch:
        """Ephemeral selection over a scope: computed, returned, never persisted."""
        with self._lock:
            members = self._members_for(scope)
            batch = SelectionBatch(
                id=None,
                scope=scope,
                criteria=tuple(criteria),
                member_ids=tuple(record.id for record, _ in members),
                created_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
            )
            return replace(batch, results=self._compute_results(batch))

    def _save_batch(self, batch: SelectionBatch) -> None:
        self.batches_dir.mkdir(parents=True, exist_ok=True)
        data = json.dumps(batch_to_dict(batch), ensure_ascii=False, indent=2) + "\n"
        _atomic_write(self.batches_dir / f"{batch.id}.json", data.encode("utf-8"))

    def load_batch(self, batch_id: int) -> SelectionBatch:
        path = self.batches_dir / f"{batch_id}.json"
        if not path.exists():
            raise NotFound(f"batch {batch_id} does not exist")
        return batch_from_dict(json.loads(path.read_text(encoding="utf-8")))

    def latest_batch_id(self) -> int | None:
        next_id = self._scan_next_batch_id()
        return next_id - 1 if next_id > 1 else None
