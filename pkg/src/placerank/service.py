"""HTTP service around the registry and the selection pipeline.

Started with `placerank serve`; the companion UI is a pure client of
these endpoints. Criteria are re-read from the config file per request,
so edits show up without a restart (persisted batches keep their frozen
snapshot regardless).
"""

from __future__ import annotations

from datetime import date
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .criteria import criteria_to_config, load_criteria, override_criteria
from .errors import (
    CriteriaConfigError,
    DuplicateCandidate,
    EmptyBatch,
    NotFound,
    ValidationError,
)
from .models import record_from_dict, record_to_dict
from .registry import Registry, Scope, SelectionBatch
from .report import FORMATS, render_report, report_dict

_MEDIA_TYPES = {"json": "application/json", "csv": "text/csv", "text": "text/plain"}


class ProfileModel(BaseModel):
    age_years: int | None = None
    education_level: str
    psych_result: str
    experience_years: int


class CandidateIn(BaseModel):
    full_name: str
    gender: str
    birth_date: date
    address: str = ""
    phone: str = ""
    email: str | None = None
    agency_name: str = ""
    destination_country: str
    placement_unit: str
    position: str
    intake_date: date
    profile: ProfileModel


class CandidateOut(CandidateIn):
    id: int


class ScopeModel(BaseModel):
    destination_country: str
    placement_unit: str
    position: str

    def to_scope(self) -> Scope:
        return Scope(self.destination_country, self.placement_unit, self.position)


class RuleModel(BaseModel):
    range: tuple[int, int | None] | None = None
    label: str | None = None
    value: float

    def to_config(self) -> dict:
        if self.range is not None:
            return {"range": list(self.range), "value": self.value}
        return {"label": self.label, "value": self.value}


class SelectionRequest(BaseModel):
    """Scope plus optional overrides; overrides become part of the
    persisted criteria snapshot when used with /selections."""

    scope: ScopeModel
    weights: dict[str, float | str] = {}
    crisp_maps: dict[str, list[RuleModel]] = {}


class DisplayModel(BaseModel):
    crisp: list[str]
    normalized: list[str]
    weighted: list[str]
    preference: str


class ResultRowModel(BaseModel):
    rank: int
    candidate_id: int
    name: str
    raw: list[str]
    crisp: list[float]
    normalized: list[float]
    weighted: list[float]
    preference: float
    display: DisplayModel


class ExclusionModel(BaseModel):
    candidate_id: int
    name: str
    criterion_code: str
    reason: str


class SelectionResponse(BaseModel):
    batch_id: int | None
    created_at: str | None
    scope: ScopeModel
    criteria: list[dict]
    rows: list[ResultRowModel]
    exclusions: list[ExclusionModel]


def _selection_response(batch: SelectionBatch) -> SelectionResponse:
    doc = report_dict(batch)
    return SelectionResponse(batch_id=batch.id, created_at=batch.created_at or None, **doc)


def create_app(data_dir, criteria_path=None, cors_origins=None) -> FastAPI:
    app = FastAPI(title="placerank", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    registry = Registry(Path(data_dir))
    criteria_path = None if criteria_path is None else Path(criteria_path)

    def active_criteria():
        return load_criteria(criteria_path)

    @app.exception_handler(ValidationError)
    def _validation(request: Request, exc: ValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc), "field": exc.field})

    @app.exception_handler(RequestValidationError)
    def _request_validation(request: Request, exc: RequestValidationError):
        errors = [
            {"loc": [str(p) for p in e.get("loc", [])], "msg": str(e.get("msg", ""))}
            for e in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"detail": "invalid request", "errors": errors})

    @app.exception_handler(DuplicateCandidate)
    def _duplicate(request: Request, exc: DuplicateCandidate):
        return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.exception_handler(NotFound)
    def _not_found(request: Request, exc: NotFound):
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.exception_handler(EmptyBatch)
    def _empty(request: Request, exc: EmptyBatch):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.exception_handler(CriteriaConfigError)
    def _config(request: Request, exc: CriteriaConfigError):
        return JSONResponse(status_code=500, content={"detail": f"criteria config error: {exc}"})

    def _to_entry(body: CandidateIn):
        return record_from_dict({**body.model_dump(mode="json"), "id": None})

    @app.get("/candidates", response_model=list[CandidateOut])
    def list_candidates(
        country: str | None = None,
        placement: str | None = None,
        position: str | None = None,
    ):
        entries = registry.list_candidates(
            destination_country=country, placement_unit=placement, position=position
        )
        return [record_to_dict(r, p) for r, p in entries]

    @app.post("/candidates", response_model=CandidateOut, status_code=201)
    def add_candidate(body: CandidateIn):
        record, profile = _to_entry(body)
        cid = registry.add_candidate(record, profile)
        return record_to_dict(*registry.get_candidate(cid))

    @app.get("/candidates/{cid}", response_model=CandidateOut)
    def get_candidate(cid: int):
        return record_to_dict(*registry.get_candidate(cid))

    @app.put("/candidates/{cid}", response_model=CandidateOut)
    def update_candidate(cid: int, body: CandidateIn):
        record, profile = _to_entry(body)
        registry.update_candidate(cid, record, profile)
        return record_to_dict(*registry.get_candidate(cid))

    @app.delete("/candidates/{cid}")
    def delete_candidate(cid: int):
        registry.delete_candidate(cid)
        return {"deleted": cid}

    @app.get("/criteria")
    def get_criteria():
        return criteria_to_config(active_criteria())

    def _effective_criteria(body: SelectionRequest):
        return override_criteria(
            active_criteria(),
            weight_overrides=body.weights,
            rule_overrides={code: [r.to_config() for r in rules]
                            for code, rules in body.crisp_maps.items()},
        )

    @app.post("/selections", response_model=SelectionResponse)
    def run_selection(body: SelectionRequest):
        batch = registry.create_batch(body.scope.to_scope(), _effective_criteria(body))
        return _selection_response(registry.execute_batch(batch))

    @app.post("/selections/whatif", response_model=SelectionResponse)
    def run_whatif(body: SelectionRequest):
        return _selection_response(registry.whatif(body.scope.to_scope(), _effective_criteria(body)))

    @app.get("/selections/{batch_id}", response_model=SelectionResponse)
    def get_selection(batch_id: int):
        return _selection_response(registry.load_batch(batch_id))

    @app.get("/selections/{batch_id}/report")
    def get_selection_report(batch_id: int, format: str = "json"):
        if format not in FORMATS:
            raise ValidationError("format", f"must be one of {', '.join(FORMATS)}")
        batch = registry.load_batch(batch_id)
        return Response(content=render_report(batch, format), media_type=_MEDIA_TYPES[format])

    return app
