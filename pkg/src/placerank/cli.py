"""Operator command line: candidate CRUD, ranking, reports, HTTP service.

Exit codes: 1 validation or config error, 2 duplicate candidate,
3 not found, 4 empty batch. Field validation happens in the command
bodies so these codes stay distinct from click's own usage errors.
"""

from __future__ import annotations

import functools
import json
import sys
from dataclasses import replace
from datetime import date
from pathlib import Path

import click

from .criteria import CriterionKind, load_criteria
from .errors import (
    CriteriaConfigError,
    DuplicateCandidate,
    EmptyBatch,
    InvalidDateOrder,
    NoResults,
    NotFound,
    PlacerankError,
    ValidationError,
)
from .models import (
    AttributeProfile,
    CandidateRecord,
    parse_education,
    parse_gender,
    parse_psych_result,
    record_to_dict,
)
from .registry import Registry, Scope
from .report import FORMATS, render_report, round_display

DATA_DIR_ENV = "PLACERANK_DATA_DIR"

_EXIT_CODES = (
    (DuplicateCandidate, 2),
    (NotFound, 3),
    (EmptyBatch, 4),
    (ValidationError, 1),
    (InvalidDateOrder, 1),
    (CriteriaConfigError, 1),
    (NoResults, 1),
    (PlacerankError, 1),
)


def handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except PlacerankError as exc:
            for kind, code in _EXIT_CODES:
                if isinstance(exc, kind):
                    click.echo(f"error: {exc}", err=True)
                    sys.exit(code)
            raise

    return wrapper


def _require(value, field):
    if value is None:
        raise ValidationError(field, "required")
    return value


def _parse_date(text, field) -> date:
    try:
        return date.fromisoformat(text)
    except ValueError:
        raise ValidationError(field, f"not an ISO-8601 date: {text!r}") from None


@click.group()
@click.option(
    "--data-dir",
    envvar=DATA_DIR_ENV,
    default="data",
    show_default=True,
    help=f"Registry directory (or ${DATA_DIR_ENV}).",
)
@click.option(
    "--criteria",
    "criteria_path",
    default=None,
    help="Criteria config JSON; built-in tables when absent.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(FORMATS),
    default="text",
    show_default=True,
    help="Output format for list/rank/report.",
)
@click.pass_context
def main(ctx, data_dir, criteria_path, fmt):
    """Rank overseas-placement candidates by weighted criterion scores."""
    ctx.obj = {
        "data_dir": Path(data_dir),
        "criteria_path": None if criteria_path is None else Path(criteria_path),
        "format": fmt,
    }


def _registry(ctx) -> Registry:
    return Registry(ctx.obj["data_dir"])


def _criteria(ctx):
    return load_criteria(ctx.obj["criteria_path"])


_candidate_options = [
    click.option("--name", default=None, help="Full name."),
    click.option("--gender", default=None, help="male/female (laki-laki/perempuan)."),
    click.option("--birth-date", default=None, help="ISO date, e.g. 1990-01-21."),
    click.option("--address", default=None),
    click.option("--phone", default=None),
    click.option("--email", default=None),
    click.option("--agency", default=None, help="Placement agency (PPTKIS)."),
    click.option("--country", default=None, help="Destination country."),
    click.option("--placement", default=None, help="Placement unit (kilang)."),
    click.option("--position", default=None),
    click.option("--intake-date", default=None, help="ISO date the candidate registered."),
    click.option("--age", type=int, default=None, help="Explicit age; derived from dates when omitted."),
    click.option("--education", default=None, help="SMP/SMA/DI/DII/DIII/DIV/S1."),
    click.option("--psych", default=None, help="recommended / not-yet-recommended."),
    click.option("--experience", type=int, default=None, help="Whole years of work experience."),
]


def candidate_options(fn):
    for opt in reversed(_candidate_options):
        fn = opt(fn)
    return fn


@main.command()
@candidate_options
@click.pass_context
@handle_errors
def add(ctx, name, gender, birth_date, address, phone, email, agency, country,
        placement, position, intake_date, age, education, psych, experience):
    """Register a new candidate."""
    record = CandidateRecord(
        full_name=_require(name, "full_name"),
        gender=parse_gender(_require(gender, "gender")),
        birth_date=_parse_date(_require(birth_date, "birth_date"), "birth_date"),
        address=address or "",
        phone=phone or "",
        email=email,
        agency_name=agency or "",
        destination_country=_require(country, "destination_country"),
        placement_unit=_require(placement, "placement_unit"),
        position=_require(position, "position"),
        intake_date=_parse_date(_require(intake_date, "intake_date"), "intake_date"),
    )
    profile = AttributeProfile(
        age_years=age,
        education_level=parse_education(_require(education, "education_level")),
        psych_result=parse_psych_result(_require(psych, "psych_result")),
        experience_years=_require(experience, "experience_years"),
    )
    cid = _registry(ctx).add_candidate(record, profile)
    click.echo(f"id: {cid}")


@main.command()
@click.option("--id", "cid", type=int, required=True)
@candidate_options
@click.pass_context
@handle_errors
def update(ctx, cid, name, gender, birth_date, address, phone, email, agency, country,
           placement, position, intake_date, age, education, psych, experience):
    """Update a candidate; flags not given keep their stored values."""
    registry = _registry(ctx)
    record, profile = registry.get_candidate(cid)
    record = replace(
        record,
        full_name=record.full_name if name is None else name,
        gender=record.gender if gender is None else parse_gender(gender),
        birth_date=record.birth_date if birth_date is None else _parse_date(birth_date, "birth_date"),
        address=record.address if address is None else address,
        phone=record.phone if phone is None else phone,
        email=record.email if email is None else email,
        agency_name=record.agency_name if agency is None else agency,
        destination_country=record.destination_country if country is None else country,
        placement_unit=record.placement_unit if placement is None else placement,
        position=record.position if position is None else position,
        intake_date=record.intake_date if intake_date is None else _parse_date(intake_date, "intake_date"),
    )
    profile = replace(
        profile,
        age_years=profile.age_years if age is None else age,
        education_level=profile.education_level if education is None else parse_education(education),
        psych_result=profile.psych_result if psych is None else parse_psych_result(psych),
        experience_years=profile.experience_years if experience is None else experience,
    )
    registry.update_candidate(cid, record, profile)
    click.echo(f"updated: {cid}")


@main.command()
@click.option("--id", "cid", type=int, required=True)
@click.pass_context
@handle_errors
def delete(ctx, cid):
    """Remove a candidate permanently."""
    _registry(ctx).delete_candidate(cid)
    click.echo(f"deleted: {cid}")


@main.command(name="list")
@click.option("--country", default=None)
@click.option("--placement", default=None)
@click.option("--position", default=None)
@click.pass_context
@handle_errors
def list_cmd(ctx, country, placement, position):
    """List candidates, optionally filtered by exact scope fields."""
    entries = _registry(ctx).list_candidates(
        destination_country=country, placement_unit=placement, position=position
    )
    fmt = ctx.obj["format"]
    if fmt == "json":
        click.echo(json.dumps([record_to_dict(r, p) for r, p in entries],
                              ensure_ascii=False, indent=2))
        return
    if fmt == "csv":
        click.echo("id,name,gender,birth_date,country,placement,position,"
                   "age,education,psych,experience")
        for r, p in entries:
            age = p.age_years if p.age_years is not None else ""
            click.echo(f"{r.id},{r.full_name},{r.gender.value},{r.birth_date},"
                       f"{r.destination_country},{r.placement_unit},{r.position},"
                       f"{age},{p.education_level.value},{p.psych_result.value},"
                       f"{p.experience_years}")
        return
    for r, p in entries:
        click.echo(f"{r.id}  {r.full_name}  {r.gender.value}  {r.birth_date}  "
                   f"{r.destination_country}/{r.placement_unit}/{r.position}")
    click.echo(f"{len(entries)} candidate(s)")


@main.command()
@click.option("--country", default=None)
@click.option("--placement", default=None)
@click.option("--position", default=None)
@click.pass_context
@handle_errors
def rank(ctx, country, placement, position):
    """Run a selection over a scope, persist the batch, print the report."""
    scope = Scope(
        destination_country=_require(country, "destination_country"),
        placement_unit=_require(placement, "placement_unit"),
        position=_require(position, "position"),
    )
    registry = _registry(ctx)
    batch = registry.create_batch(scope, _criteria(ctx))
    batch = registry.execute_batch(batch)
    click.echo(f"batch: {batch.id}", err=True)
    click.echo(render_report(batch, ctx.obj["format"]), nl=False)


@main.command()
@click.option("--batch", "batch_id", type=int, default=None,
              help="Batch id; the most recent one when omitted.")
@click.pass_context
@handle_errors
def report(ctx, batch_id):
    """Re-render a persisted batch."""
    registry = _registry(ctx)
    if batch_id is None:
        batch_id = registry.latest_batch_id()
        if batch_id is None:
            raise NotFound("no batch has been run yet")
    batch = registry.load_batch(batch_id)
    click.echo(render_report(batch, ctx.obj["format"]), nl=False)


def _find_rule(spec, raw_text):
    raw = int(raw_text) if raw_text.lstrip("-").isdigit() else raw_text
    for rule in spec.rules:
        if rule.matches(raw):
            return rule
    return None


@main.command()
@click.option("--id", "cid", type=int, required=True)
@click.option("--batch", "batch_id", type=int, default=None,
              help="Batch id; the most recent one when omitted.")
@click.pass_context
@handle_errors
def explain(ctx, cid, batch_id):
    """Audit one candidate: raw value, crisp, normalized, weighted, V."""
    registry = _registry(ctx)
    if batch_id is None:
        batch_id = registry.latest_batch_id()
        if batch_id is None:
            raise NotFound("no batch has been run yet")
    batch = registry.load_batch(batch_id)
    if batch.results is None:
        raise NoResults(f"batch {batch_id} has not been executed")
    for e in batch.results.exclusions:
        if e.candidate_id == cid:
            click.echo(f"candidate {cid} {e.name} was excluded: {e.reason}")
            return
    row = next((r for r in batch.results.rows if r.candidate_id == cid), None)
    if row is None:
        raise NotFound(f"candidate {cid} is not in batch {batch_id}")
    click.echo(
        f"candidate {cid} {row.name} - batch {batch.id}, rank {row.rank}, "
        f"V {row.preference!r} (display {round_display(row.preference)})"
    )
    for j, spec in enumerate(batch.criteria):
        rule = _find_rule(spec, row.raw[j])
        cite = f"table row {rule.describe()} -> {round_display(rule.value)}" if rule else "no rule"
        column = [r.crisp[j] for r in batch.results.rows]
        if spec.kind is CriterionKind.COST:
            anchor = f"column min {round_display(min(column))} / value"
        else:
            anchor = f"/ column max {round_display(max(column))}"
        click.echo(
            f"  {spec.code} {spec.name}: raw {row.raw[j]} -> crisp {round_display(row.crisp[j])}"
            f" ({cite}) -> normalized {round_display(row.normalized[j])} ({anchor})"
            f" -> weighted {round_display(row.weighted[j])} (x weight {round_display(spec.weight)})"
        )


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.pass_context
@handle_errors
def serve(ctx, host, port):
    """Start the HTTP service for the companion UI."""
    import uvicorn

    from .service import create_app

    app = create_app(ctx.obj["data_dir"], ctx.obj["criteria_path"])
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
