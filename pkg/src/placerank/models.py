"""Candidate domain types, raw-attribute parsing, and the JSON record shape."""

from __future__ import annotations

from dataclasses import dataclass, replace
from datetime import date
from enum import Enum

from .errors import InvalidDateOrder, ValidationError


class Gender(Enum):
    MALE = "male"
    FEMALE = "female"


class EducationLevel(Enum):
    SMP = "SMP"
    SMA = "SMA"
    DI_DIII = "DI-DIII"
    DIV = "DIV"
    S1 = "S1"


class PsychResult(Enum):
    RECOMMENDED = "recommended"
    NOT_YET_RECOMMENDED = "not_yet_recommended"


# Accepted spellings for operator-facing inputs. Registration forms write
# diploma levels as DI/DII/DIII and the psych verdict in Indonesian.
_GENDER_ALIASES = {
    "male": Gender.MALE,
    "m": Gender.MALE,
    "laki-laki": Gender.MALE,
    "l": Gender.MALE,
    "female": Gender.FEMALE,
    "f": Gender.FEMALE,
    "perempuan": Gender.FEMALE,
    "p": Gender.FEMALE,
}

_EDUCATION_ALIASES = {
    "smp": EducationLevel.SMP,
    "sma": EducationLevel.SMA,
    "di": EducationLevel.DI_DIII,
    "dii": EducationLevel.DI_DIII,
    "diii": EducationLevel.DI_DIII,
    "di-diii": EducationLevel.DI_DIII,
    "di_diii": EducationLevel.DI_DIII,
    "div": EducationLevel.DIV,
    "s1": EducationLevel.S1,
}

_PSYCH_ALIASES = {
    "recommended": PsychResult.RECOMMENDED,
    "disarankan": PsychResult.RECOMMENDED,
    "not_yet_recommended": PsychResult.NOT_YET_RECOMMENDED,
    "not-yet-recommended": PsychResult.NOT_YET_RECOMMENDED,
    "notyetrecommended": PsychResult.NOT_YET_RECOMMENDED,
    "belum_disarankan": PsychResult.NOT_YET_RECOMMENDED,
    "belum-disarankan": PsychResult.NOT_YET_RECOMMENDED,
    "belumdisarankan": PsychResult.NOT_YET_RECOMMENDED,
}


def _parse_enum(text, aliases, field):
    key = str(text).strip().lower()
    try:
        return aliases[key]
    except KeyError:
        raise ValidationError(field, f"unrecognized value {text!r}") from None


def parse_gender(text) -> Gender:
    return _parse_enum(text, _GENDER_ALIASES, "gender")


def parse_education(text) -> EducationLevel:
    return _parse_enum(text, _EDUCATION_ALIASES, "education_level")


def parse_psych_result(text) -> PsychResult:
    return _parse_enum(text, _PSYCH_ALIASES, "psych_result")


def compute_age(birth_date: date, as_of: date) -> int:
    """Completed years between birth_date and as_of (whole birthdays passed)."""
    if birth_date >= as_of:
        raise InvalidDateOrder(f"birth date {birth_date} is not before {as_of}")
    had_birthday = (as_of.month, as_of.day) >= (birth_date.month, birth_date.day)
    return as_of.year - birth_date.year - (0 if had_birthday else 1)


@dataclass(frozen=True, kw_only=True)
class CandidateRecord:
    """Identity and placement scope of one candidate worker (CTKI)."""

    full_name: str
    gender: Gender
    birth_date: date
    address: str = ""
    phone: str = ""
    email: str | None = None
    agency_name: str = ""
    destination_country: str
    placement_unit: str
    position: str
    intake_date: date
    id: int | None = None  # assigned by the registry

    def validate(self) -> None:
        if self.id is not None and self.id < 1:
            raise ValidationError("id", "must be a positive integer")
        if not self.full_name.strip():
            raise ValidationError("full_name", "must not be empty")
        if self.birth_date >= self.intake_date:
            raise ValidationError("birth_date", "must be before intake_date")


@dataclass(frozen=True, kw_only=True)
class AttributeProfile:
    """The four raw criterion inputs for one candidate.

    age_years may be omitted; it is then derived from the record's birth
    and intake dates. An explicit value always wins, so a stored age can
    disagree with the dates (registration forms capture age directly).
    """

    age_years: int | None = None
    education_level: EducationLevel
    psych_result: PsychResult
    experience_years: int

    def validate(self) -> None:
        if self.age_years is not None and self.age_years < 0:
            raise ValidationError("age_years", "must be >= 0")
        if self.experience_years < 0:
            raise ValidationError("experience_years", "must be >= 0")

    def resolved(self, record: CandidateRecord) -> AttributeProfile:
        """Fill in age from the record's dates when no explicit age is set."""
        if self.age_years is not None:
            return self
        return replace(self, age_years=compute_age(record.birth_date, record.intake_date))


def record_to_dict(record: CandidateRecord, profile: AttributeProfile) -> dict:
    """One candidate as the JSON object stored per registry line."""
    return {
        "id": record.id,
        "full_name": record.full_name,
        "gender": record.gender.value,
        "birth_date": record.birth_date.isoformat(),
        "address": record.address,
        "phone": record.phone,
        "email": record.email,
        "agency_name": record.agency_name,
        "destination_country": record.destination_country,
        "placement_unit": record.placement_unit,
        "position": record.position,
        "intake_date": record.intake_date.isoformat(),
        "profile": {
            "age_years": profile.age_years,
            "education_level": profile.education_level.value,
            "psych_result": profile.psych_result.value,
            "experience_years": profile.experience_years,
        },
    }


def _parse_date(value, field) -> date:
    try:
        return date.fromisoformat(str(value))
    except ValueError:
        raise ValidationError(field, f"not an ISO-8601 date: {value!r}") from None


def record_from_dict(obj: dict) -> tuple[CandidateRecord, AttributeProfile]:
    """Inverse of record_to_dict; raises ValidationError on bad fields."""
    try:
        prof = obj["profile"]
        record = CandidateRecord(
            id=obj.get("id"),
            full_name=str(obj["full_name"]),
            gender=parse_gender(obj["gender"]),
            birth_date=_parse_date(obj["birth_date"], "birth_date"),
            address=str(obj.get("address") or ""),
            phone=str(obj.get("phone") or ""),
            email=obj.get("email"),
            agency_name=str(obj.get("agency_name") or ""),
            destination_country=str(obj["destination_country"]),
            placement_unit=str(obj["placement_unit"]),
            position=str(obj["position"]),
            intake_date=_parse_date(obj["intake_date"], "intake_date"),
        )
        profile = AttributeProfile(
            age_years=None if prof.get("age_years") is None else int(prof["age_years"]),
            education_level=parse_education(prof["education_level"]),
            psych_result=parse_psych_result(prof["psych_result"]),
            experience_years=int(prof["experience_years"]),
        )
    except KeyError as exc:
        raise ValidationError(str(exc.args[0]), "missing field") from None
    except (TypeError, ValueError) as exc:
        raise ValidationError("record", f"malformed candidate object: {exc}") from None
    return record, profile
