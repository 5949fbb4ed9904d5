from datetime import date

import pytest

from placerank import (
    AttributeProfile,
    CandidateRecord,
    EducationLevel,
    Gender,
    PsychResult,
    Registry,
)

INTAKE = date(2013, 4, 29)

# The five-candidate worked example, in registration order. Ages are stored
# explicitly: the registration form captures age directly and three of the
# stored ages disagree with the birth dates.
FIXTURE = [
    ("TERE", Gender.FEMALE, date(1992, 4, 26), "PLAJU", "0969899999",
     20, EducationLevel.SMA, 0),
    ("yeli", Gender.FEMALE, date(1988, 1, 9), "pako", "0999899999",
     25, EducationLevel.SMP, 3),
    ("mona", Gender.FEMALE, date(1991, 6, 30), "6. kelapa", "0711345678",
     22, EducationLevel.SMA, 3),
    ("DEDE", Gender.MALE, date(1992, 4, 28), "VDV", "990890",
     20, EducationLevel.SMA, 2),
    ("MINA", Gender.FEMALE, date(1990, 1, 21), "7 ULU", "0969898888",
     23, EducationLevel.DI_DIII, 6),
]

GOLDEN_CRISP = [
    (1.00, 0.25, 1.00, 0.00),
    (0.50, 0.00, 1.00, 0.25),
    (0.75, 0.25, 1.00, 0.25),
    (1.00, 0.25, 1.00, 0.25),
    (0.75, 0.50, 1.00, 0.50),
]

GOLDEN_NORMALIZED = [
    (1.00, 0.50, 1.00, 0.00),
    (0.50, 0.00, 1.00, 0.50),
    (0.75, 0.50, 1.00, 0.50),
    (1.00, 0.50, 1.00, 0.50),
    (0.75, 1.00, 1.00, 1.00),
]

# V in input order (TERE, yeli, mona, DEDE, MINA) and the resulting ranking.
GOLDEN_V = [1.875, 1.625, 2.125, 2.25, 2.875]
GOLDEN_ORDER = [("MINA", 5), ("DEDE", 4), ("mona", 3), ("TERE", 1), ("yeli", 2)]
GOLDEN_V_DISPLAY = {"MINA": "2.88", "DEDE": "2.25", "mona": "2.13", "TERE": "1.88", "yeli": "1.63"}


def fixture_entries():
    """(name, CandidateRecord, AttributeProfile) triples for the worked five-candidate batch."""
    out = []
    for name, gender, birth, address, phone, age, education, experience in FIXTURE:
        record = CandidateRecord(
            full_name=name,
            gender=gender,
            birth_date=birth,
            address=address,
            phone=phone,
            agency_name="PT Citra Karya S",
            destination_country="Malaysia",
            placement_unit="Nada Persada",
            position="PRT",
            intake_date=INTAKE,
        )
        profile = AttributeProfile(
            age_years=age,
            education_level=education,
            psych_result=PsychResult.RECOMMENDED,
            experience_years=experience,
        )
        out.append((name, record, profile))
    return out


@pytest.fixture
def fixture_profiles():
    """(candidate_id, profile) pairs with ids 1..5 in registration order."""
    return [(i, profile) for i, (_, _, profile) in enumerate(fixture_entries(), start=1)]


@pytest.fixture
def seeded_registry(tmp_path):
    """A registry under tmp_path holding the five-candidate fixture."""
    registry = Registry(tmp_path / "data")
    for _, record, profile in fixture_entries():
        registry.add_candidate(record, profile)
    return registry
