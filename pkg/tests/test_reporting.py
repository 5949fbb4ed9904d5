import json

import pytest

from placerank import NoResults, Scope, default_criteria, render_report, round_display
from oracle import rank_exact

FIXTURE_SCOPE = Scope("Malaysia", "Nada Persada", "PRT")

MINA_CSV_ROW = "1,5,MINA,0.75,0.50,1.00,0.50,0.75,1.00,1.00,1.00,0.38,0.75,1.00,0.75,2.88"


@pytest.fixture
def executed_batch(seeded_registry):
    batch = seeded_registry.create_batch(FIXTURE_SCOPE, default_criteria())
    return seeded_registry.execute_batch(batch)


class TestRoundDisplay:
    @pytest.mark.parametrize("value,expected", [
        (0.375, "0.38"),
        (0.0, "0.00"),
        (2.125, "2.13"),
        (2.875, "2.88"),
        (1.625, "1.63"),
        (1.875, "1.88"),
        (2.25, "2.25"),
        (1.0, "1.00"),
        (0.005, "0.01"),
    ])
    def test_half_up_two_decimals(self, value, expected):
        assert round_display(value) == expected


class TestCsv:
    def test_golden_mina_row(self, executed_batch):
        lines = render_report(executed_batch, "csv").decode("utf-8").splitlines()
        assert lines[0] == "rank,id,name,C1,C2,C3,C4,RC1,RC2,RC3,RC4,RxW1,RxW2,RxW3,RxW4,V"
        assert lines[1] == MINA_CSV_ROW

    def test_all_rows_in_rank_order(self, executed_batch):
        lines = render_report(executed_batch, "csv").decode("utf-8").splitlines()
        names = [line.split(",")[2] for line in lines[1:]]
        assert names == ["MINA", "DEDE", "mona", "TERE", "yeli"]

    def test_lf_line_endings(self, executed_batch):
        data = render_report(executed_batch, "csv")
        assert b"\r" not in data


class TestJson:
    def test_full_precision_values(self, executed_batch):
        doc = json.loads(render_report(executed_batch, "json"))
        mina = doc["rows"][0]
        assert mina["preference"] == 2.875
        assert mina["weighted"] == [0.375, 0.75, 1.0, 0.75]
        assert mina["display"]["preference"] == "2.88"
        assert mina["display"]["weighted"] == ["0.38", "0.75", "1.00", "0.75"]

    def test_no_volatile_fields(self, executed_batch):
        doc = json.loads(render_report(executed_batch, "json"))
        assert set(doc) == {"scope", "criteria", "rows", "exclusions"}

    def test_reparse_and_rerank_matches(self, executed_batch):
        """The report is self-consistent: the oracle re-ranks it identically."""
        doc = json.loads(render_report(executed_batch, "json"))
        ids = [row["candidate_id"] for row in doc["rows"]]
        kinds = [c["kind"] for c in doc["criteria"]]
        weights = [c["weight"] for c in doc["criteria"]]
        crisp = [row["crisp"] for row in doc["rows"]]
        from oracle import preferences_exact

        expected = rank_exact(ids, preferences_exact(crisp, kinds, weights))
        assert ids == expected

    def test_empty_exclusions_is_empty_array(self, executed_batch):
        doc = json.loads(render_report(executed_batch, "json"))
        assert doc["exclusions"] == []

    def test_byte_identical_rendering(self, executed_batch):
        for fmt in ("json", "csv", "text"):
            assert render_report(executed_batch, fmt) == render_report(executed_batch, fmt)


class TestText:
    def test_contains_ranking_and_weights(self, executed_batch):
        text = render_report(executed_batch, "text").decode("utf-8")
        assert "MINA" in text
        assert "2.88" in text
        assert "weight 1.00" in text

    def test_exclusions_section_omitted_when_empty(self, executed_batch):
        text = render_report(executed_batch, "text").decode("utf-8")
        assert "Excluded" not in text

    def test_exclusions_section_present(self, seeded_registry):
        from datetime import date

        from test_registry import sample_profile, sample_record

        seeded_registry.add_candidate(
            sample_record(name="OLDTIMER", birth=date(1970, 1, 1)),
            sample_profile(age_years=43),
        )
        batch = seeded_registry.execute_batch(
            seeded_registry.create_batch(FIXTURE_SCOPE, default_criteria())
        )
        text = render_report(batch, "text").decode("utf-8")
        assert "Excluded" in text
        assert "OLDTIMER" in text


class TestErrors:
    def test_unexecuted_batch(self, seeded_registry):
        batch = seeded_registry.create_batch(FIXTURE_SCOPE, default_criteria())
        with pytest.raises(NoResults):
            render_report(batch, "json")

    def test_unknown_format(self, executed_batch):
        from placerank import ValidationError

        with pytest.raises(ValidationError):
            render_report(executed_batch, "xml")
