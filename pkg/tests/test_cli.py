from __future__ import annotations

import json
from pathlib import Path

from click.testing import CliRunner

from phrasecat.cli import main
from surveygen import make_responses, responses_to_csv

FIXTURES = Path(__file__).parent.parent / "fixtures"


def _invoke(*args):
    return CliRunner().invoke(main, list(args), catch_exceptions=False)


class TestRenderCommand:
    def test_all_languages(self):
        result = _invoke(
            "render",
            "--catalogue", str(FIXTURES / "fig2.json"),
            "--selection", str(FIXTURES / "selection_row1.json"),
        )
        assert result.exit_code == 0
        assert "de: Die Lawinen können gross werden." in result.output
        assert "en: The avalanches can reach large size." in result.output

    def test_single_language(self):
        result = _invoke(
            "render",
            "--catalogue", str(FIXTURES / "fig2.json"),
            "--selection", str(FIXTURES / "selection_row3.json"),
            "--lang", "en",
        )
        assert result.output.strip() == (
            "On very steep sunny slopes they can as before reach the bare valleys."
        )


class TestLintCommand:
    def test_clean_catalogue_exit_zero(self):
        result = _invoke("lint", str(FIXTURES / "fig2.json"))
        assert result.exit_code == 0
        assert "clean" in result.output

    def test_errors_exit_one(self, tmp_path, fig2_bytes):
        doc = json.loads(fig2_bytes)
        del doc["phrases"][0]["segments"][1]["options"][0]["contents"]["it"]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        result = CliRunner().invoke(main, ["lint", str(bad)])
        assert result.exit_code == 1
        assert "MISSING_TRANSLATION" in result.output

    def test_json_format(self):
        result = _invoke("lint", str(FIXTURES / "fig2.json"), "--format", "json")
        assert json.loads(result.output) == []


class TestCountCommand:
    def test_counts(self):
        result = _invoke("count", str(FIXTURES / "fig2.json"))
        assert "P-AVAL: 180" in result.output
        assert "total: 180" in result.output

    def test_single_phrase(self):
        result = _invoke("count", str(FIXTURES / "fig2.json"), "--phrase", "P-AVAL")
        assert result.output.strip() == "180"


class TestSearchCommand:
    def test_hits(self):
        result = _invoke("search", str(FIXTURES / "fig2.json"), "Lawinen", "gross")
        assert result.exit_code == 0
        assert result.output.startswith("P-AVAL")

    def test_no_hits(self):
        result = _invoke("search", str(FIXTURES / "fig2.json"), "xyzzy")
        assert "no phrases found" in result.output


class TestEvalCommand:
    def test_text_report(self, tmp_path):
        csv_path = tmp_path / "survey.csv"
        csv_path.write_text(responses_to_csv(make_responses(3, {"de": 190, "en": 40})))
        result = _invoke("eval", "--in", str(csv_path), "--seed", "7")
        assert result.exit_code == 0
        assert "Origin detection" in result.output
        assert "seed 7" in result.output

    def test_json_deterministic_for_seed(self, tmp_path):
        csv_path = tmp_path / "survey.csv"
        csv_path.write_text(responses_to_csv(make_responses(3, {"de": 190, "en": 40})))
        first = _invoke("eval", "--in", str(csv_path), "--seed", "5", "--format", "json")
        second = _invoke("eval", "--in", str(csv_path), "--seed", "5", "--format", "json")
        assert first.output == second.output
        assert json.loads(first.output)["seed"] == 5

    def test_sample_fixture(self):
        result = _invoke("eval", "--in", str(FIXTURES / "survey_sample.csv"), "--seed", "1")
        assert result.exit_code == 0
        assert "all (balanced)" in result.output
