from __future__ import annotations

import json
import random

import pytest

from catgen import random_catalogue
from phrasecat import Agreement, parse_catalogue, serialize_catalogue
from phrasecat.lint import SEVERITY_ERROR, SEVERITY_WARNING, lint
from phrasecat.model import resolve_path


def _doc(fig2_bytes) -> dict:
    return json.loads(fig2_bytes)


def _lint_doc(doc) -> list:
    return lint(parse_catalogue(json.dumps(doc), strict=False))


class TestCleanCatalogue:
    def test_fig2_is_clean(self, fig2):
        assert lint(fig2) == []

    def test_idempotent_across_round_trip(self, fig2):
        again = parse_catalogue(serialize_catalogue(fig2))
        assert lint(again) == []
        assert lint(again) == lint(again)


class TestSeededDefects:
    def test_missing_translation(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        del doc["phrases"][0]["segments"][1]["options"][0]["contents"]["it"]
        findings = _lint_doc(doc)
        assert [(f.code, f.severity, f.path) for f in findings] == [
            ("MISSING_TRANSLATION", SEVERITY_ERROR, "P-AVAL/s2/o1")
        ]

    def test_bad_permutation_duplicate_whole(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        doc["phrases"][0]["layouts"]["fr"] = ["1", "1", "2", "3", "4", "5"]
        findings = _lint_doc(doc)
        assert any(f.code == "BAD_LAYOUT_PERMUTATION" for f in findings)

    def test_bad_permutation_missing_segment(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        doc["phrases"][0]["layouts"]["fr"] = ["1", "2", "3", "4"]
        findings = _lint_doc(doc)
        assert any(f.code == "BAD_LAYOUT_PERMUTATION" for f in findings)

    def test_source_split(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        for opt in doc["phrases"][0]["segments"][0]["options"]:
            opt["contents"]["de"] = {"a": opt["contents"]["de"], "b": []}
        doc["phrases"][0]["layouts"]["de"] = ["1a", "1b", "2", "3", "4", "5"]
        findings = _lint_doc(doc)
        assert any(f.code == "BAD_SOURCE_LAYOUT" for f in findings)

    def test_source_reorder(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        doc["phrases"][0]["layouts"]["de"] = ["2", "1", "3", "4", "5"]
        findings = _lint_doc(doc)
        assert any(f.code == "BAD_SOURCE_LAYOUT" for f in findings)

    def test_split_mismatch(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        # layout says segment 3 is split in English, make one option unsplit
        doc["phrases"][0]["segments"][2]["options"][1]["contents"]["en"] = [
            {"t": "lit", "v": "also"}
        ]
        findings = _lint_doc(doc)
        assert [(f.code, f.path) for f in findings if f.code == "SPLIT_MISMATCH"] == [
            ("SPLIT_MISMATCH", "P-AVAL/s3/o2")
        ]

    def test_slot_mismatch(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        # drop the slot from the French content only
        doc["phrases"][0]["segments"][2]["options"][2]["contents"]["fr"] = [
            {"t": "lit", "v": "sur les pentes raides"}
        ]
        findings = _lint_doc(doc)
        assert [(f.code, f.path) for f in findings] == [("SLOT_MISMATCH", "P-AVAL/s3/o3")]

    def test_dangling_slot(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        for lang in ("de", "fr", "it"):
            doc["phrases"][0]["segments"][3]["options"][0]["contents"][lang] = [
                {"t": "slot", "v": "ghost"}
            ]
        doc["phrases"][0]["segments"][3]["options"][0]["contents"]["en"] = [
            {"t": "slot", "v": "ghost"}
        ]
        findings = _lint_doc(doc)
        dangling = [f for f in findings if f.code == "DANGLING_SLOT"]
        assert dangling and all(f.severity == SEVERITY_ERROR for f in dangling)
        assert dangling[0].path == "P-AVAL/s4/o1/de.whole[0]"

    def test_depth_three_exceeded(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        # chain: option -> on_steep -> deeper -> deepest  (three levels)
        doc["subSegments"]["deepest"] = {
            "label": "x",
            "options": [{"id": "o", "contents": {l: [{"t": "lit", "v": "w"}] for l in ("de", "fr", "it", "en")}}],
        }
        doc["subSegments"]["deeper"] = {
            "label": "x",
            "options": [{"id": "o", "contents": {l: [{"t": "slot", "v": "deepest"}] for l in ("de", "fr", "it", "en")}}],
        }
        doc["subSegments"]["on_steep"]["options"][0]["contents"] = {
            l: [{"t": "slot", "v": "deeper"}] for l in ("de", "fr", "it", "en")
        }
        findings = _lint_doc(doc)
        assert any(f.code == "DEPTH_EXCEEDED" for f in findings)

    def test_two_levels_allowed(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        doc["subSegments"]["deeper"] = {
            "label": "x",
            "options": [{"id": "o", "contents": {l: [{"t": "lit", "v": "w"}] for l in ("de", "fr", "it", "en")}}],
        }
        doc["subSegments"]["on_steep"]["options"][0]["contents"] = {
            l: [{"t": "slot", "v": "deeper"}] for l in ("de", "fr", "it", "en")
        }
        assert _lint_doc(doc) == []

    def test_cycle(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        doc["subSegments"]["loop"] = {
            "label": "x",
            "options": [{"id": "o", "contents": {l: [{"t": "slot", "v": "loop"}] for l in ("de", "fr", "it", "en")}}],
        }
        doc["phrases"][0]["segments"][3]["options"][1]["contents"] = {
            l: [{"t": "slot", "v": "loop"}] for l in ("de", "fr", "it", "en")
        }
        findings = _lint_doc(doc)
        assert any(f.code == "CYCLE" and f.path == "sub:loop" for f in findings)

    def test_segment_limit(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        phrase = doc["phrases"][0]
        base = phrase["segments"][1]
        while len(phrase["segments"]) <= 10:
            clone = json.loads(json.dumps(base))
            clone["id"] = f"extra{len(phrase['segments'])}"
            phrase["segments"].append(clone)
        n = len(phrase["segments"])
        for lang in phrase["layouts"]:
            suffix = [str(i + 1) for i in range(5, n)]
            phrase["layouts"][lang] = phrase["layouts"][lang] + suffix
        findings = _lint_doc(doc)
        assert any(f.code == "SEGMENT_LIMIT" for f in findings)

    def test_agreement_violation(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        doc["phrases"][0]["segments"][0]["options"][1]["agreement"]["fr"] = {
            "gender": "m",
            "number": "sg",
        }
        findings = _lint_doc(doc)
        assert [(f.code, f.path) for f in findings] == [
            ("AGREEMENT_VIOLATION", "P-AVAL/s1")
        ]

    def test_unused_subsegment_is_warning(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        doc["subSegments"]["lonely"] = {
            "label": "x",
            "options": [{"id": "o", "contents": {l: [{"t": "lit", "v": "w"}] for l in ("de", "fr", "it", "en")}}],
        }
        findings = _lint_doc(doc)
        assert [(f.code, f.severity, f.path) for f in findings] == [
            ("UNUSED_SUBSEGMENT", SEVERITY_WARNING, "sub:lonely")
        ]
        # warnings do not fail strict parsing
        parse_catalogue(json.dumps(doc))

    def test_unannotated_only_in_strict_mode(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        del doc["phrases"][0]["segments"][0]["options"][2]["agreement"]
        catalogue = parse_catalogue(json.dumps(doc))
        assert lint(catalogue) == []
        strict = lint(catalogue, strict=True)
        assert [(f.code, f.severity, f.path) for f in strict] == [
            ("UNANNOTATED", SEVERITY_WARNING, "P-AVAL/s1/o3")
        ]


class TestFindingHygiene:
    def test_errors_sort_before_warnings_and_paths_resolve(self, fig2_bytes):
        doc = _doc(fig2_bytes)
        doc["subSegments"]["lonely"] = {
            "label": "x",
            "options": [{"id": "o", "contents": {l: [{"t": "lit", "v": "w"}] for l in ("de", "fr", "it", "en")}}],
        }
        del doc["phrases"][0]["segments"][1]["options"][0]["contents"]["en"]
        catalogue = parse_catalogue(json.dumps(doc), strict=False)
        findings = lint(catalogue)
        severities = [f.severity for f in findings]
        assert severities == sorted(severities, key=(SEVERITY_ERROR, SEVERITY_WARNING).index)
        for finding in findings:
            resolve_path(catalogue, finding.path)  # must not raise

    def test_random_catalogues_lint_clean(self):
        rng = random.Random(7)
        for _ in range(40):
            assert lint(random_catalogue(rng)) == []
