from __future__ import annotations

import json
import random

import pytest

from catgen import random_catalogue
from phrasecat import (
    AddPhrase,
    AddSegmentOption,
    Agreement,
    EditRejected,
    Layout,
    LayoutEntry,
    Lit,
    Option,
    OptionContent,
    Phrase,
    Segment,
    SetAgreement,
    SetLayout,
    SetOptionContent,
    SplitSegment,
    apply_edit,
    parse_catalogue,
    render,
)
from phrasecat.catfile import layout_to_json
from phrasecat.lint import lint


def _unsplit_fig2(fig2_bytes):
    """Fig. 2 catalogue with English segment 3 NOT yet split."""
    doc = json.loads(fig2_bytes)
    phrase = doc["phrases"][0]
    for opt in phrase["segments"][2]["options"]:
        en = opt["contents"]["en"]
        opt["contents"]["en"] = en["a"] + en["b"]
    phrase["layouts"]["en"] = ["1", "2", "3", "4", "5"]
    return parse_catalogue(json.dumps(doc))


class TestSplitSegment:
    def test_split_then_reorder_reproduces_fig2(self, fig2_bytes, fig2, row3_selection):
        catalogue = _unsplit_fig2(fig2_bytes)
        partitions = {}
        for opt in catalogue.phrase("P-AVAL").segments[2].options:
            tokens = opt.contents["en"].parts[0]
            partitions[opt.id] = (tokens, ())
        split = apply_edit(catalogue, SplitSegment("P-AVAL", "en", 2, partitions))
        assert split.version == catalogue.version + 1
        phrase = split.phrase("P-AVAL")
        assert layout_to_json(phrase.layouts["en"]) == ["1", "2", "3a", "3b", "4", "5"]
        for opt in phrase.segments[2].options:
            assert opt.contents["en"].is_split

        # fix up option o2: "also" belongs in part b, then move 3a to the front
        split = apply_edit(
            split,
            SetOptionContent(
                "P-AVAL/s3/o2", "en", OptionContent.split((), (Lit("also"),))
            ),
        )
        target = Layout(
            tuple(
                LayoutEntry(i, p)
                for i, p in [(2, "a"), (0, "whole"), (1, "whole"), (2, "b"), (3, "whole"), (4, "whole")]
            )
        )
        final = apply_edit(split, SetLayout("P-AVAL", "en", target))
        assert layout_to_json(final.phrase("P-AVAL").layouts["en"]) == [
            "3a", "1", "2", "3b", "4", "5",
        ]
        assert (
            render(final, row3_selection, "en").text
            == render(fig2, row3_selection, "en").text
        )

    def test_split_source_language_rejected(self, fig2_bytes):
        catalogue = _unsplit_fig2(fig2_bytes)
        partitions = {
            opt.id: (opt.contents["de"].parts[0], ())
            for opt in catalogue.phrase("P-AVAL").segments[2].options
        }
        with pytest.raises(EditRejected, match="source"):
            apply_edit(catalogue, SplitSegment("P-AVAL", "de", 2, partitions))

    def test_split_already_split_rejected(self, fig2):
        partitions = {
            opt.id: ((), ()) for opt in fig2.phrase("P-AVAL").segments[2].options
        }
        with pytest.raises(EditRejected, match="already split"):
            apply_edit(fig2, SplitSegment("P-AVAL", "en", 2, partitions))

    def test_partition_must_cover_options(self, fig2_bytes):
        catalogue = _unsplit_fig2(fig2_bytes)
        with pytest.raises(EditRejected, match="partition"):
            apply_edit(catalogue, SplitSegment("P-AVAL", "en", 2, {"o1": ((), ())}))

    def test_partition_must_preserve_slots(self, fig2_bytes):
        catalogue = _unsplit_fig2(fig2_bytes)
        partitions = {
            opt.id: ((Lit("x"),), ())
            for opt in catalogue.phrase("P-AVAL").segments[2].options
        }
        with pytest.raises(EditRejected, match="SLOT_MISMATCH"):
            apply_edit(catalogue, SplitSegment("P-AVAL", "en", 2, partitions))


class TestSetLayout:
    def test_duplicate_whole_rejected(self, fig2):
        bad = Layout(
            tuple(LayoutEntry(i, "whole") for i in [0, 0, 1, 2, 3, 4])
        )
        with pytest.raises(EditRejected, match="BAD_LAYOUT_PERMUTATION"):
            apply_edit(fig2, SetLayout("P-AVAL", "fr", bad))

    def test_dropping_a_segment_rejected(self, fig2):
        bad = Layout(tuple(LayoutEntry(i, "whole") for i in range(4)))
        with pytest.raises(EditRejected, match="BAD_LAYOUT_PERMUTATION"):
            apply_edit(fig2, SetLayout("P-AVAL", "fr", bad))

    def test_source_reorder_rejected(self, fig2):
        bad = Layout(tuple(LayoutEntry(i, "whole") for i in [1, 0, 2, 3, 4]))
        with pytest.raises(EditRejected, match="BAD_SOURCE_LAYOUT"):
            apply_edit(fig2, SetLayout("P-AVAL", "de", bad))

    def test_reorder_target_language_ok(self, fig2):
        new = Layout(tuple(LayoutEntry(i, "whole") for i in [4, 0, 1, 2, 3]))
        edited = apply_edit(fig2, SetLayout("P-AVAL", "fr", new))
        assert layout_to_json(edited.phrase("P-AVAL").layouts["fr"]) == ["5", "1", "2", "3", "4"]
        assert edited.version == fig2.version + 1
        assert fig2.phrase("P-AVAL").layouts["fr"] != edited.phrase("P-AVAL").layouts["fr"]


class TestOtherCommands:
    def test_set_option_content_slot_mismatch_rejected(self, fig2):
        with pytest.raises(EditRejected, match="SLOT_MISMATCH"):
            apply_edit(
                fig2,
                SetOptionContent(
                    "P-AVAL/s3/o3", "fr", OptionContent.unsplit((Lit("sans pente"),))
                ),
            )

    def test_set_option_content_ok(self, fig2):
        edited = apply_edit(
            fig2,
            SetOptionContent("P-AVAL/s5/o1", "fr", OptionContent.unsplit((Lit("devenir très grandes."),))),
        )
        opt = edited.phrase("P-AVAL").segments[4].option("o1")
        assert opt.contents["fr"].parts[0][0].text == "devenir très grandes."

    def test_set_agreement_conflict_rejected(self, fig2):
        with pytest.raises(EditRejected, match="AGREEMENT_VIOLATION"):
            apply_edit(
                fig2,
                SetAgreement(
                    "P-AVAL/s1/o2",
                    {"fr": Agreement(gender="m", number="sg")},
                ),
            )

    def test_add_phrase_duplicate_id_rejected(self, fig2):
        with pytest.raises(EditRejected, match="already exists"):
            apply_edit(fig2, AddPhrase(fig2.phrases[0]))

    def test_add_phrase_needs_all_layouts(self, fig2):
        phrase = Phrase(
            id="P-NEW",
            label="x",
            segments=(
                Segment(
                    id="s1",
                    label="",
                    options=(
                        Option(
                            id="o1",
                            contents={
                                lang: OptionContent.unsplit((Lit("x"),))
                                for lang in ("de", "fr")
                            },
                        ),
                    ),
                ),
            ),
            layouts={"de": Layout.identity(1)},
        )
        with pytest.raises(EditRejected):
            apply_edit(fig2, AddPhrase(phrase))

    def test_add_valid_phrase(self, fig2):
        phrase = Phrase(
            id="P-NEW",
            label="drift",
            segments=(
                Segment(
                    id="s1",
                    label="",
                    options=(
                        Option(
                            id="o1",
                            contents={
                                lang: OptionContent.unsplit((Lit("Triebschnee beachten."),))
                                for lang in fig2.languages
                            },
                        ),
                    ),
                ),
            ),
            layouts={lang: Layout.identity(1) for lang in fig2.languages},
        )
        edited = apply_edit(fig2, AddPhrase(phrase))
        assert edited.find_phrase("P-NEW") is not None
        assert fig2.find_phrase("P-NEW") is None  # original untouched

    def test_add_segment_option(self, fig2):
        option = Option(
            id="o9",
            contents={lang: OptionContent.unsplit((Lit("neu"),)) for lang in fig2.languages},
        )
        # segment s4 is unsplit in every language, so unsplit contents fit
        edited = apply_edit(fig2, AddSegmentOption("P-AVAL/s4", option))
        assert edited.phrase("P-AVAL").segments[3].option("o9") is not None

    def test_add_segment_option_wrong_arity_rejected(self, fig2):
        option = Option(
            id="o9",
            contents={lang: OptionContent.unsplit((Lit("neu"),)) for lang in fig2.languages},
        )
        # segment s3 is split in English; unsplit English content must be rejected
        with pytest.raises(EditRejected, match="SPLIT_MISMATCH"):
            apply_edit(fig2, AddSegmentOption("P-AVAL/s3", option))

    def test_add_sub_segment_option(self, fig2):
        option = Option(
            id="extreme",
            contents={
                "de": OptionContent.unsplit((Lit("extrem steilen"),)),
                "fr": OptionContent.unsplit((Lit("extrêmement raides"),)),
                "it": OptionContent.unsplit((Lit("estremamente ripidi"),)),
                "en": OptionContent.unsplit((Lit("on extremely steep"),)),
            },
        )
        edited = apply_edit(fig2, AddSegmentOption("sub:on_steep", option))
        assert edited.sub_segments["on_steep"].option("extreme") is not None


class TestEditSafetyFuzz:
    def test_random_edit_sequences_never_break_validity(self, fig2):
        rng = random.Random(11)
        catalogue = fig2
        applied = 0
        for _ in range(120):
            command = self._random_command(rng, catalogue)
            try:
                catalogue = apply_edit(catalogue, command)
                applied += 1
            except EditRejected:
                continue
            assert [f for f in lint(catalogue) if f.severity == "error"] == []
        assert applied >= 10

    @staticmethod
    def _random_command(rng, catalogue):
        phrase = rng.choice(catalogue.phrases)
        kind = rng.randrange(4)
        if kind == 0:
            lang = rng.choice(catalogue.languages)
            n = len(phrase.segments)
            order = list(range(n))
            rng.shuffle(order)
            entries = []
            split = phrase.layouts[lang].split_indices()
            for i in order:
                if i in split:
                    entries.append(LayoutEntry(i, "a"))
                    entries.append(LayoutEntry(i, "b"))
                else:
                    entries.append(LayoutEntry(i, "whole"))
            return SetLayout(phrase.id, lang, Layout(tuple(entries)))
        if kind == 1:
            lang = rng.choice(catalogue.languages)
            index = rng.randrange(len(phrase.segments))
            partitions = {}
            for opt in phrase.segments[index].options:
                content = opt.contents[lang]
                tokens = content.all_tokens()
                cut = rng.randint(0, len(tokens))
                partitions[opt.id] = (tokens[:cut], tokens[cut:])
            return SplitSegment(phrase.id, lang, index, partitions)
        if kind == 2:
            seg = rng.choice(phrase.segments)
            opt = rng.choice(seg.options)
            lang = rng.choice(catalogue.languages)
            words = rng.choice(["neu", "alt", "gross", "klein"])
            content = opt.contents[lang]
            tokens = tuple(
                t for t in content.all_tokens() if not isinstance(t, Lit)
            ) + (Lit(words),)
            if content.is_split:
                new = OptionContent.split(tokens, ())
            else:
                new = OptionContent.unsplit(tokens)
            return SetOptionContent(f"{phrase.id}/{seg.id}/{opt.id}", lang, new)
        seg = rng.choice(phrase.segments)
        opt = rng.choice(seg.options)
        gender = rng.choice(["m", "f", "n"])
        number = rng.choice(["sg", "pl"])
        return SetAgreement(
            f"{phrase.id}/{seg.id}/{opt.id}",
            {rng.choice(catalogue.languages): Agreement(gender=gender, number=number)},
        )
