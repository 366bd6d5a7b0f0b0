"""Surface realization of selections.

The pipeline is deliberately minimal: pick each segment's chosen option
text for the target language, substitute slot choices recursively,
arrange the parts in the language's fixed layout order, join everything
with single spaces (dropping empty pieces), and uppercase the first
letter. No morphology, no punctuation handling, no post-processing: all
language-specific difficulty lives in the catalogue texts themselves.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import SelectionInvalid, UnknownLanguageError
from .model import (
    Catalogue,
    Lit,
    Option,
    Selection,
    Slot,
    part_slot_occurrences,
    slot_path,
    validate_selection,
)


@dataclass(frozen=True)
class RenderedSentence:
    language: str
    text: str


def join_parts(parts: "Iterable[str]") -> str:
    """Join nonempty pieces with exactly one space; empty pieces vanish."""
    return " ".join(p for p in parts if p)


def capitalize_sentence(text: str) -> str:
    """Uppercase the first character iff it is a lowercase letter."""
    if text and text[0].islower():
        return text[0].upper() + text[1:]
    return text


def render(catalogue: Catalogue, selection: Selection, language: str) -> RenderedSentence:
    """Realize a complete selection in one language."""
    if language not in catalogue.languages:
        raise UnknownLanguageError(f"language {language!r} not in catalogue")
    report = validate_selection(catalogue, selection)
    if not report.ok:
        raise SelectionInvalid(report)
    return RenderedSentence(language, _render_unchecked(catalogue, selection, language))


def render_all(catalogue: Catalogue, selection: Selection) -> "dict[str, RenderedSentence]":
    """Realize a selection in every catalogue language; atomic on failure."""
    report = validate_selection(catalogue, selection)
    if not report.ok:
        raise SelectionInvalid(report)
    return {
        lang: RenderedSentence(lang, _render_unchecked(catalogue, selection, lang))
        for lang in catalogue.languages
    }


def _render_unchecked(catalogue: Catalogue, selection: Selection, language: str) -> str:
    phrase = catalogue.phrase(selection.phrase_id)
    parts: list[str] = []
    for entry in phrase.layouts[language].entries:
        segment = phrase.segments[entry.segment_index]
        option = segment.option(selection.choices[segment.id])
        assert option is not None
        parts.append(
            _realize_part(catalogue, selection, language, option, f"{segment.id}/{option.id}", entry.part)
        )
    return capitalize_sentence(join_parts(parts))


def _realize_part(
    catalogue: Catalogue,
    selection: Selection,
    language: str,
    option: Option,
    prefix: str,
    part_name: str,
) -> str:
    content = option.contents[language]
    occurrences = iter(part_slot_occurrences(content, part_name))
    pieces: list[str] = []
    for token in content.part(part_name):
        if isinstance(token, Lit):
            pieces.append(token.text)
        else:
            occ = next(occurrences)
            pieces.append(_realize_slot(catalogue, selection, language, slot_path(prefix, occ)))
    return join_parts(pieces)


def _realize_slot(catalogue: Catalogue, selection: Selection, language: str, path: str) -> str:
    sub_id = path.rsplit("/", 1)[-1].split("#")[0]
    sub = catalogue.sub_segments[sub_id]
    option = sub.option(selection.slot_choices[path])
    assert option is not None
    return _realize_part(catalogue, selection, language, option, f"{path}/{option.id}", "whole")
