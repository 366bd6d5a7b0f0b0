"""Phrase search over surface forms.

Under operational time pressure a forecaster types a couple of words
and needs the matching phrases instantly, so the index covers every
literal reachable from a phrase (options, sub-segments and
sub-sub-segments) in one language, folds case and diacritics, and ranks
by summed idf with a deterministic tie-break. OR semantics: any token
match surfaces the phrase; the ranking sorts out precision.
"""

from __future__ import annotations

import math
import unicodedata
from dataclasses import dataclass, field

from .errors import StaleIndexError, UnknownLanguageError
from .model import Catalogue, Lit, Slot


def fold(text: str) -> "list[str]":
    """Casefold, strip diacritics, split on non-alphanumeric runs."""
    decomposed = unicodedata.normalize("NFKD", text.casefold())
    chars = []
    for ch in decomposed:
        if unicodedata.combining(ch):
            continue
        chars.append(ch if ch.isalnum() else " ")
    return "".join(chars).split()


@dataclass(frozen=True)
class Index:
    language: str
    catalogue_version: int
    doc_count: int
    postings: "dict[str, dict[str, int]]"
    token_doc_freq: "dict[str, int]"


@dataclass(frozen=True)
class PhraseHit:
    phrase_id: str
    score: float
    matched_tokens: "list[str]" = field(default_factory=list)


def build_index(catalogue: Catalogue, language: str) -> Index:
    """Index every literal reachable from each phrase in one language."""
    if language not in catalogue.languages:
        raise UnknownLanguageError(f"language {language!r} not in catalogue")
    postings: dict[str, dict[str, int]] = {}
    for phrase in catalogue.phrases:
        counts: dict[str, int] = {}
        for option in _reachable_options(catalogue, phrase):
            content = option.contents.get(language)
            if content is None:
                continue
            for tok in content.all_tokens():
                if not isinstance(tok, Lit):
                    continue
                for word in fold(tok.text):
                    counts[word] = counts.get(word, 0) + 1
        for word, n in counts.items():
            postings.setdefault(word, {})[phrase.id] = n
    return Index(
        language=language,
        catalogue_version=catalogue.version,
        doc_count=len(catalogue.phrases),
        postings=postings,
        token_doc_freq={word: len(per_phrase) for word, per_phrase in postings.items()},
    )


def _reachable_options(catalogue: Catalogue, phrase):
    seen_subs: set[str] = set()
    stack: list[str] = []
    for seg in phrase.segments:
        for opt in seg.options:
            yield opt
            stack.extend(_slot_refs(opt))
    while stack:
        sub_id = stack.pop()
        if sub_id in seen_subs or sub_id not in catalogue.sub_segments:
            continue
        seen_subs.add(sub_id)
        for opt in catalogue.sub_segments[sub_id].options:
            yield opt
            stack.extend(_slot_refs(opt))


def _slot_refs(option) -> "list[str]":
    refs = []
    for content in option.contents.values():
        for tok in content.all_tokens():
            if isinstance(tok, Slot):
                refs.append(tok.sub_segment_id)
    return refs


def idf(index: Index, token: str) -> float:
    freq = index.token_doc_freq.get(token)
    if not freq:
        return 0.0
    return math.log(1.0 + index.doc_count / freq)


def search(
    index: Index,
    query: str,
    k: int,
    expected_version: "int | None" = None,
) -> "list[PhraseHit]":
    """Rank phrases matching at least one folded query token.

    Score is the sum of idf over the distinct query tokens a phrase
    contains; ties break on ascending phrase id so repeated queries
    return exactly the same ranking. ``expected_version`` guards against
    querying an index built from an older catalogue.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if expected_version is not None and expected_version != index.catalogue_version:
        raise StaleIndexError(
            f"index built from catalogue version {index.catalogue_version}, "
            f"expected {expected_version}"
        )
    query_tokens: list[str] = []
    for tok in fold(query):
        if tok not in query_tokens:
            query_tokens.append(tok)

    scores: dict[str, float] = {}
    matched: dict[str, list[str]] = {}
    for tok in query_tokens:
        weight = idf(index, tok)
        for phrase_id in index.postings.get(tok, {}):
            scores[phrase_id] = scores.get(phrase_id, 0.0) + weight
            matched.setdefault(phrase_id, []).append(tok)

    ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
    return [
        PhraseHit(phrase_id=pid, score=score, matched_tokens=matched[pid])
        for pid, score in ranked[:k]
    ]
