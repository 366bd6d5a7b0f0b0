"""Exact counting and enumeration of the sentence space.

The number of complete selections is a pure combinatorial product:
every segment contributes the sum over its options of the product of
the selection counts of each slot the option embeds. Python integers
keep the arithmetic exact at any scale, which matters because a real
catalogue reaches into the trillions.

Enumeration is a bijection between ``range(count)`` and selections,
lexicographic by segment order, then option order, then slot order,
so it can resume from an opaque cursor without gaps or duplicates.
"""

from __future__ import annotations

from .errors import InvalidCursorError
from .model import (
    Catalogue,
    Option,
    Phrase,
    Selection,
    content_slot_occurrences,
    slot_path,
)


def count_selections(catalogue: Catalogue, phrase_id: "str | None" = None) -> int:
    """Exact number of complete selections, catalogue-wide or per phrase."""
    sub_counts = _sub_counts(catalogue)
    if phrase_id is not None:
        return _phrase_count(catalogue, catalogue.phrase(phrase_id), sub_counts)
    return sum(_phrase_count(catalogue, p, sub_counts) for p in catalogue.phrases)


def _sub_counts(catalogue: Catalogue) -> "dict[str, int]":
    counts: dict[str, int] = {}

    def count(sub_id: str) -> int:
        if sub_id not in counts:
            sub = catalogue.sub_segments[sub_id]
            counts[sub_id] = sum(_option_weight(opt, catalogue, counts, count) for opt in sub.options)
        return counts[sub_id]

    for sub_id in catalogue.sub_segments:
        count(sub_id)
    return counts


def _option_weight(option: Option, catalogue: Catalogue, counts, count_fn=None) -> int:
    content = option.contents[catalogue.source_language]
    weight = 1
    for occ in content_slot_occurrences(content):
        if count_fn is not None:
            weight *= count_fn(occ.sub_segment_id)
        else:
            weight *= counts[occ.sub_segment_id]
    return weight


def _segment_weights(segment, catalogue: Catalogue, sub_counts) -> "list[int]":
    return [_option_weight(opt, catalogue, sub_counts) for opt in segment.options]


def _phrase_count(catalogue: Catalogue, phrase: Phrase, sub_counts) -> int:
    total = 1
    for seg in phrase.segments:
        total *= sum(_segment_weights(seg, catalogue, sub_counts))
    return total


def selection_at(
    catalogue: Catalogue, phrase_id: str, index: int, _sub_count_cache=None
) -> Selection:
    """The ``index``-th selection of a phrase in lexicographic order."""
    phrase = catalogue.phrase(phrase_id)
    sub_counts = _sub_count_cache if _sub_count_cache is not None else _sub_counts(catalogue)
    total = _phrase_count(catalogue, phrase, sub_counts)
    if not 0 <= index < total:
        raise IndexError(f"selection index {index} out of range for {total} selections")

    choices: dict[str, str] = {}
    slot_choices: dict[str, str] = {}

    segment_totals = [
        sum(_segment_weights(seg, catalogue, sub_counts)) for seg in phrase.segments
    ]
    remainder = index
    digits: list[int] = []
    for seg_index in range(len(phrase.segments)):
        place = 1
        for t in segment_totals[seg_index + 1:]:
            place *= t
        digits.append(remainder // place)
        remainder %= place

    for seg, digit in zip(phrase.segments, digits):
        weights = _segment_weights(seg, catalogue, sub_counts)
        opt_index, inner = _pick(weights, digit)
        option = seg.options[opt_index]
        choices[seg.id] = option.id
        _decode_option_slots(
            catalogue, option, f"{seg.id}/{option.id}", inner, sub_counts, slot_choices
        )

    return Selection(phrase_id=phrase_id, choices=choices, slot_choices=slot_choices)


def _pick(weights: "list[int]", digit: int) -> "tuple[int, int]":
    """Locate which weighted bucket a digit falls into."""
    cumulative = 0
    for i, w in enumerate(weights):
        if digit < cumulative + w:
            return i, digit - cumulative
        cumulative += w
    raise AssertionError("digit out of range")


def _decode_option_slots(
    catalogue: Catalogue,
    option: Option,
    prefix: str,
    remainder: int,
    sub_counts,
    out: "dict[str, str]",
) -> None:
    content = option.contents[catalogue.source_language]
    occurrences = content_slot_occurrences(content)
    weights = [sub_counts[occ.sub_segment_id] for occ in occurrences]
    for i, occ in enumerate(occurrences):
        place = 1
        for w in weights[i + 1:]:
            place *= w
        digit = remainder // place
        remainder %= place
        sub = catalogue.sub_segments[occ.sub_segment_id]
        sub_weights = [_option_weight(o, catalogue, sub_counts) for o in sub.options]
        opt_index, inner = _pick(sub_weights, digit)
        sub_option = sub.options[opt_index]
        path = slot_path(prefix, occ)
        out[path] = sub_option.id
        _decode_option_slots(
            catalogue, sub_option, f"{path}/{sub_option.id}", inner, sub_counts, out
        )


# ---------------------------------------------------------------------------
# Cursored enumeration
# ---------------------------------------------------------------------------

def _cursor_token(catalogue: Catalogue, phrase_id: str, next_index: int) -> str:
    return f"v{catalogue.version}:{phrase_id}:{next_index}"


def _parse_cursor(catalogue: Catalogue, phrase_id: str, cursor: str) -> int:
    parts = cursor.split(":")
    if len(parts) != 3 or not parts[0].startswith("v"):
        raise InvalidCursorError(f"malformed cursor {cursor!r}")
    version_str, cursor_phrase, index_str = parts[0][1:], parts[1], parts[2]
    if not version_str.isdigit() or not index_str.isdigit():
        raise InvalidCursorError(f"malformed cursor {cursor!r}")
    if int(version_str) != catalogue.version:
        raise InvalidCursorError(
            f"cursor is for catalogue version {version_str}, current is {catalogue.version}"
        )
    if cursor_phrase != phrase_id:
        raise InvalidCursorError(f"cursor is for phrase {cursor_phrase!r}, not {phrase_id!r}")
    return int(index_str)


def enumerate_selections(
    catalogue: Catalogue,
    phrase_id: str,
    limit: int,
    cursor: "str | None" = None,
) -> "tuple[list[Selection], str | None]":
    """Enumerate up to ``limit`` selections, resumable via the returned cursor.

    A ``None`` cursor in the result means the sweep is exhausted. Successive
    calls with returned cursors cover the whole space without gaps or
    duplicates; the total over a full sweep equals :func:`count_selections`.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    phrase = catalogue.phrase(phrase_id)
    sub_counts = _sub_counts(catalogue)
    total = _phrase_count(catalogue, phrase, sub_counts)
    start = 0 if cursor is None else _parse_cursor(catalogue, phrase_id, cursor)
    if start > total:
        raise InvalidCursorError(f"cursor index {start} beyond {total} selections")
    stop = min(start + limit, total)
    selections = [
        selection_at(catalogue, phrase_id, i, _sub_count_cache=sub_counts)
        for i in range(start, stop)
    ]
    next_cursor = None if stop >= total else _cursor_token(catalogue, phrase_id, stop)
    return selections, next_cursor
