"""Data model for the multilingual phrase catalogue.

A catalogue holds phrases; a phrase is a fixed grid of segments, each
offering options; option texts are stored per language and may embed
slots that point at reusable sub-segments (nesting at most two levels).
Per language, a phrase has a layout: a fixed ordering of its segments in
which any segment may be split into an a-part and a b-part (never in the
source language).

Dataclasses enforce cheap local invariants at construction time
(identifier syntax, Unicode normalization, non-empty option lists).
Catalogue-wide invariants (layout coverage, slot multisets, nesting
depth, translations present) are checked by :mod:`phrasecat.lint`, which
the strict parser runs before accepting a document.
"""

from __future__ import annotations

import re
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Union

from .errors import UnknownPhraseError

LanguageCode = str

# Identifiers appear inside selection paths, so the path separators are
# banned from them.
_ID_RE = re.compile(r"^[A-Za-z0-9_.\-]+$")

PART_WHOLE = "whole"
PART_A = "a"
PART_B = "b"

GENDERS = ("m", "f", "n")
NUMBERS = ("sg", "pl")

MAX_SEGMENTS = 10
MAX_SLOT_DEPTH = 2


def check_identifier(value: str, what: str) -> str:
    if not isinstance(value, str) or not _ID_RE.match(value):
        raise ValueError(f"{what} must match {_ID_RE.pattern!r}, got {value!r}")
    return value


@dataclass(frozen=True)
class Lit:
    """A literal text token, stored NFC-normalized.

    Outer whitespace is rejected and internal whitespace runs collapse
    to single spaces, so joining literals can never produce double
    spaces anywhere in a rendered sentence.
    """

    text: str

    def __post_init__(self) -> None:
        norm = unicodedata.normalize("NFC", self.text)
        if norm != norm.strip():
            raise ValueError(f"literal text has leading/trailing whitespace: {norm!r}")
        object.__setattr__(self, "text", " ".join(norm.split()) if norm else norm)


@dataclass(frozen=True)
class Slot:
    """A reference to a sub-segment whose chosen option fills this position."""

    sub_segment_id: str

    def __post_init__(self) -> None:
        check_identifier(self.sub_segment_id, "slot sub-segment id")


Token = Union[Lit, Slot]
TokenSeq = "tuple[Token, ...]"


def _check_token_seq(tokens: tuple) -> None:
    for tok in tokens:
        if not isinstance(tok, (Lit, Slot)):
            raise ValueError(f"not a token: {tok!r}")
    # An empty literal is only legal as the entire sequence.
    if any(isinstance(t, Lit) and t.text == "" for t in tokens) and len(tokens) != 1:
        raise ValueError("empty literal must be the only token of its sequence")


@dataclass(frozen=True)
class OptionContent:
    """One language's text for an option: a single token sequence, or an
    (a, b) pair where the owning segment is split in that language."""

    parts: "tuple[tuple[Token, ...], ...]"

    def __post_init__(self) -> None:
        if len(self.parts) not in (1, 2):
            raise ValueError("option content must have one part or an (a, b) pair")
        for part in self.parts:
            _check_token_seq(part)

    @classmethod
    def unsplit(cls, tokens: "tuple[Token, ...] | list") -> "OptionContent":
        return cls(parts=(tuple(tokens),))

    @classmethod
    def split(cls, a: "tuple[Token, ...] | list", b: "tuple[Token, ...] | list") -> "OptionContent":
        return cls(parts=(tuple(a), tuple(b)))

    @property
    def is_split(self) -> bool:
        return len(self.parts) == 2

    def part(self, part_name: str) -> "tuple[Token, ...]":
        if part_name == PART_WHOLE:
            if self.is_split:
                raise ValueError("content is split; no whole part")
            return self.parts[0]
        if part_name in (PART_A, PART_B):
            if not self.is_split:
                raise ValueError(f"content is not split; no {part_name} part")
            return self.parts[0 if part_name == PART_A else 1]
        raise ValueError(f"unknown part {part_name!r}")

    def all_tokens(self) -> "tuple[Token, ...]":
        """Tokens in canonical order: part a then part b (or the whole)."""
        out: list = []
        for part in self.parts:
            out.extend(part)
        return tuple(out)

    def slot_multiset(self) -> "Counter[str]":
        return Counter(t.sub_segment_id for t in self.all_tokens() if isinstance(t, Slot))


@dataclass(frozen=True)
class Agreement:
    """Declared gender/number of an option's noun phrase in one language."""

    gender: str
    number: str

    def __post_init__(self) -> None:
        if self.gender not in GENDERS:
            raise ValueError(f"gender must be one of {GENDERS}, got {self.gender!r}")
        if self.number not in NUMBERS:
            raise ValueError(f"number must be one of {NUMBERS}, got {self.number!r}")


@dataclass(frozen=True)
class Option:
    id: str
    contents: "dict[str, OptionContent]"
    antecedent_hint: Optional[str] = None
    agreement: "dict[str, Agreement]" = field(default_factory=dict)

    def __post_init__(self) -> None:
        check_identifier(self.id, "option id")
        if self.antecedent_hint is not None and not self.antecedent_hint.strip():
            raise ValueError("antecedent hint must be nonempty when present")


def _check_option_group(options: tuple, what: str) -> None:
    if not options:
        raise ValueError(f"{what} must have at least one option")
    ids = [o.id for o in options]
    if len(set(ids)) != len(ids):
        raise ValueError(f"duplicate option ids in {what}: {ids}")


@dataclass(frozen=True)
class Segment:
    id: str
    label: str
    options: "tuple[Option, ...]"
    uniform_agreement: bool = False

    def __post_init__(self) -> None:
        check_identifier(self.id, "segment id")
        _check_option_group(self.options, f"segment {self.id}")

    def option(self, option_id: str) -> Optional[Option]:
        for opt in self.options:
            if opt.id == option_id:
                return opt
        return None


@dataclass(frozen=True)
class SubSegment:
    id: str
    label: str
    options: "tuple[Option, ...]"

    def __post_init__(self) -> None:
        check_identifier(self.id, "sub-segment id")
        _check_option_group(self.options, f"sub-segment {self.id}")

    def option(self, option_id: str) -> Optional[Option]:
        for opt in self.options:
            if opt.id == option_id:
                return opt
        return None


@dataclass(frozen=True)
class LayoutEntry:
    segment_index: int
    part: str

    def __post_init__(self) -> None:
        if self.segment_index < 0:
            raise ValueError("segment index must be >= 0")
        if self.part not in (PART_WHOLE, PART_A, PART_B):
            raise ValueError(f"unknown layout part {self.part!r}")


@dataclass(frozen=True)
class Layout:
    entries: "tuple[LayoutEntry, ...]"

    @classmethod
    def identity(cls, segment_count: int) -> "Layout":
        return cls(tuple(LayoutEntry(i, PART_WHOLE) for i in range(segment_count)))

    def is_identity(self, segment_count: int) -> bool:
        return self == Layout.identity(segment_count)

    def split_indices(self) -> "set[int]":
        return {e.segment_index for e in self.entries if e.part != PART_WHOLE}

    def coverage_problems(self, segment_count: int) -> "list[str]":
        """Violations of the permutation-with-splits rule, as messages."""
        problems: list[str] = []
        by_index: dict[int, list[str]] = {}
        for entry in self.entries:
            if entry.segment_index >= segment_count:
                problems.append(f"entry for nonexistent segment index {entry.segment_index}")
                continue
            by_index.setdefault(entry.segment_index, []).append(entry.part)
        for index in range(segment_count):
            parts = by_index.pop(index, [])
            if sorted(parts) not in ([PART_WHOLE], [PART_A, PART_B]):
                problems.append(
                    f"segment {index + 1} must appear once whole or once each as a/b, got {parts}"
                )
        return problems


@dataclass(frozen=True)
class Phrase:
    id: str
    label: str
    segments: "tuple[Segment, ...]"
    layouts: "dict[str, Layout]"

    def __post_init__(self) -> None:
        check_identifier(self.id, "phrase id")
        ids = [s.id for s in self.segments]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate segment ids in phrase {self.id}: {ids}")

    def segment(self, segment_id: str) -> Optional[Segment]:
        for seg in self.segments:
            if seg.id == segment_id:
                return seg
        return None


@dataclass(frozen=True)
class Catalogue:
    version: int
    source_language: LanguageCode
    languages: "tuple[LanguageCode, ...]"
    sub_segments: "dict[str, SubSegment]"
    phrases: "tuple[Phrase, ...]"

    def __post_init__(self) -> None:
        if not isinstance(self.version, int) or self.version < 0:
            raise ValueError("catalogue version must be a nonnegative integer")
        if len(self.languages) < 2:
            raise ValueError("a catalogue needs at least two languages")
        if len(set(self.languages)) != len(self.languages):
            raise ValueError(f"duplicate language codes: {self.languages}")
        for code in self.languages:
            if not code or not isinstance(code, str):
                raise ValueError(f"bad language code: {code!r}")
        if self.source_language not in self.languages:
            raise ValueError(
                f"source language {self.source_language!r} not in {self.languages}"
            )
        pids = [p.id for p in self.phrases]
        if len(set(pids)) != len(pids):
            raise ValueError(f"duplicate phrase ids: {pids}")
        for sub_id, sub in self.sub_segments.items():
            if sub.id != sub_id:
                raise ValueError(f"sub-segment keyed {sub_id!r} carries id {sub.id!r}")

    def phrase(self, phrase_id: str) -> Phrase:
        for p in self.phrases:
            if p.id == phrase_id:
                return p
        raise UnknownPhraseError(f"no phrase {phrase_id!r} in catalogue")

    def find_phrase(self, phrase_id: str) -> Optional[Phrase]:
        for p in self.phrases:
            if p.id == phrase_id:
                return p
        return None


# ---------------------------------------------------------------------------
# Slot occurrences and selection paths
# ---------------------------------------------------------------------------
#
# A slot choice is addressed by a path rooted at the segment:
#
#     <segmentId>/<optionId>/<subSegmentId>#<k>
#
# where k numbers the occurrences of that sub-segment id within the option's
# content, scanning part a before part b. Nested slot choices extend the path
# with the chosen option and the inner slot:
#
#     .../<chosenOptionId>/<subSubSegmentId>#<j>
#
# The slot multiset is identical across languages, so occurrence k in any
# language pairs with occurrence k in the source language and one choice
# covers them all.


@dataclass(frozen=True)
class SlotOccurrence:
    sub_segment_id: str
    occurrence: int


def part_slot_occurrences(content: OptionContent, part_name: str) -> "list[SlotOccurrence]":
    """Slot occurrences of one part, numbered across the whole content."""
    content.part(part_name)  # validate the part exists for this arity
    wanted_index = 1 if part_name == PART_B else 0
    counts: Counter = Counter()
    out: list[SlotOccurrence] = []
    # Iterate canonically (a then b) so numbering is independent of layout.
    for index, part in enumerate(content.parts):
        for tok in part:
            if not isinstance(tok, Slot):
                continue
            occ = counts[tok.sub_segment_id]
            counts[tok.sub_segment_id] += 1
            if index == wanted_index:
                out.append(SlotOccurrence(tok.sub_segment_id, occ))
    return out


def content_slot_occurrences(content: OptionContent) -> "list[SlotOccurrence]":
    """All slot occurrences in canonical (a then b) order."""
    counts: Counter = Counter()
    out: list[SlotOccurrence] = []
    for tok in content.all_tokens():
        if isinstance(tok, Slot):
            out.append(SlotOccurrence(tok.sub_segment_id, counts[tok.sub_segment_id]))
            counts[tok.sub_segment_id] += 1
    return out


def slot_path(parent: str, occurrence: SlotOccurrence) -> str:
    return f"{parent}/{occurrence.sub_segment_id}#{occurrence.occurrence}"


@dataclass(frozen=True)
class Selection:
    """A forecaster's complete choice tree for one phrase."""

    phrase_id: str
    choices: "dict[str, str]"
    slot_choices: "dict[str, str]" = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Selection validation
# ---------------------------------------------------------------------------

MISSING_SEGMENT_CHOICE = "MISSING_SEGMENT_CHOICE"
MISSING_SLOT_CHOICE = "MISSING_SLOT_CHOICE"
WRONG_OPTION_FOR_SEGMENT = "WRONG_OPTION_FOR_SEGMENT"
WRONG_OPTION_FOR_SLOT = "WRONG_OPTION_FOR_SLOT"
UNKNOWN_SEGMENT = "UNKNOWN_SEGMENT"
ORPHAN_SLOT_CHOICE = "ORPHAN_SLOT_CHOICE"


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    path: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    issues: "tuple[ValidationIssue, ...]"

    @property
    def ok(self) -> bool:
        return not self.issues


def validate_selection(catalogue: Catalogue, selection: Selection) -> ValidationReport:
    """Check a selection for completeness and consistency against a phrase.

    An unknown phrase id is a caller error and raises; everything else is
    reported, one issue per missing or wrong choice, addressed by path.
    """
    phrase = catalogue.phrase(selection.phrase_id)
    issues: list[ValidationIssue] = []
    live_paths: set[str] = set()
    source = catalogue.source_language

    def walk_option(option: Option, prefix: str) -> None:
        content = option.contents.get(source)
        if content is None:
            return
        for occ in content_slot_occurrences(content):
            path = slot_path(prefix, occ)
            live_paths.add(path)
            sub = catalogue.sub_segments.get(occ.sub_segment_id)
            chosen = selection.slot_choices.get(path)
            if chosen is None:
                issues.append(
                    ValidationIssue(MISSING_SLOT_CHOICE, path, "no option chosen for slot")
                )
                continue
            if sub is None:
                continue
            sub_opt = sub.option(chosen)
            if sub_opt is None:
                issues.append(
                    ValidationIssue(
                        WRONG_OPTION_FOR_SLOT,
                        path,
                        f"option {chosen!r} is not an option of sub-segment {sub.id!r}",
                    )
                )
                continue
            walk_option(sub_opt, f"{path}/{sub_opt.id}")

    for seg in phrase.segments:
        chosen = selection.choices.get(seg.id)
        if chosen is None:
            issues.append(
                ValidationIssue(MISSING_SEGMENT_CHOICE, seg.id, "no option chosen for segment")
            )
            continue
        opt = seg.option(chosen)
        if opt is None:
            issues.append(
                ValidationIssue(
                    WRONG_OPTION_FOR_SEGMENT,
                    f"{seg.id}/{chosen}",
                    f"option {chosen!r} is not an option of segment {seg.id!r}",
                )
            )
            continue
        walk_option(opt, f"{seg.id}/{opt.id}")

    segment_ids = {s.id for s in phrase.segments}
    for seg_id in sorted(set(selection.choices) - segment_ids):
        issues.append(
            ValidationIssue(UNKNOWN_SEGMENT, seg_id, f"phrase has no segment {seg_id!r}")
        )
    for path in sorted(set(selection.slot_choices) - live_paths):
        issues.append(
            ValidationIssue(
                ORPHAN_SLOT_CHOICE, path, "slot choice does not match any live slot occurrence"
            )
        )

    issues.sort(key=lambda i: (i.path, i.code))
    return ValidationReport(tuple(issues))


# ---------------------------------------------------------------------------
# Catalogue element paths (used by lint findings)
# ---------------------------------------------------------------------------
#
#   ""                              the catalogue itself
#   sub:<subId>                     a sub-segment
#   sub:<subId>/<optId>             a sub-segment option
#   <phraseId>                      a phrase
#   <phraseId>/layout:<lang>        a phrase layout
#   <phraseId>/<segId>              a segment
#   <phraseId>/<segId>/<optId>      an option
#   <option path>/<lang>.<part>[i]  a token


_TOKEN_SUFFIX_RE = re.compile(r"^(?P<lang>[^.]+)\.(?P<part>whole|a|b)\[(?P<idx>\d+)\]$")


def resolve_path(catalogue: Catalogue, path: str):
    """Return the catalogue element a finding path points at.

    Raises KeyError when the path does not resolve; tests use this to
    guarantee no diagnostic ever dangles.
    """
    if path == "":
        return catalogue

    def descend_option(option: Option, rest: "list[str]"):
        if not rest:
            return option
        if len(rest) != 1:
            raise KeyError(f"trailing path components {rest!r}")
        m = _TOKEN_SUFFIX_RE.match(rest[0])
        if not m:
            raise KeyError(f"bad token locator {rest[0]!r}")
        content = option.contents.get(m.group("lang"))
        if content is None:
            raise KeyError(f"option has no content for {m.group('lang')!r}")
        tokens = content.part(m.group("part"))
        idx = int(m.group("idx"))
        if idx >= len(tokens):
            raise KeyError(f"token index {idx} out of range")
        return tokens[idx]

    parts = path.split("/")
    head = parts[0]
    if head.startswith("sub:"):
        sub = catalogue.sub_segments.get(head[4:])
        if sub is None:
            raise KeyError(f"no sub-segment {head[4:]!r}")
        if len(parts) == 1:
            return sub
        opt = sub.option(parts[1])
        if opt is None:
            raise KeyError(f"no option {parts[1]!r} in sub-segment {sub.id!r}")
        return descend_option(opt, parts[2:])

    phrase = catalogue.find_phrase(head)
    if phrase is None:
        raise KeyError(f"no phrase {head!r}")
    if len(parts) == 1:
        return phrase
    if parts[1].startswith("layout:"):
        lang = parts[1][len("layout:"):]
        if lang not in phrase.layouts:
            raise KeyError(f"phrase {phrase.id!r} has no layout for {lang!r}")
        if len(parts) != 2:
            raise KeyError(f"trailing path components {parts[2:]!r}")
        return phrase.layouts[lang]
    seg = phrase.segment(parts[1])
    if seg is None:
        raise KeyError(f"no segment {parts[1]!r} in phrase {phrase.id!r}")
    if len(parts) == 2:
        return seg
    opt = seg.option(parts[2])
    if opt is None:
        raise KeyError(f"no option {parts[2]!r} in segment {seg.id!r}")
    return descend_option(opt, parts[3:])


def iter_options(catalogue: Catalogue) -> "Iterator[tuple[str, Option]]":
    """Yield (path, option) for every option of every phrase and sub-segment."""
    for phrase in catalogue.phrases:
        for seg in phrase.segments:
            for opt in seg.options:
                yield f"{phrase.id}/{seg.id}/{opt.id}", opt
    for sub_id in sorted(catalogue.sub_segments):
        for opt in catalogue.sub_segments[sub_id].options:
            yield f"sub:{sub_id}/{opt.id}", opt
