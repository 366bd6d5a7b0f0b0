"""Editing operations for the translation workbench.

Every command is applied functionally: the input catalogue is never
touched, and the result is either a new catalogue with the version
bumped or an :class:`EditRejected` naming the violated invariant. After
the structural change the full rule set is re-checked, so no command
can ever produce an invalid catalogue.

Element paths reuse the lint grammar: ``PHRASE/SEG`` addresses a
segment, ``PHRASE/SEG/OPT`` an option, and ``sub:SUB`` / ``sub:SUB/OPT``
the sub-segment equivalents.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from .lint import error_findings
from .errors import EditRejected
from .model import (
    PART_A,
    PART_B,
    PART_WHOLE,
    Agreement,
    Catalogue,
    Layout,
    LayoutEntry,
    Option,
    OptionContent,
    Phrase,
    Segment,
    SubSegment,
)


@dataclass(frozen=True)
class SetLayout:
    phrase_id: str
    language: str
    layout: Layout


@dataclass(frozen=True)
class SplitSegment:
    """Split one segment into a/b parts for one target language.

    ``partitions`` maps every option id of the segment to its new
    (part a, part b) token sequences for that language. The two new
    layout entries take the place the whole segment held; reorder with
    :class:`SetLayout` afterwards if needed.
    """

    phrase_id: str
    language: str
    segment_index: int
    partitions: "dict[str, tuple[tuple, tuple]]"


@dataclass(frozen=True)
class SetOptionContent:
    path: str
    language: str
    content: OptionContent


@dataclass(frozen=True)
class AddPhrase:
    phrase: Phrase


@dataclass(frozen=True)
class AddSegmentOption:
    path: str
    option: Option


@dataclass(frozen=True)
class SetAgreement:
    path: str
    agreement: "dict[str, Agreement]"


EditCommand = Union[SetLayout, SplitSegment, SetOptionContent, AddPhrase, AddSegmentOption, SetAgreement]


def apply_edit(catalogue: Catalogue, command: EditCommand) -> Catalogue:
    """Apply one command, returning a new valid catalogue with version + 1."""
    if isinstance(command, SetLayout):
        edited = _set_layout(catalogue, command)
    elif isinstance(command, SplitSegment):
        edited = _split_segment(catalogue, command)
    elif isinstance(command, SetOptionContent):
        edited = _set_option_content(catalogue, command)
    elif isinstance(command, AddPhrase):
        edited = _add_phrase(catalogue, command)
    elif isinstance(command, AddSegmentOption):
        edited = _add_option(catalogue, command)
    elif isinstance(command, SetAgreement):
        edited = _set_agreement(catalogue, command)
    else:
        raise EditRejected(f"unknown edit command {type(command).__name__}")

    errors = error_findings(edited)
    if errors:
        first = errors[0]
        raise EditRejected(
            f"edit would violate {first.code} at {first.path or '<root>'}: {first.message}"
        )
    return replace(edited, version=catalogue.version + 1)


# ---------------------------------------------------------------------------
# Command implementations
# ---------------------------------------------------------------------------

def _get_phrase(catalogue: Catalogue, phrase_id: str) -> Phrase:
    phrase = catalogue.find_phrase(phrase_id)
    if phrase is None:
        raise EditRejected(f"no phrase {phrase_id!r}")
    return phrase


def _with_phrase(catalogue: Catalogue, phrase: Phrase) -> Catalogue:
    phrases = tuple(phrase if p.id == phrase.id else p for p in catalogue.phrases)
    return replace(catalogue, phrases=phrases)


def _require_language(catalogue: Catalogue, language: str) -> None:
    if language not in catalogue.languages:
        raise EditRejected(f"language {language!r} is not a catalogue language")


def _set_layout(catalogue: Catalogue, cmd: SetLayout) -> Catalogue:
    _require_language(catalogue, cmd.language)
    phrase = _get_phrase(catalogue, cmd.phrase_id)
    layouts = dict(phrase.layouts)
    layouts[cmd.language] = cmd.layout
    return _with_phrase(catalogue, replace(phrase, layouts=layouts))


def _split_segment(catalogue: Catalogue, cmd: SplitSegment) -> Catalogue:
    _require_language(catalogue, cmd.language)
    if cmd.language == catalogue.source_language:
        raise EditRejected("segments are split in target languages only, never in the source")
    phrase = _get_phrase(catalogue, cmd.phrase_id)
    if not 0 <= cmd.segment_index < len(phrase.segments):
        raise EditRejected(f"no segment index {cmd.segment_index} in phrase {phrase.id!r}")
    segment = phrase.segments[cmd.segment_index]
    layout = phrase.layouts.get(cmd.language)
    if layout is None:
        raise EditRejected(f"phrase {phrase.id!r} has no layout for {cmd.language!r}")
    if cmd.segment_index in layout.split_indices():
        raise EditRejected(
            f"segment {cmd.segment_index + 1} is already split for {cmd.language!r}"
        )

    option_ids = {o.id for o in segment.options}
    if set(cmd.partitions) != option_ids:
        raise EditRejected(
            "partition must cover exactly the segment's options; "
            f"expected {sorted(option_ids)}, got {sorted(cmd.partitions)}"
        )

    new_options = []
    for opt in segment.options:
        part_a, part_b = cmd.partitions[opt.id]
        contents = dict(opt.contents)
        try:
            contents[cmd.language] = OptionContent.split(part_a, part_b)
        except ValueError as exc:
            raise EditRejected(f"bad partition for option {opt.id!r}: {exc}") from None
        new_options.append(replace(opt, contents=contents))

    new_entries = []
    for entry in layout.entries:
        if entry.segment_index == cmd.segment_index:
            new_entries.append(LayoutEntry(cmd.segment_index, PART_A))
            new_entries.append(LayoutEntry(cmd.segment_index, PART_B))
        else:
            new_entries.append(entry)
    layouts = dict(phrase.layouts)
    layouts[cmd.language] = Layout(tuple(new_entries))

    segments = tuple(
        replace(segment, options=tuple(new_options)) if i == cmd.segment_index else s
        for i, s in enumerate(phrase.segments)
    )
    return _with_phrase(catalogue, replace(phrase, segments=segments, layouts=layouts))


def _locate_option(catalogue: Catalogue, path: str):
    """Resolve an option path into (kind, owner ids, option)."""
    parts = path.split("/")
    if parts[0].startswith("sub:"):
        if len(parts) != 2:
            raise EditRejected(f"bad sub-segment option path {path!r}")
        sub_id = parts[0][4:]
        sub = catalogue.sub_segments.get(sub_id)
        if sub is None:
            raise EditRejected(f"no sub-segment {sub_id!r}")
        opt = sub.option(parts[1])
        if opt is None:
            raise EditRejected(f"no option {parts[1]!r} in sub-segment {sub_id!r}")
        return "sub", (sub_id,), opt
    if len(parts) != 3:
        raise EditRejected(f"bad option path {path!r}")
    phrase = _get_phrase(catalogue, parts[0])
    seg = phrase.segment(parts[1])
    if seg is None:
        raise EditRejected(f"no segment {parts[1]!r} in phrase {phrase.id!r}")
    opt = seg.option(parts[2])
    if opt is None:
        raise EditRejected(f"no option {parts[2]!r} in segment {seg.id!r}")
    return "phrase", (phrase.id, seg.id), opt


def _replace_option(catalogue: Catalogue, path: str, new_option: Option) -> Catalogue:
    kind, owner, old = _locate_option(catalogue, path)
    if kind == "sub":
        (sub_id,) = owner
        sub = catalogue.sub_segments[sub_id]
        options = tuple(new_option if o.id == old.id else o for o in sub.options)
        subs = dict(catalogue.sub_segments)
        subs[sub_id] = replace(sub, options=options)
        return replace(catalogue, sub_segments=subs)
    phrase_id, seg_id = owner
    phrase = catalogue.phrase(phrase_id)
    segments = []
    for seg in phrase.segments:
        if seg.id == seg_id:
            options = tuple(new_option if o.id == old.id else o for o in seg.options)
            seg = replace(seg, options=options)
        segments.append(seg)
    return _with_phrase(catalogue, replace(phrase, segments=tuple(segments)))


def _set_option_content(catalogue: Catalogue, cmd: SetOptionContent) -> Catalogue:
    _require_language(catalogue, cmd.language)
    _, _, option = _locate_option(catalogue, cmd.path)
    contents = dict(option.contents)
    contents[cmd.language] = cmd.content
    return _replace_option(catalogue, cmd.path, replace(option, contents=contents))


def _set_agreement(catalogue: Catalogue, cmd: SetAgreement) -> Catalogue:
    for lang in cmd.agreement:
        _require_language(catalogue, lang)
    _, _, option = _locate_option(catalogue, cmd.path)
    return _replace_option(catalogue, cmd.path, replace(option, agreement=dict(cmd.agreement)))


def _add_phrase(catalogue: Catalogue, cmd: AddPhrase) -> Catalogue:
    if catalogue.find_phrase(cmd.phrase.id) is not None:
        raise EditRejected(f"phrase id {cmd.phrase.id!r} already exists")
    return replace(catalogue, phrases=catalogue.phrases + (cmd.phrase,))


def _add_option(catalogue: Catalogue, cmd: AddSegmentOption) -> Catalogue:
    parts = cmd.path.split("/")
    try:
        if parts[0].startswith("sub:") and len(parts) == 1:
            sub_id = parts[0][4:]
            sub = catalogue.sub_segments.get(sub_id)
            if sub is None:
                raise EditRejected(f"no sub-segment {sub_id!r}")
            subs = dict(catalogue.sub_segments)
            subs[sub_id] = replace(sub, options=sub.options + (cmd.option,))
            return replace(catalogue, sub_segments=subs)
        if len(parts) == 2:
            phrase = _get_phrase(catalogue, parts[0])
            seg = phrase.segment(parts[1])
            if seg is None:
                raise EditRejected(f"no segment {parts[1]!r} in phrase {phrase.id!r}")
            segments = tuple(
                replace(s, options=s.options + (cmd.option,)) if s.id == seg.id else s
                for s in phrase.segments
            )
            return _with_phrase(catalogue, replace(phrase, segments=segments))
    except ValueError as exc:
        raise EditRejected(str(exc)) from None
    raise EditRejected(f"bad segment path {cmd.path!r}")
