"""Catalogue document format: strict UTF-8 JSON, canonically serialized.

The document is a contract between the authoring workbench, the service
and this library, so parsing is strict: unknown fields, duplicate keys,
wrong types and undeclared languages are all rejected. Serialization is
canonical (fixed key order, language order from the catalogue, sorted
sub-segment ids, two-space indent, trailing newline) so that equal
catalogues produce byte-identical documents.

Layout entries use 1-based segment numbers with an optional a/b suffix,
e.g. ``["3a", "1", "2", "3b", "4", "5"]``.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .lint import error_findings
from .errors import CatalogueFormatError
from .model import (
    PART_A,
    PART_B,
    PART_WHOLE,
    Agreement,
    Catalogue,
    Layout,
    LayoutEntry,
    Lit,
    Option,
    OptionContent,
    Phrase,
    Segment,
    Selection,
    Slot,
    SubSegment,
)

FORMAT_VERSION = 1

_LAYOUT_ENTRY_RE = re.compile(r"^([1-9][0-9]*)([ab])?$")


def _fail(msg: str) -> "CatalogueFormatError":
    return CatalogueFormatError(msg)


def _no_duplicate_keys(pairs: "list[tuple[str, Any]]") -> "dict[str, Any]":
    d: dict[str, Any] = {}
    for key, value in pairs:
        if key in d:
            raise _fail(f"duplicate key {key!r} in document")
        d[key] = value
    return d


def _require_keys(obj: "dict[str, Any]", where: str, required: "tuple[str, ...]", optional: "tuple[str, ...]" = ()) -> None:
    if not isinstance(obj, dict):
        raise _fail(f"{where}: expected an object, got {type(obj).__name__}")
    for key in required:
        if key not in obj:
            raise _fail(f"{where}: missing field {key!r}")
    unknown = set(obj) - set(required) - set(optional)
    if unknown:
        raise _fail(f"{where}: unknown field(s) {sorted(unknown)}")


def _expect(value, typ, where: str):
    if typ is bool and not isinstance(value, bool):
        raise _fail(f"{where}: expected a boolean")
    if typ is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise _fail(f"{where}: expected an integer")
    if typ is str and not isinstance(value, str):
        raise _fail(f"{where}: expected a string")
    if typ is list and not isinstance(value, list):
        raise _fail(f"{where}: expected an array")
    if typ is dict and not isinstance(value, dict):
        raise _fail(f"{where}: expected an object")
    return value


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def parse_catalogue(data: "bytes | str", strict: bool = True) -> Catalogue:
    """Parse a catalogue document.

    With ``strict`` (the default) the result is guaranteed to satisfy every
    catalogue invariant: any error-severity lint finding rejects the
    document. ``strict=False`` performs only structural parsing so the
    caller can lint and report instead.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise _fail(f"document is not UTF-8: {exc}") from None
    else:
        text = data
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except CatalogueFormatError:
        raise
    except json.JSONDecodeError as exc:
        raise _fail(f"document is not valid JSON: {exc}") from None

    _require_keys(
        doc,
        "catalogue",
        required=("formatVersion", "version", "source", "languages", "subSegments", "phrases"),
    )
    if doc["formatVersion"] != FORMAT_VERSION:
        raise _fail(f"unsupported formatVersion {doc['formatVersion']!r}")
    version = _expect(doc["version"], int, "version")
    source = _expect(doc["source"], str, "source")
    languages = tuple(
        _expect(lang, str, "languages[]") for lang in _expect(doc["languages"], list, "languages")
    )

    subs: dict[str, SubSegment] = {}
    for sub_id, sub_obj in _expect(doc["subSegments"], dict, "subSegments").items():
        subs[sub_id] = _parse_sub_segment(sub_id, sub_obj, languages)

    phrases = tuple(
        _parse_phrase(p, languages) for p in _expect(doc["phrases"], list, "phrases")
    )

    try:
        catalogue = Catalogue(
            version=version,
            source_language=source,
            languages=languages,
            sub_segments=subs,
            phrases=phrases,
        )
    except ValueError as exc:
        raise _fail(str(exc)) from None

    if strict:
        errors = error_findings(catalogue)
        if errors:
            first = errors[0]
            raise CatalogueFormatError(
                f"invalid catalogue: {first.code} at {first.path or '<root>'}: {first.message}"
                + (f" (+{len(errors) - 1} more)" if len(errors) > 1 else ""),
                findings=errors,
            )
    return catalogue


def _parse_sub_segment(sub_id: str, obj, languages) -> SubSegment:
    where = f"subSegments[{sub_id!r}]"
    _require_keys(obj, where, required=("label", "options"))
    options = tuple(
        _parse_option(o, languages, f"{where}.options[{i}]")
        for i, o in enumerate(_expect(obj["options"], list, f"{where}.options"))
    )
    try:
        return SubSegment(id=sub_id, label=_expect(obj["label"], str, f"{where}.label"), options=options)
    except ValueError as exc:
        raise _fail(f"{where}: {exc}") from None


def _parse_phrase(obj, languages) -> Phrase:
    _require_keys(obj, "phrase", required=("id", "label", "segments", "layouts"))
    pid = _expect(obj["id"], str, "phrase.id")
    where = f"phrase {pid!r}"
    segments = tuple(
        _parse_segment(s, languages, f"{where}.segments[{i}]")
        for i, s in enumerate(_expect(obj["segments"], list, f"{where}.segments"))
    )
    layouts = {
        lang: _parse_layout(entries, f"{where}.layouts[{lang!r}]")
        for lang, entries in _expect(obj["layouts"], dict, f"{where}.layouts").items()
    }
    try:
        return Phrase(
            id=pid,
            label=_expect(obj["label"], str, f"{where}.label"),
            segments=segments,
            layouts=layouts,
        )
    except ValueError as exc:
        raise _fail(f"{where}: {exc}") from None


def _parse_segment(obj, languages, where: str) -> Segment:
    _require_keys(obj, where, required=("id", "label", "uniformAgreement", "options"))
    options = tuple(
        _parse_option(o, languages, f"{where}.options[{i}]")
        for i, o in enumerate(_expect(obj["options"], list, f"{where}.options"))
    )
    try:
        return Segment(
            id=_expect(obj["id"], str, f"{where}.id"),
            label=_expect(obj["label"], str, f"{where}.label"),
            options=options,
            uniform_agreement=_expect(obj["uniformAgreement"], bool, f"{where}.uniformAgreement"),
        )
    except ValueError as exc:
        raise _fail(f"{where}: {exc}") from None


def _parse_option(obj, languages, where: str) -> Option:
    _require_keys(
        obj, where, required=("id", "contents"), optional=("antecedentHint", "agreement")
    )
    contents: dict[str, OptionContent] = {}
    for lang, content_obj in _expect(obj["contents"], dict, f"{where}.contents").items():
        if lang not in languages:
            raise _fail(f"{where}: content for undeclared language {lang!r}")
        contents[lang] = _parse_content(content_obj, f"{where}.contents[{lang!r}]")
    agreement: dict[str, Agreement] = {}
    for lang, agr in _expect(obj.get("agreement", {}), dict, f"{where}.agreement").items():
        if lang not in languages:
            raise _fail(f"{where}: agreement for undeclared language {lang!r}")
        agr_where = f"{where}.agreement[{lang!r}]"
        _require_keys(agr, agr_where, required=("gender", "number"))
        try:
            agreement[lang] = Agreement(
                gender=_expect(agr["gender"], str, agr_where),
                number=_expect(agr["number"], str, agr_where),
            )
        except ValueError as exc:
            raise _fail(f"{agr_where}: {exc}") from None
    hint = obj.get("antecedentHint")
    if hint is not None:
        _expect(hint, str, f"{where}.antecedentHint")
    try:
        return Option(
            id=_expect(obj["id"], str, f"{where}.id"),
            contents=contents,
            antecedent_hint=hint,
            agreement=agreement,
        )
    except ValueError as exc:
        raise _fail(f"{where}: {exc}") from None


def _parse_content(obj, where: str) -> OptionContent:
    try:
        if isinstance(obj, list):
            return OptionContent.unsplit(tuple(_parse_token(t, where) for t in obj))
        if isinstance(obj, dict):
            _require_keys(obj, where, required=("a", "b"))
            return OptionContent.split(
                tuple(_parse_token(t, f"{where}.a") for t in _expect(obj["a"], list, f"{where}.a")),
                tuple(_parse_token(t, f"{where}.b") for t in _expect(obj["b"], list, f"{where}.b")),
            )
    except ValueError as exc:
        raise _fail(f"{where}: {exc}") from None
    raise _fail(f"{where}: expected a token array or an {{a, b}} pair")


def _parse_token(obj, where: str):
    _require_keys(obj, f"{where} token", required=("t", "v"))
    tag = obj["t"]
    value = _expect(obj["v"], str, f"{where} token value")
    if tag == "lit":
        return Lit(value)
    if tag == "slot":
        return Slot(value)
    raise _fail(f"{where}: unknown token tag {tag!r}")


def _parse_layout(entries, where: str) -> Layout:
    out = []
    for raw in _expect(entries, list, where):
        m = _LAYOUT_ENTRY_RE.match(_expect(raw, str, f"{where}[]"))
        if not m:
            raise _fail(f"{where}: bad layout entry {raw!r}")
        index = int(m.group(1)) - 1
        part = {None: PART_WHOLE, "a": PART_A, "b": PART_B}[m.group(2)]
        out.append(LayoutEntry(index, part))
    return Layout(tuple(out))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def serialize_catalogue(catalogue: Catalogue) -> bytes:
    """Serialize to the canonical document; inverse of :func:`parse_catalogue`."""
    doc = {
        "formatVersion": FORMAT_VERSION,
        "version": catalogue.version,
        "source": catalogue.source_language,
        "languages": list(catalogue.languages),
        "subSegments": {
            sub_id: _sub_segment_obj(catalogue.sub_segments[sub_id], catalogue)
            for sub_id in sorted(catalogue.sub_segments)
        },
        "phrases": [_phrase_obj(p, catalogue) for p in catalogue.phrases],
    }
    return (json.dumps(doc, ensure_ascii=False, indent=2) + "\n").encode("utf-8")


def _sub_segment_obj(sub: SubSegment, catalogue: Catalogue):
    return {"label": sub.label, "options": [_option_obj(o, catalogue) for o in sub.options]}


def _phrase_obj(phrase: Phrase, catalogue: Catalogue):
    layouts = {}
    for lang in catalogue.languages:
        if lang in phrase.layouts:
            layouts[lang] = layout_to_json(phrase.layouts[lang])
    for lang in sorted(set(phrase.layouts) - set(catalogue.languages)):
        layouts[lang] = layout_to_json(phrase.layouts[lang])
    return {
        "id": phrase.id,
        "label": phrase.label,
        "segments": [_segment_obj(s, catalogue) for s in phrase.segments],
        "layouts": layouts,
    }


def _segment_obj(seg: Segment, catalogue: Catalogue):
    return {
        "id": seg.id,
        "label": seg.label,
        "uniformAgreement": seg.uniform_agreement,
        "options": [_option_obj(o, catalogue) for o in seg.options],
    }


def _option_obj(opt: Option, catalogue: Catalogue):
    def ordered_langs(mapping):
        for lang in catalogue.languages:
            if lang in mapping:
                yield lang
        for lang in sorted(set(mapping) - set(catalogue.languages)):
            yield lang

    obj: dict = {
        "id": opt.id,
        "contents": {
            lang: _content_obj(opt.contents[lang]) for lang in ordered_langs(opt.contents)
        },
    }
    if opt.antecedent_hint is not None:
        obj["antecedentHint"] = opt.antecedent_hint
    if opt.agreement:
        obj["agreement"] = {
            lang: {
                "gender": opt.agreement[lang].gender,
                "number": opt.agreement[lang].number,
            }
            for lang in ordered_langs(opt.agreement)
        }
    return obj


def _content_obj(content: OptionContent):
    if content.is_split:
        return {
            "a": [_token_obj(t) for t in content.parts[0]],
            "b": [_token_obj(t) for t in content.parts[1]],
        }
    return [_token_obj(t) for t in content.parts[0]]


def _token_obj(tok):
    if isinstance(tok, Lit):
        return {"t": "lit", "v": tok.text}
    return {"t": "slot", "v": tok.sub_segment_id}


def layout_to_json(layout: Layout) -> "list[str]":
    suffix = {PART_WHOLE: "", PART_A: "a", PART_B: "b"}
    return [f"{e.segment_index + 1}{suffix[e.part]}" for e in layout.entries]


# ---------------------------------------------------------------------------
# Selection documents
# ---------------------------------------------------------------------------

def selection_to_json(selection: Selection) -> dict:
    return {
        "phraseId": selection.phrase_id,
        "choices": {k: selection.choices[k] for k in sorted(selection.choices)},
        "slotChoices": {k: selection.slot_choices[k] for k in sorted(selection.slot_choices)},
    }


def selection_from_json(obj) -> Selection:
    _require_keys(obj, "selection", required=("phraseId", "choices"), optional=("slotChoices",))
    choices = _expect(obj["choices"], dict, "selection.choices")
    slot_choices = _expect(obj.get("slotChoices", {}), dict, "selection.slotChoices")
    for k, v in list(choices.items()) + list(slot_choices.items()):
        _expect(k, str, "selection choice key")
        _expect(v, str, f"selection choice {k!r}")
    return Selection(
        phrase_id=_expect(obj["phraseId"], str, "selection.phraseId"),
        choices=dict(choices),
        slot_choices=dict(slot_choices),
    )
