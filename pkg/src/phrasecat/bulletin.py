"""Danger descriptions, bulletins, and their file store.

A danger description is an ordered mix of phrase selections and joker
entries (free text supplied simultaneously in every catalogue
language). Rendering is single-source: the same entries produce every
language's paragraph, so no translation can ever add or drop a
sentence, and publication is atomic across languages.

Bulletins are stored one JSON document per file with atomic
replace-on-write; at twice-daily write rates the simplest auditable
mechanism wins.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Union

from .catfile import _expect, _no_duplicate_keys, _require_keys, selection_from_json, selection_to_json
from .errors import (
    BulletinInvalid,
    BulletinNotFoundError,
    BulletinStoreError,
    CatalogueFormatError,
    UnknownPhraseError,
)
from .model import Catalogue, Selection, check_identifier, validate_selection
from .render import join_parts, render

EDITIONS = ("morning", "evening")


@dataclass(frozen=True)
class PhraseEntry:
    selection: Selection


@dataclass(frozen=True)
class JokerEntry:
    """Ad-hoc sentence provided verbatim in every language at once."""

    texts: "dict[str, str]"


Entry = Union[PhraseEntry, JokerEntry]


@dataclass(frozen=True)
class DangerDescription:
    id: str
    label: str
    entries: "tuple[Entry, ...]"

    def __post_init__(self) -> None:
        check_identifier(self.id, "description id")


@dataclass(frozen=True)
class Bulletin:
    id: str
    issued_at: datetime
    edition: str
    catalogue_version: int
    descriptions: "tuple[DangerDescription, ...]"

    def __post_init__(self) -> None:
        check_identifier(self.id, "bulletin id")
        if self.edition not in EDITIONS:
            raise ValueError(f"edition must be one of {EDITIONS}, got {self.edition!r}")
        if not self.descriptions:
            raise ValueError("a bulletin needs at least one danger description")


# ---------------------------------------------------------------------------
# Validation and rendering
# ---------------------------------------------------------------------------

def validate_bulletin(catalogue: Catalogue, bulletin: Bulletin) -> None:
    """Raise :class:`BulletinInvalid` listing every problem, or pass silently."""
    problems = []
    for desc in bulletin.descriptions:
        problems.extend(_description_problems(catalogue, desc))
    if problems:
        raise BulletinInvalid(problems)


def _description_problems(catalogue: Catalogue, desc: DangerDescription) -> "list[str]":
    problems = []
    for i, entry in enumerate(desc.entries):
        where = f"description {desc.id!r} entry {i}"
        if isinstance(entry, JokerEntry):
            for lang in catalogue.languages:
                if not entry.texts.get(lang, "").strip():
                    problems.append(f"{where}: joker text missing for language {lang!r}")
            for lang in sorted(set(entry.texts) - set(catalogue.languages)):
                problems.append(f"{where}: joker text for unknown language {lang!r}")
        else:
            try:
                report = validate_selection(catalogue, entry.selection)
            except UnknownPhraseError as exc:
                problems.append(f"{where}: {exc}")
                continue
            for issue in report.issues:
                problems.append(f"{where}: {issue.code} at {issue.path}: {issue.message}")
    return problems


def render_description(catalogue: Catalogue, desc: DangerDescription, language: str) -> str:
    """One paragraph: rendered sentences and verbatim joker texts, space-joined."""
    sentences = []
    for i, entry in enumerate(desc.entries):
        if isinstance(entry, JokerEntry):
            text = entry.texts.get(language)
            if text is None:
                raise BulletinInvalid(
                    [f"description {desc.id!r} entry {i}: joker text missing for {language!r}"]
                )
            sentences.append(text)
        else:
            sentences.append(render(catalogue, entry.selection, language).text)
    return join_parts(sentences)


def render_bulletin(catalogue: Catalogue, bulletin: Bulletin) -> "dict[str, str]":
    """Render every description in every language, or fail with no output."""
    validate_bulletin(catalogue, bulletin)
    return {
        lang: "\n\n".join(
            render_description(catalogue, desc, lang) for desc in bulletin.descriptions
        )
        for lang in catalogue.languages
    }


def eligible_for_survey(catalogue: Catalogue, desc: DangerDescription) -> bool:
    """Long enough to evaluate: strictly more than 100 source-language characters."""
    return len(render_description(catalogue, desc, catalogue.source_language)) > 100


# ---------------------------------------------------------------------------
# Document codec
# ---------------------------------------------------------------------------

def bulletin_to_json(bulletin: Bulletin) -> dict:
    return {
        "id": bulletin.id,
        "issuedAt": bulletin.issued_at.isoformat(),
        "edition": bulletin.edition,
        "catalogueVersion": bulletin.catalogue_version,
        "descriptions": [
            {
                "id": desc.id,
                "label": desc.label,
                "entries": [_entry_obj(e) for e in desc.entries],
            }
            for desc in bulletin.descriptions
        ],
    }


def _entry_obj(entry: Entry) -> dict:
    if isinstance(entry, JokerEntry):
        return {"t": "joker", "texts": {k: entry.texts[k] for k in sorted(entry.texts)}}
    return {"t": "phrase", "selection": selection_to_json(entry.selection)}


def bulletin_from_json(obj) -> Bulletin:
    _require_keys(
        obj,
        "bulletin",
        required=("id", "issuedAt", "edition", "catalogueVersion", "descriptions"),
    )
    raw = _expect(obj["issuedAt"], str, "bulletin.issuedAt")
    try:
        issued_at = datetime.fromisoformat(raw.replace("Z", "+00:00"))
    except ValueError:
        raise BulletinStoreError(f"bad issuedAt timestamp {raw!r}") from None
    descriptions = []
    for i, d in enumerate(_expect(obj["descriptions"], list, "bulletin.descriptions")):
        where = f"bulletin.descriptions[{i}]"
        _require_keys(d, where, required=("id", "label", "entries"))
        entries = []
        for j, e in enumerate(_expect(d["entries"], list, f"{where}.entries")):
            entry_where = f"{where}.entries[{j}]"
            _require_keys(e, entry_where, required=("t",), optional=("selection", "texts"))
            if e["t"] == "phrase":
                entries.append(PhraseEntry(selection_from_json(e.get("selection"))))
            elif e["t"] == "joker":
                texts = _expect(e.get("texts"), dict, f"{entry_where}.texts")
                for lang, text in texts.items():
                    _expect(text, str, f"{entry_where}.texts[{lang!r}]")
                entries.append(JokerEntry(dict(texts)))
            else:
                raise BulletinStoreError(f"{entry_where}: unknown entry tag {e['t']!r}")
        descriptions.append(
            DangerDescription(
                id=_expect(d["id"], str, f"{where}.id"),
                label=_expect(d["label"], str, f"{where}.label"),
                entries=tuple(entries),
            )
        )
    try:
        return Bulletin(
            id=_expect(obj["id"], str, "bulletin.id"),
            issued_at=issued_at,
            edition=_expect(obj["edition"], str, "bulletin.edition"),
            catalogue_version=_expect(obj["catalogueVersion"], int, "bulletin.catalogueVersion"),
            descriptions=tuple(descriptions),
        )
    except ValueError as exc:
        raise BulletinStoreError(str(exc)) from None


# ---------------------------------------------------------------------------
# File store
# ---------------------------------------------------------------------------

class BulletinStore:
    """One JSON document per bulletin, atomic replace-on-write.

    Writers must be serialized by the owner; readers are always safe
    because a bulletin file is only ever replaced whole.
    """

    def __init__(self, directory: "Path | str") -> None:
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, bulletin_id: str) -> Path:
        return self.directory / f"{bulletin_id}.json"

    def store(self, bulletin: Bulletin, catalogue: "Catalogue | None" = None) -> str:
        """Persist and return the bulletin id; validates first when given a catalogue."""
        if catalogue is not None:
            validate_bulletin(catalogue, bulletin)
        payload = json.dumps(bulletin_to_json(bulletin), ensure_ascii=False, indent=2) + "\n"
        target = self._path(bulletin.id)
        tmp = target.with_suffix(".json.tmp")
        try:
            tmp.write_text(payload, encoding="utf-8")
            os.replace(tmp, target)
        except OSError as exc:
            raise BulletinStoreError(f"cannot write {target}: {exc}") from None
        return bulletin.id

    def load(self, bulletin_id: str) -> Bulletin:
        path = self._path(check_identifier(bulletin_id, "bulletin id"))
        if not path.exists():
            raise BulletinNotFoundError(f"no bulletin {bulletin_id!r}")
        try:
            doc = json.loads(path.read_text(encoding="utf-8"), object_pairs_hook=_no_duplicate_keys)
        except (OSError, json.JSONDecodeError, CatalogueFormatError) as exc:
            raise BulletinStoreError(f"cannot read {path}: {exc}") from None
        return bulletin_from_json(doc)

    def list_bulletins(self) -> "list[Bulletin]":
        bulletins = [
            self.load(path.stem) for path in sorted(self.directory.glob("*.json"))
        ]
        bulletins.sort(key=lambda b: (b.issued_at.timestamp(), b.id))
        return bulletins
