"""Survey records: CSV ingestion, detection rates, means, balanced sampling.

The survey asks, per danger description, four quality questions rated
on a 5-best..1-worst scale plus a guess at the text's origin (written
from the phrase catalogue or manually). Ratings are ordinal; the
numeric values exist only to compute means.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from ..errors import SurveyFormatError

QUESTIONS = ("correct", "comprehensible", "readable", "clear")
ORIGINS = ("old", "new")
EXPERIENCE_LEVELS = ("none", "low", "medium", "high", "expert")
DEFAULT_LANGUAGES = ("de", "en", "fr", "it")

CSV_COLUMNS = (
    "participant_id",
    "language",
    "dataset_id",
    "age",
    "gender",
    "native",
    "experience",
    "description_id",
    "actual_origin",
    "guessed_origin",
    "q_correct",
    "q_comprehensible",
    "q_readable",
    "q_clear",
)

_BOOL_VALUES = {
    "true": True,
    "1": True,
    "yes": True,
    "false": False,
    "0": False,
    "no": False,
}


@dataclass(frozen=True)
class ItemRating:
    """One participant's judgement of one danger description."""

    description_id: str
    actual_origin: str
    guessed_origin: str
    ratings: "dict[str, int]"

    def __post_init__(self) -> None:
        if self.actual_origin not in ORIGINS or self.guessed_origin not in ORIGINS:
            raise ValueError(f"origins must be in {ORIGINS}")
        if set(self.ratings) != set(QUESTIONS):
            raise ValueError(f"ratings must cover exactly {QUESTIONS}")
        for question, value in self.ratings.items():
            if not isinstance(value, int) or not 1 <= value <= 5:
                raise ValueError(f"rating for {question!r} must be an integer 1..5, got {value!r}")

    @property
    def guessed_correctly(self) -> bool:
        return self.guessed_origin == self.actual_origin


@dataclass(frozen=True)
class SurveyResponse:
    participant_id: str
    language: str
    dataset_id: int
    age: int
    gender: str
    native_speaker: bool
    experience: str
    items: "tuple[ItemRating, ...]"

    def __post_init__(self) -> None:
        if not 1 <= self.dataset_id <= 6:
            raise ValueError(f"dataset_id must be 1..6, got {self.dataset_id}")
        if self.experience not in EXPERIENCE_LEVELS:
            raise ValueError(f"experience must be in {EXPERIENCE_LEVELS}")


@dataclass(frozen=True)
class LanguageItem:
    """An item rating tagged with the language it was answered in."""

    language: str
    item: ItemRating


@dataclass(frozen=True)
class RowError:
    row: int
    code: str
    message: str


@dataclass(frozen=True)
class IngestResult:
    responses: "tuple[SurveyResponse, ...]"
    errors: "tuple[RowError, ...]"


def ingest_survey_csv(
    data: "bytes | str",
    languages: "Sequence[str]" = DEFAULT_LANGUAGES,
) -> IngestResult:
    """Parse survey rows, collecting per-row errors instead of aborting.

    A malformed header is unrecoverable and raises; a bad row is
    reported with its line number and skipped. Rows group into one
    response per participant.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SurveyFormatError(f"survey file is not UTF-8: {exc}") from None
    else:
        text = data

    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise SurveyFormatError("survey file is empty; expected a header row") from None
    if tuple(h.strip() for h in header) != CSV_COLUMNS:
        raise SurveyFormatError(
            f"bad header; expected {','.join(CSV_COLUMNS)}"
        )

    errors: list[RowError] = []
    # participant -> (attributes, items); insertion order preserved
    participants: dict[str, tuple[dict, list[ItemRating]]] = {}
    seen_pairs: set[tuple[str, str]] = set()

    for row_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(CSV_COLUMNS):
            errors.append(RowError(row_no, "MALFORMED", f"expected {len(CSV_COLUMNS)} fields, got {len(row)}"))
            continue
        record = dict(zip(CSV_COLUMNS, (v.strip() for v in row)))
        problem = _check_row(record, languages)
        if problem is not None:
            errors.append(RowError(row_no, problem[0], problem[1]))
            continue

        pid = record["participant_id"]
        pair = (pid, record["description_id"])
        if pair in seen_pairs:
            errors.append(
                RowError(row_no, "DUPLICATE", f"second row for participant {pid!r} and description {record['description_id']!r}")
            )
            continue

        attrs = {
            "language": record["language"],
            "dataset_id": int(record["dataset_id"]),
            "age": int(record["age"]),
            "gender": record["gender"],
            "native_speaker": _BOOL_VALUES[record["native"].lower()],
            "experience": record["experience"],
        }
        item = ItemRating(
            description_id=record["description_id"],
            actual_origin=record["actual_origin"],
            guessed_origin=record["guessed_origin"],
            ratings={q: int(record[f"q_{q}"]) for q in QUESTIONS},
        )
        if pid in participants:
            known, items = participants[pid]
            if known != attrs:
                errors.append(
                    RowError(row_no, "INCONSISTENT", f"participant {pid!r} attributes differ from earlier rows")
                )
                continue
            items.append(item)
        else:
            participants[pid] = (attrs, [item])
        seen_pairs.add(pair)

    responses = tuple(
        SurveyResponse(participant_id=pid, items=tuple(items), **attrs)
        for pid, (attrs, items) in participants.items()
    )
    return IngestResult(responses=responses, errors=tuple(errors))


def _check_row(record: "dict[str, str]", languages: "Sequence[str]"):
    if record["language"] not in languages:
        return "UNKNOWN_LANGUAGE", f"unknown language code {record['language']!r}"
    if not record["dataset_id"].isdigit() or not 1 <= int(record["dataset_id"]) <= 6:
        return "RANGE", f"dataset_id must be 1..6, got {record['dataset_id']!r}"
    if not record["age"].isdigit():
        return "MALFORMED", f"age must be an integer, got {record['age']!r}"
    if record["native"].lower() not in _BOOL_VALUES:
        return "MALFORMED", f"native must be a boolean, got {record['native']!r}"
    if record["experience"] not in EXPERIENCE_LEVELS:
        return "MALFORMED", f"experience must be one of {EXPERIENCE_LEVELS}"
    for origin_field in ("actual_origin", "guessed_origin"):
        if record[origin_field] not in ORIGINS:
            return "BAD_ORIGIN", f"{origin_field} must be old|new, got {record[origin_field]!r}"
    for question in QUESTIONS:
        value = record[f"q_{question}"]
        if not value.isdigit() or not 1 <= int(value) <= 5:
            return "RANGE", f"q_{question} must be 1..5, got {value!r}"
    return None


# ---------------------------------------------------------------------------
# Dataset operations
# ---------------------------------------------------------------------------

def survey_items(responses: "Iterable[SurveyResponse]") -> "list[LanguageItem]":
    """Flatten responses into language-tagged items, input order preserved."""
    return [
        LanguageItem(resp.language, item) for resp in responses for item in resp.items
    ]


def detection_rate(items: "Sequence[ItemRating]") -> float:
    """Fraction of items whose origin was guessed correctly."""
    if not items:
        raise ValueError("detection rate needs at least one item")
    return sum(1 for item in items if item.guessed_correctly) / len(items)


def _values(
    items: "Iterable[LanguageItem]",
    question: "Optional[str]",
    origin: "Optional[str]" = None,
    language: "Optional[str]" = None,
) -> "list[int]":
    questions = QUESTIONS if question is None else (question,)
    out = []
    for li in items:
        if language is not None and li.language != language:
            continue
        if origin is not None and li.item.actual_origin != origin:
            continue
        out.extend(li.item.ratings[q] for q in questions)
    return out


def mean_rating(
    items: "Sequence[LanguageItem]",
    question: "Optional[str]",
    origin: "Optional[str]" = None,
    language: "Optional[str]" = None,
) -> float:
    """Mean rating on the 5-best..1-worst scale; ``question=None`` pools all four."""
    if question is not None and question not in QUESTIONS:
        raise ValueError(f"unknown question {question!r}")
    values = _values(items, question, origin, language)
    if not values:
        raise ValueError("no ratings left after filtering")
    return sum(values) / len(values)


def balanced_dataset(
    responses: "Sequence[SurveyResponse]",
    seed: int,
    keep_all_language: str = "en",
    per_origin: int = 180,
) -> "list[LanguageItem]":
    """The cross-language comparison sample: every item of the smallest
    language pool, plus a seed-deterministic random sample of exactly
    ``per_origin`` old and ``per_origin`` new items per other language,
    drawn without replacement.
    """
    items = survey_items(responses)
    rng = random.Random(seed)
    out: list[LanguageItem] = [li for li in items if li.language == keep_all_language]

    other_languages = sorted({li.language for li in items} - {keep_all_language})
    for language in other_languages:
        for origin in ORIGINS:
            stratum = [
                li
                for li in items
                if li.language == language and li.item.actual_origin == origin
            ]
            if len(stratum) < per_origin:
                raise ValueError(
                    f"stratum {language}/{origin} has {len(stratum)} items; "
                    f"{per_origin} required"
                )
            picked = rng.sample(range(len(stratum)), per_origin)
            out.extend(stratum[i] for i in sorted(picked))
    return out
