"""phrasecat: multilingual phrase-catalogue toolkit.

Author, validate, search and render controlled-language sentences whose
translations are fixed per option, assemble multilingual bulletins, and
run the blind-study evaluation statistics.
"""

from .catfile import parse_catalogue, selection_from_json, selection_to_json, serialize_catalogue
from .counting import count_selections, enumerate_selections, selection_at
from .edits import (
    AddPhrase,
    AddSegmentOption,
    SetAgreement,
    SetLayout,
    SetOptionContent,
    SplitSegment,
    apply_edit,
)
from .errors import (
    BulletinInvalid,
    BulletinNotFoundError,
    BulletinStoreError,
    CatalogueFormatError,
    EditRejected,
    InvalidCursorError,
    PhrasecatError,
    SelectionInvalid,
    StaleIndexError,
    SurveyFormatError,
    UnknownLanguageError,
    UnknownPhraseError,
)
from .lint import Finding, lint
from .model import (
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
    ValidationIssue,
    ValidationReport,
    validate_selection,
)
from .render import RenderedSentence, capitalize_sentence, join_parts, render, render_all
from .search import Index, PhraseHit, build_index, fold, search

__version__ = "0.1.0"

__all__ = [
    "parse_catalogue",
    "serialize_catalogue",
    "selection_from_json",
    "selection_to_json",
    "count_selections",
    "enumerate_selections",
    "selection_at",
    "AddPhrase",
    "AddSegmentOption",
    "SetAgreement",
    "SetLayout",
    "SetOptionContent",
    "SplitSegment",
    "apply_edit",
    "Finding",
    "lint",
    "Agreement",
    "Catalogue",
    "Layout",
    "LayoutEntry",
    "Lit",
    "Option",
    "OptionContent",
    "Phrase",
    "Segment",
    "Selection",
    "Slot",
    "SubSegment",
    "ValidationIssue",
    "ValidationReport",
    "validate_selection",
    "RenderedSentence",
    "capitalize_sentence",
    "join_parts",
    "render",
    "render_all",
    "Index",
    "PhraseHit",
    "build_index",
    "fold",
    "search",
    "PhrasecatError",
    "CatalogueFormatError",
    "UnknownPhraseError",
    "UnknownLanguageError",
    "SelectionInvalid",
    "EditRejected",
    "InvalidCursorError",
    "StaleIndexError",
    "BulletinInvalid",
    "BulletinNotFoundError",
    "BulletinStoreError",
    "SurveyFormatError",
]
