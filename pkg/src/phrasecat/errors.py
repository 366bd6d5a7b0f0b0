"""Exception types shared across the package."""

from __future__ import annotations


class PhrasecatError(Exception):
    """Base class for all package-specific errors."""


class CatalogueFormatError(PhrasecatError):
    """A catalogue document is malformed or violates a structural invariant.

    When the failure comes from semantic validation (not JSON shape), the
    offending lint findings are attached.
    """

    def __init__(self, message: str, findings: list | None = None) -> None:
        super().__init__(message)
        self.findings = findings or []


class UnknownPhraseError(PhrasecatError):
    """A phrase id does not exist in the catalogue."""


class UnknownLanguageError(PhrasecatError):
    """A language code is not part of the catalogue's language list."""


class SelectionInvalid(PhrasecatError):
    """A selection failed validation; carries the full report."""

    def __init__(self, report) -> None:
        super().__init__(f"selection invalid: {len(report.issues)} issue(s)")
        self.report = report


class EditRejected(PhrasecatError):
    """An edit command would violate a catalogue invariant."""


class InvalidCursorError(PhrasecatError):
    """An enumeration cursor is malformed or stale."""


class StaleIndexError(PhrasecatError):
    """A search index was built from a different catalogue version."""


class BulletinInvalid(PhrasecatError):
    """A bulletin failed validation against the catalogue."""

    def __init__(self, problems: list[str]) -> None:
        super().__init__("; ".join(problems))
        self.problems = problems


class BulletinNotFoundError(PhrasecatError):
    """No stored bulletin with the requested id."""


class BulletinStoreError(PhrasecatError):
    """An I/O failure in the bulletin store, distinct from validation."""


class SurveyFormatError(PhrasecatError):
    """A survey CSV file has a malformed header or is unreadable."""
