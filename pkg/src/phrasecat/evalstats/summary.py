"""Survey summary: detection-rate table and quality-rating table.

``summarize`` computes raw numbers; the formatters round for display
(rates and means to two decimals, p-values as "<0.001" below that
threshold). Per-language rows use each language's full item pool; the
all-languages row uses the balanced dataset so no language dominates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .kernels import TestResult, chi2_2x2, chi2_gof, mann_whitney_u
from .survey import (
    ORIGINS,
    QUESTIONS,
    LanguageItem,
    SurveyResponse,
    balanced_dataset,
    detection_rate,
    mean_rating,
    survey_items,
)


@dataclass(frozen=True)
class DetectionRow:
    language: str
    n: int
    rate: float
    gof: TestResult
    independence: "Optional[TestResult]"


@dataclass(frozen=True)
class QualityCell:
    question: str  # one of QUESTIONS, or "all"
    mean_new: float
    difference: float  # new - old
    mwu: TestResult


@dataclass(frozen=True)
class QualityRow:
    language: str  # a language code, or "all" for the balanced row
    n: int
    cells: "tuple[QualityCell, ...]"


@dataclass(frozen=True)
class SummaryReport:
    seed: int
    languages: "tuple[str, ...]"
    detection: "tuple[DetectionRow, ...]"
    quality: "tuple[QualityRow, ...]"
    balanced: QualityRow
    balanced_counts: "dict[str, int]"


def summarize(responses: "Sequence[SurveyResponse]", seed: int = 0) -> SummaryReport:
    if not responses:
        raise ValueError("no responses to summarize")
    items = survey_items(responses)
    languages = tuple(sorted({li.language for li in items}))

    detection_rows = []
    quality_rows = []
    for language in languages:
        lang_items = [li for li in items if li.language == language]
        detection_rows.append(_detection_row(language, lang_items))
        quality_rows.append(_quality_row(language, lang_items))

    balanced_items = balanced_dataset(responses, seed)
    balanced_row = _quality_row("all", balanced_items)
    balanced_counts: dict[str, int] = {}
    for li in balanced_items:
        balanced_counts[li.language] = balanced_counts.get(li.language, 0) + 1

    return SummaryReport(
        seed=seed,
        languages=languages,
        detection=tuple(detection_rows),
        quality=tuple(quality_rows),
        balanced=balanced_row,
        balanced_counts=balanced_counts,
    )


def _detection_row(language: str, lang_items: "list[LanguageItem]") -> DetectionRow:
    plain = [li.item for li in lang_items]
    rate = detection_rate(plain)
    correct = sum(1 for item in plain if item.guessed_correctly)
    gof = chi2_gof(correct, len(plain), 0.5)
    table = [[0, 0], [0, 0]]
    for item in plain:
        row = ORIGINS.index(item.actual_origin)
        col = ORIGINS.index(item.guessed_origin)
        table[row][col] += 1
    try:
        independence = chi2_2x2(table)
    except ValueError:
        independence = None  # degenerate margins (e.g. everyone guessed the same)
    return DetectionRow(language, len(plain), rate, gof, independence)


def _quality_row(language: str, lang_items: "list[LanguageItem]") -> QualityRow:
    cells = []
    for question in list(QUESTIONS) + [None]:
        new_values = _question_values(lang_items, question, "new")
        old_values = _question_values(lang_items, question, "old")
        cells.append(
            QualityCell(
                question=question or "all",
                mean_new=sum(new_values) / len(new_values),
                difference=sum(new_values) / len(new_values) - sum(old_values) / len(old_values),
                mwu=mann_whitney_u(new_values, old_values),
            )
        )
    return QualityRow(language=language, n=len(lang_items), cells=tuple(cells))


def _question_values(items, question, origin):
    questions = QUESTIONS if question is None else (question,)
    values = [
        li.item.ratings[q]
        for li in items
        if li.item.actual_origin == origin
        for q in questions
    ]
    if not values:
        raise ValueError(f"no {origin!r} ratings in stratum")
    return values


# ---------------------------------------------------------------------------
# Formatting
# ---------------------------------------------------------------------------

def format_p(p: float) -> str:
    if p < 0.001:
        return "<0.001"
    if p < 0.01:
        return f"{p:.3f}"
    return f"{p:.2f}"


def format_report_text(report: SummaryReport) -> str:
    lines = [f"Survey summary (seed {report.seed})", ""]
    lines.append("Origin detection, per language:")
    lines.append(f"  {'language':<10}{'n':>6}  {'rate':>5}  {'p (gof)':>8}  {'p (2x2)':>8}")
    for row in report.detection:
        indep = format_p(row.independence.p) if row.independence else "n/a"
        lines.append(
            f"  {row.language:<10}{row.n:>6}  {row.rate:>5.2f}  "
            f"{format_p(row.gof.p):>8}  {indep:>8}"
        )
    lines.append("")
    lines.append("Quality ratings (mean of new, difference new-old, Mann-Whitney p):")
    for row in list(report.quality) + [report.balanced]:
        label = row.language if row.language != "all" else "all (balanced)"
        lines.append(f"  {label} (n={row.n}):")
        for cell in row.cells:
            lines.append(
                f"    {cell.question:<15} mean {cell.mean_new:.2f}  "
                f"diff {cell.difference:+.2f}  p {format_p(cell.mwu.p)} [{cell.mwu.variant}]"
            )
    lines.append("")
    counts = ", ".join(f"{k}={v}" for k, v in sorted(report.balanced_counts.items()))
    lines.append(f"Balanced dataset: {counts}")
    return "\n".join(lines) + "\n"


def _test_obj(result: "Optional[TestResult]"):
    if result is None:
        return None
    return {
        "method": result.method,
        "variant": result.variant,
        "statistic": result.statistic,
        "p": result.p,
        "pLabel": format_p(result.p),
        "n": list(result.n),
    }


def format_report_json(report: SummaryReport) -> str:
    doc = {
        "seed": report.seed,
        "languages": list(report.languages),
        "detection": [
            {
                "language": row.language,
                "n": row.n,
                "rate": row.rate,
                "gof": _test_obj(row.gof),
                "independence": _test_obj(row.independence),
            }
            for row in report.detection
        ],
        "quality": [
            {
                "language": row.language,
                "n": row.n,
                "cells": [
                    {
                        "question": cell.question,
                        "meanNew": cell.mean_new,
                        "difference": cell.difference,
                        "mwu": _test_obj(cell.mwu),
                    }
                    for cell in row.cells
                ],
            }
            for row in list(report.quality) + [report.balanced]
        ],
        "balancedCounts": dict(sorted(report.balanced_counts.items())),
    }
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"
