"""Blind-study evaluation pipeline: survey ingestion and statistics."""

from .kernels import (
    TestResult,
    chi2_2x2,
    chi2_gof,
    chi2_sf,
    mann_whitney_u,
    norm_sf,
    t_test,
)
from .survey import (
    EXPERIENCE_LEVELS,
    ORIGINS,
    QUESTIONS,
    IngestResult,
    ItemRating,
    LanguageItem,
    RowError,
    SurveyResponse,
    balanced_dataset,
    detection_rate,
    ingest_survey_csv,
    mean_rating,
    survey_items,
)
from .summary import SummaryReport, format_report_json, format_report_text, summarize

__all__ = [
    "TestResult",
    "chi2_2x2",
    "chi2_gof",
    "chi2_sf",
    "mann_whitney_u",
    "norm_sf",
    "t_test",
    "EXPERIENCE_LEVELS",
    "ORIGINS",
    "QUESTIONS",
    "IngestResult",
    "ItemRating",
    "LanguageItem",
    "RowError",
    "SurveyResponse",
    "balanced_dataset",
    "detection_rate",
    "ingest_survey_csv",
    "mean_rating",
    "survey_items",
    "SummaryReport",
    "format_report_json",
    "format_report_text",
    "summarize",
]
