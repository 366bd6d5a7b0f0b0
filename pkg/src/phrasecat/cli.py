"""Command-line interface: render, lint, count, search, eval, serve."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import catfile, counting
from .lint import SEVERITY_ERROR, lint as lint_catalogue
from .search import build_index, search as search_index
from .errors import PhrasecatError
from .evalstats import format_report_json, format_report_text, ingest_survey_csv, summarize
from .render import render as render_one, render_all


def _load_catalogue(path: str):
    return catfile.parse_catalogue(Path(path).read_bytes())


@click.group()
def main() -> None:
    """Multilingual phrase-catalogue toolkit."""


@main.command("render")
@click.option("--catalogue", "catalogue_path", required=True, type=click.Path(exists=True))
@click.option("--selection", "selection_path", required=True, type=click.Path(exists=True))
@click.option("--lang", default=None, help="Render one language instead of all.")
def render_cmd(catalogue_path: str, selection_path: str, lang: "str | None") -> None:
    """Render a selection document."""
    catalogue = _load_catalogue(catalogue_path)
    selection = catfile.selection_from_json(
        json.loads(Path(selection_path).read_text(encoding="utf-8"))
    )
    if lang is not None:
        click.echo(render_one(catalogue, selection, lang).text)
        return
    for code, sentence in render_all(catalogue, selection).items():
        click.echo(f"{code}: {sentence.text}")


@main.command("lint")
@click.argument("catalogue_path", type=click.Path(exists=True))
@click.option("--strict", is_flag=True, help="Also warn about unannotated agreement options.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def lint_cmd(catalogue_path: str, strict: bool, fmt: str) -> None:
    """Check a catalogue; exit 0 iff no errors."""
    catalogue = catfile.parse_catalogue(Path(catalogue_path).read_bytes(), strict=False)
    findings = lint_catalogue(catalogue, strict=strict)
    if fmt == "json":
        click.echo(
            json.dumps(
                [
                    {"code": f.code, "severity": f.severity, "path": f.path, "message": f.message}
                    for f in findings
                ],
                ensure_ascii=False,
                indent=2,
            )
        )
    else:
        for f in findings:
            click.echo(f"{f.severity}: {f.code} at {f.path or '<root>'}: {f.message}")
        if not findings:
            click.echo("clean")
    if any(f.severity == SEVERITY_ERROR for f in findings):
        sys.exit(1)


@main.command("count")
@click.argument("catalogue_path", type=click.Path(exists=True))
@click.option("--phrase", "phrase_id", default=None, help="Count one phrase only.")
def count_cmd(catalogue_path: str, phrase_id: "str | None") -> None:
    """Print exact selection counts."""
    catalogue = _load_catalogue(catalogue_path)
    if phrase_id is not None:
        click.echo(counting.count_selections(catalogue, phrase_id))
        return
    for phrase in catalogue.phrases:
        click.echo(f"{phrase.id}: {counting.count_selections(catalogue, phrase.id)}")
    click.echo(f"total: {counting.count_selections(catalogue)}")


@main.command("search")
@click.argument("catalogue_path", type=click.Path(exists=True))
@click.argument("query", nargs=-1, required=True)
@click.option("--lang", default=None, help="Language to index (default: source language).")
@click.option("--k", default=10, show_default=True)
def search_cmd(catalogue_path: str, query: "tuple[str, ...]", lang: "str | None", k: int) -> None:
    """Find phrases matching the query tokens."""
    catalogue = _load_catalogue(catalogue_path)
    index = build_index(catalogue, lang or catalogue.source_language)
    hits = search_index(index, " ".join(query), k)
    for hit in hits:
        phrase = catalogue.phrase(hit.phrase_id)
        click.echo(f"{hit.phrase_id}\t{hit.score:.4f}\t{phrase.label}")
    if not hits:
        click.echo("no phrases found", err=True)


@main.command("eval")
@click.option("--in", "survey_path", required=True, type=click.Path(exists=True))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def eval_cmd(survey_path: str, seed: int, fmt: str) -> None:
    """Summarize a survey CSV (detection rates, quality ratings, tests)."""
    result = ingest_survey_csv(Path(survey_path).read_bytes())
    for error in result.errors:
        click.echo(f"row {error.row}: {error.code}: {error.message}", err=True)
    report = summarize(list(result.responses), seed=seed)
    if fmt == "json":
        click.echo(format_report_json(report), nl=False)
    else:
        click.echo(format_report_text(report), nl=False)


@main.command("serve")
@click.option("--catalogue", "catalogue_path", required=True, type=click.Path(exists=True), envvar="PHRASECAT_CATALOGUE")
@click.option("--bulletins", "bulletin_dir", required=True, type=click.Path(), envvar="PHRASECAT_BULLETINS")
@click.option("--host", default="127.0.0.1", show_default=True, envvar="PHRASECAT_HOST")
@click.option("--port", default=8742, show_default=True, type=int, envvar="PHRASECAT_PORT")
@click.option("--search-lang", default=None, help="Search index language (default: source).", envvar="PHRASECAT_SEARCH_LANG")
@click.option("--ui", "ui_dir", default=None, type=click.Path(exists=True), help="Static UI directory to serve at /.", envvar="PHRASECAT_UI")
def serve_cmd(catalogue_path, bulletin_dir, host, port, search_lang, ui_dir) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    app = create_app(catalogue_path, bulletin_dir, search_language=search_lang, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port)


def _cli() -> None:
    try:
        main(standalone_mode=False)
    except PhrasecatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        sys.exit(130)


if __name__ == "__main__":
    _cli()
