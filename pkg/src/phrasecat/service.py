"""HTTP service: catalogue browsing, search, rendering, lint, bulletins.

The wire format is a direct projection of the library's document
schemas; handlers only add the catalogue version stamp and the error
envelope. Non-2xx responses always carry exactly one error object:
``{"httpStatus", "code", "detail", "path"?, ...}``.

The catalogue is loaded read-only at startup; an admin endpoint reloads
it under a single-writer lock and swaps the reference atomically, so
in-flight reads finish against the version they started with.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import catfile
from .lint import lint as lint_catalogue
from .search import build_index, search as search_index
from .bulletin import BulletinStore, bulletin_from_json, bulletin_to_json, validate_bulletin
from .errors import (
    BulletinInvalid,
    BulletinNotFoundError,
    BulletinStoreError,
    CatalogueFormatError,
    SelectionInvalid,
    UnknownPhraseError,
)
from .model import Catalogue, Slot, validate_selection
from .render import render_all


class ApiError(Exception):
    def __init__(self, http_status: int, code: str, detail: str, path: "str | None" = None, extra: "dict | None" = None):
        super().__init__(detail)
        self.http_status = http_status
        self.code = code
        self.detail = detail
        self.path = path
        self.extra = extra or {}

    def response(self) -> JSONResponse:
        body = {"httpStatus": self.http_status, "code": self.code, "detail": self.detail}
        if self.path is not None:
            body["path"] = self.path
        body.update(self.extra)
        return JSONResponse(status_code=self.http_status, content=body)


class _State:
    """Shared service state; writers (reload, bulletin store) serialize
    on the lock, readers pick up the current catalogue reference."""

    def __init__(self, catalogue_path: Path, bulletin_dir: Path, search_language: "str | None"):
        self.catalogue_path = catalogue_path
        self.store = BulletinStore(bulletin_dir)
        self.write_lock = threading.Lock()
        self.catalogue: Catalogue = parse_file(catalogue_path)
        self.search_language = search_language or self.catalogue.source_language
        self.index = build_index(self.catalogue, self.search_language)

    def reload(self) -> Catalogue:
        with self.write_lock:
            catalogue = parse_file(self.catalogue_path)
            index = build_index(catalogue, self.search_language)
            self.catalogue = catalogue
            self.index = index
            return catalogue


def parse_file(path: Path) -> Catalogue:
    return catfile.parse_catalogue(path.read_bytes())


async def _json_body(request: Request) -> dict:
    raw = await request.body()
    if not raw:
        return {}
    try:
        body = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ApiError(400, "MALFORMED", f"request body is not valid JSON: {exc}")
    if not isinstance(body, dict):
        raise ApiError(400, "MALFORMED", "request body must be a JSON object")
    return body


def create_app(
    catalogue_path: "Path | str",
    bulletin_dir: "Path | str",
    search_language: "str | None" = None,
    ui_dir: "Path | str | None" = None,
) -> FastAPI:
    state = _State(Path(catalogue_path), Path(bulletin_dir), search_language)
    app = FastAPI(title="phrasecat", docs_url=None, redoc_url=None)
    app.state.phrasecat = state

    @app.exception_handler(ApiError)
    async def _api_error(request: Request, exc: ApiError):
        return exc.response()

    @app.exception_handler(StarletteHTTPException)
    async def _http_error(request: Request, exc: StarletteHTTPException):
        code = {404: "NOT_FOUND", 405: "METHOD_NOT_ALLOWED"}.get(exc.status_code, "ERROR")
        return ApiError(exc.status_code, code, str(exc.detail)).response()

    @app.get("/api/catalogue")
    def get_catalogue():
        c = state.catalogue
        return {
            "version": c.version,
            "source": c.source_language,
            "languages": list(c.languages),
        }

    @app.get("/api/phrases")
    def get_phrases(q: "str | None" = None, k: int = 10):
        c = state.catalogue
        if q:
            if k < 1:
                raise ApiError(422, "VALIDATION", "k must be >= 1")
            hits = search_index(state.index, q, k, expected_version=c.version)
            phrases = []
            for hit in hits:
                phrase = c.phrase(hit.phrase_id)
                phrases.append(
                    {
                        "id": phrase.id,
                        "label": phrase.label,
                        "segments": len(phrase.segments),
                        "score": hit.score,
                        "matchedTokens": hit.matched_tokens,
                    }
                )
        else:
            phrases = [
                {"id": p.id, "label": p.label, "segments": len(p.segments)}
                for p in c.phrases
            ]
        return {"catalogueVersion": c.version, "phrases": phrases}

    @app.get("/api/phrases/{phrase_id}")
    def get_phrase(phrase_id: str):
        c = state.catalogue
        try:
            phrase = c.phrase(phrase_id)
        except UnknownPhraseError as exc:
            raise ApiError(404, "NOT_FOUND", str(exc), path=phrase_id)
        # Inline the sub-segments this phrase can reach, so the composer
        # can build nested pull-downs without further round trips.
        reachable: dict[str, dict] = {}
        stack = [
            tok.sub_segment_id
            for seg in phrase.segments
            for opt in seg.options
            for content in opt.contents.values()
            for tok in content.all_tokens()
            if isinstance(tok, Slot)
        ]
        while stack:
            sub_id = stack.pop()
            if sub_id in reachable:
                continue
            sub = c.sub_segments[sub_id]
            reachable[sub_id] = catfile._sub_segment_obj(sub, c)
            stack.extend(
                tok.sub_segment_id
                for opt in sub.options
                for content in opt.contents.values()
                for tok in content.all_tokens()
                if isinstance(tok, Slot)
            )
        return {
            "catalogueVersion": c.version,
            "phrase": catfile._phrase_obj(phrase, c),
            "subSegments": {k: reachable[k] for k in sorted(reachable)},
        }

    @app.post("/api/render")
    async def post_render(request: Request):
        c = state.catalogue
        body = await _json_body(request)
        if "catalogueVersion" not in body or "selection" not in body:
            raise ApiError(422, "VALIDATION", "body must carry catalogueVersion and selection")
        if body["catalogueVersion"] != c.version:
            raise ApiError(
                409,
                "STALE_VERSION",
                f"request is for catalogue version {body['catalogueVersion']}, current is {c.version}",
            )
        try:
            selection = catfile.selection_from_json(body["selection"])
        except CatalogueFormatError as exc:
            raise ApiError(422, "VALIDATION", str(exc))
        try:
            rendered = render_all(c, selection)
        except UnknownPhraseError as exc:
            raise ApiError(404, "NOT_FOUND", str(exc), path=selection.phrase_id)
        except SelectionInvalid as exc:
            raise ApiError(
                422,
                "VALIDATION",
                "selection is incomplete or inconsistent",
                extra={
                    "report": [
                        {"code": i.code, "path": i.path, "message": i.message}
                        for i in exc.report.issues
                    ]
                },
            )
        return {
            "catalogueVersion": c.version,
            "texts": {lang: rendered[lang].text for lang in c.languages},
        }

    @app.post("/api/lint")
    async def post_lint(request: Request):
        body = await _json_body(request)
        strict = bool(body.get("strict", False))
        if "catalogue" in body:
            try:
                target = catfile.parse_catalogue(
                    json.dumps(body["catalogue"]), strict=False
                )
            except CatalogueFormatError as exc:
                raise ApiError(422, "VALIDATION", f"unparseable catalogue: {exc}")
            version = None
        else:
            target = state.catalogue
            version = target.version
        findings = lint_catalogue(target, strict=strict)
        return {
            "catalogueVersion": version,
            "findings": [
                {
                    "code": f.code,
                    "severity": f.severity,
                    "path": f.path,
                    "message": f.message,
                }
                for f in findings
            ],
        }

    @app.get("/api/bulletins")
    def list_bulletins():
        bulletins = state.store.list_bulletins()
        bulletins.reverse()  # newest first
        return {
            "bulletins": [
                {
                    "id": b.id,
                    "issuedAt": b.issued_at.isoformat(),
                    "edition": b.edition,
                    "descriptions": len(b.descriptions),
                }
                for b in bulletins
            ]
        }

    @app.post("/api/bulletins", status_code=201)
    async def store_bulletin(request: Request):
        c = state.catalogue
        body = await _json_body(request)
        try:
            bulletin = bulletin_from_json(body)
        except (CatalogueFormatError, BulletinStoreError) as exc:
            raise ApiError(422, "VALIDATION", str(exc))
        if bulletin.catalogue_version != c.version:
            raise ApiError(
                409,
                "STALE_VERSION",
                f"bulletin pins catalogue version {bulletin.catalogue_version}, current is {c.version}",
            )
        try:
            validate_bulletin(c, bulletin)
        except BulletinInvalid as exc:
            raise ApiError(422, "VALIDATION", "bulletin is invalid", extra={"problems": exc.problems})
        with state.write_lock:
            try:
                stored_id = state.store.store(bulletin)
            except BulletinStoreError as exc:
                raise ApiError(500, "STORE_FAILURE", str(exc))
        return {"id": stored_id}

    @app.get("/api/bulletins/{bulletin_id}")
    def get_bulletin(bulletin_id: str):
        try:
            bulletin = state.store.load(bulletin_id)
        except (BulletinNotFoundError, ValueError) as exc:
            raise ApiError(404, "NOT_FOUND", str(exc), path=bulletin_id)
        except BulletinStoreError as exc:
            raise ApiError(500, "STORE_FAILURE", str(exc))
        return bulletin_to_json(bulletin)

    @app.post("/api/admin/reload")
    def reload_catalogue():
        try:
            catalogue = state.reload()
        except (OSError, CatalogueFormatError) as exc:
            raise ApiError(422, "VALIDATION", f"reload failed: {exc}")
        return {"version": catalogue.version}

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
