"""JSON-over-HTTP facade for ontology browsing, storyset management,
enrichment queries, and negative controls.

Responses are pure functions of the loaded data, the request, and the
seed; the storyset registry is the only mutable state.
"""

from __future__ import annotations

import threading
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from themex.corpus import BOTH_LEVELS, Corpus, Level, Storyset
from themex.engine import (
    EnrichmentQuery,
    EnrichmentResult,
    enrich,
    negative_control,
)
from themex.errors import (
    EmptyTestSet,
    TestNotSubsetOfBackground,
    ThemexError,
    UnknownStory,
    UnknownStoryset,
    UnknownTheme,
)
from themex.ontology import ThemeOntology


class ApiError(Exception):
    def __init__(self, code: str, message: str, status: int):
        self.code = code
        self.message = message
        self.status = status
        super().__init__(message)


#: Engine/corpus error class -> HTTP status for request-body-driven routes.
_BODY_ERROR_STATUS = {
    "UnknownStory": 400,
    "UnknownStoryset": 400,
    "UnknownTheme": 400,
    "TestNotSubsetOfBackground": 400,
    "EmptyTestSet": 400,
    "InvalidParams": 400,
    "SampleTooLarge": 400,
}


class StorysetCreate(BaseModel):
    name: str
    story_ids: Optional[list[str]] = None
    collection: Optional[str] = None


class EnrichmentRequest(BaseModel):
    test: str
    background: str
    alpha: float = 0.05
    levels: list[str] = ["central", "peripheral"]
    include_latent: bool = True
    method: str = "both"
    top: Optional[int] = None
    min_K: int = 1


class NegativeControlRequest(BaseModel):
    background: str
    n: int
    trials: int
    alpha: float = 0.05
    seed: Optional[int] = None


def _result_json(r: EnrichmentResult) -> dict:
    return {
        "rank": r.rank,
        "theme": r.theme,
        "domain": r.domain,
        "k": r.k,
        "K": r.K,
        "n": r.n,
        "N": r.N,
        "p_value": r.p_value,
        "tfidf": r.tfidf,
        "significant": r.significant,
    }


def create_app(
    ontology: ThemeOntology,
    corpus: Corpus,
    storysets: dict[str, Storyset],
    seed: int = 42,
    persist_path: Optional[Path] = None,
    cors_origins: Optional[list[str]] = None,
) -> FastAPI:
    app = FastAPI(title="themex", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    registry: dict[str, Storyset] = dict(storysets)
    registry_lock = threading.Lock()

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"code": exc.code, "message": exc.message},
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"code": "MalformedBody", "message": str(exc.errors())},
        )

    def _body_guard(exc: ThemexError) -> ApiError:
        status = _BODY_ERROR_STATUS.get(exc.code, 400)
        return ApiError(exc.code, str(exc), status)

    def _get_storyset(name: str) -> Storyset:
        with registry_lock:
            if name in registry:
                return registry[name]
        by_tag = corpus.from_collection_tag(name)
        if len(by_tag):
            return by_tag
        raise UnknownStoryset(name)

    # --- routes ---

    @app.get("/api/v1")
    def index():
        return {
            "routes": sorted(
                {
                    f"{method} {route.path}"
                    for route in app.routes
                    if route.path.startswith("/api/v1")
                    for method in (route.methods or [])
                    if method not in ("HEAD", "OPTIONS")
                }
            )
        }

    @app.get("/api/v1/ontology/themes")
    def list_themes(
        domain: Optional[str] = None,
        q: Optional[str] = None,
        page: int = 1,
        per_page: int = 50,
    ):
        if page < 1 or per_page < 1:
            raise ApiError("InvalidParams", "page and per_page must be >= 1", 400)
        names = list(ontology)
        items = []
        for name in names:
            theme = ontology.get(name)
            if domain is not None and theme.domain.value != domain:
                continue
            if q is not None and q.lower() not in name.lower():
                continue
            items.append(
                {
                    "name": theme.name,
                    "domain": theme.domain.value,
                    "parent": theme.parent,
                    "definition": theme.definition,
                }
            )
        start = (page - 1) * per_page
        return {
            "total": len(items),
            "page": page,
            "per_page": per_page,
            "items": items[start: start + per_page],
        }

    @app.get("/api/v1/ontology/themes/{name}/subtree")
    def theme_subtree(name: str, depth: Optional[int] = None):
        try:
            return ontology.subtree(name, depth)
        except UnknownTheme as exc:
            raise ApiError(exc.code, str(exc), 404)

    @app.get("/api/v1/storysets")
    def list_storysets():
        with registry_lock:
            sets = sorted(registry.values(), key=lambda s: s.name)
        return [
            {"name": s.name, "size": len(s), "story_ids": list(s.story_ids)}
            for s in sets
        ]

    @app.post("/api/v1/storysets", status_code=201)
    def create_storyset(body: StorysetCreate):
        if not body.name:
            raise ApiError("InvalidParams", "storyset name must be nonempty", 400)
        if (body.story_ids is None) == (body.collection is None):
            raise ApiError(
                "InvalidParams",
                "provide exactly one of story_ids or collection",
                400,
            )
        try:
            if body.story_ids is not None:
                new = corpus.make_storyset(body.name, body.story_ids)
            else:
                tagged = corpus.from_collection_tag(body.collection)
                new = Storyset(body.name, tagged.story_ids)
        except ThemexError as exc:
            raise _body_guard(exc)
        with registry_lock:
            registry[new.name] = new
            if persist_path is not None:
                with open(persist_path, "a", encoding="utf-8") as fh:
                    for sid in new.story_ids:
                        fh.write(f"{new.name}\t{sid}\n")
        return {"name": new.name, "size": len(new), "story_ids": list(new.story_ids)}

    @app.get("/api/v1/stories/{story_id}")
    def get_story(story_id: str):
        try:
            story = corpus.story(story_id)
        except UnknownStory as exc:
            raise ApiError(exc.code, str(exc), 404)
        profile = corpus.profile(story_id)
        def pairs(entries):
            return [
                {"theme": theme, "level": level.value}
                for theme, level in sorted(entries, key=lambda e: e[0])
            ]
        return {
            "id": story.id,
            "title": story.title,
            "collections": sorted(story.collections),
            "observed": pairs(profile.observed),
            "latent": pairs(profile.latent),
        }

    @app.post("/api/v1/enrichment")
    def run_enrichment(body: EnrichmentRequest):
        try:
            levels = frozenset(Level.from_label(lv) for lv in body.levels)
        except ValueError as exc:
            raise ApiError("InvalidParams", str(exc), 400)
        if body.method not in ("hypergeometric", "tfidf", "both"):
            raise ApiError("InvalidParams", f"unknown method {body.method!r}", 400)
        if not (0.0 < body.alpha < 1.0):
            raise ApiError("InvalidParams", "alpha must be in (0, 1)", 400)
        try:
            query = EnrichmentQuery(
                test=_get_storyset(body.test),
                background=_get_storyset(body.background),
                alpha=body.alpha,
                levels=levels or BOTH_LEVELS,
                include_latent=body.include_latent,
                method=body.method,
                top=body.top,
                min_K=body.min_K,
            )
            results = enrich(corpus, ontology, query)
        except ThemexError as exc:
            raise _body_guard(exc)
        return {
            "query": body.model_dump(),
            "results": [_result_json(r) for r in results],
        }

    @app.post("/api/v1/negative-control")
    def run_negative_control(body: NegativeControlRequest):
        if body.trials < 1:
            raise ApiError("InvalidParams", "trials must be >= 1", 400)
        try:
            report = negative_control(
                corpus,
                ontology,
                _get_storyset(body.background),
                n=body.n,
                trials=body.trials,
                alpha=body.alpha,
                seed=seed if body.seed is None else body.seed,
            )
        except ThemexError as exc:
            raise _body_guard(exc)
        return {
            "trials": report.trials,
            "n": report.n,
            "alpha": report.alpha,
            "counts": list(report.counts),
            "mean": report.mean,
            "sd": report.sd,
            "sd_defined": report.sd_defined,
            "seed": report.seed,
        }

    return app
