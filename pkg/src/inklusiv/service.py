"""HTTP checking service: a thin FastAPI layer over the engine.

Environment variables: ``INKLUSIV_DATA_DIR`` (data directory),
``INKLUSIV_CACHE_CAPACITY`` (sentence cache size).
"""

from __future__ import annotations

import os
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .engine import ENGINE_VERSION, Engine, load_engine_data
from .rewrite import StyleError, StylePreference

DEFAULT_MAX_TEXT = 100_000


class StyleModel(BaseModel):
    mode: str
    gender_char: Optional[str] = None


class CheckRequest(BaseModel):
    text: str
    style: StyleModel


class AlternativeModel(BaseModel):
    sentence_text: str
    replacement: str
    style: str
    unverified: bool


class SuggestionModel(BaseModel):
    span: tuple[int, int]
    exclusive_phrase: str
    alternatives: list[AlternativeModel]
    explanation: str
    alternatives_unavailable: bool


class CheckResponse(BaseModel):
    suggestions: list[SuggestionModel]
    engine_version: str = ENGINE_VERSION


class CacheStats(BaseModel):
    hits: int
    misses: int
    size: int


def create_app(engine: Engine | None = None,
               max_text_length: int = DEFAULT_MAX_TEXT) -> FastAPI:
    if engine is None:
        data_dir = os.environ.get("INKLUSIV_DATA_DIR") or None
        capacity = int(os.environ.get("INKLUSIV_CACHE_CAPACITY", "4096"))
        engine = Engine(load_engine_data(data_dir), cache_capacity=capacity)

    app = FastAPI(title="inklusiv", version=ENGINE_VERSION)
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    app.state.engine = engine

    @app.get("/api/v1/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/api/v1/cache")
    def cache_stats() -> CacheStats:
        cache = engine.cache
        return CacheStats(hits=cache.hits, misses=cache.misses, size=len(cache))

    @app.post("/api/v1/check", response_model=CheckResponse)
    def check(req: CheckRequest) -> CheckResponse:
        if len(req.text) > max_text_length:
            raise HTTPException(status_code=413,
                                detail=f"text exceeds {max_text_length} characters")
        try:
            style = StylePreference(mode=req.style.mode,
                                    gender_char=req.style.gender_char)
        except StyleError as e:
            raise HTTPException(status_code=422, detail={
                "field": "style", "message": str(e)})
        items = engine.check(req.text, style)
        return CheckResponse(suggestions=[
            SuggestionModel(
                span=item.span,
                exclusive_phrase=item.exclusive_phrase,
                alternatives=[AlternativeModel(
                    sentence_text=a.sentence_text,
                    replacement=a.replacement,
                    style=a.style,
                    unverified=a.unverified,
                ) for a in item.alternatives],
                explanation=item.explanation,
                alternatives_unavailable=item.alternatives_unavailable,
            ) for item in items
        ])

    return app
