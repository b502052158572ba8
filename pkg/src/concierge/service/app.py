"""HTTP session service wrapping the dialog engine.

The service adds no reasoning of its own: every turn goes through
``DialogEngine.run_turn`` exactly as the CLI does.  Turns on one
session are serialized by the store's per-session lock; distinct
sessions proceed concurrently against the shared immutable bundle.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from concierge.dialog import DialogEngine, TurnResult
from concierge.egc.emotions import SituationFlags
from concierge.errors import (
    ConciergeError,
    EmptyUtteranceError,
    NotFoundError,
    SessionIntegrityError,
    ValidationError,
)
from concierge.service import schemas
from concierge.store.bundle import default_data_dir, load_bundle
from concierge.store.sessions import SessionStore

DATA_ENV = "CONCIERGE_DATA"
ADDR_ENV = "CONCIERGE_ADDR"
API_PREFIX = "/api/v1"


def resolve_data_dir(data_dir: str | Path | None = None) -> Path:
    if data_dir is not None:
        return Path(data_dir)
    env = os.environ.get(DATA_ENV)
    return Path(env) if env else default_data_dir()


def _error(status: int, code: str, message: str, detail: str | None = None) -> JSONResponse:
    body = schemas.ErrorModel(code=code, message=message, detail=detail)
    return JSONResponse(status_code=status, content=body.model_dump())


def turn_response(result: TurnResult) -> schemas.TurnResponse:
    return schemas.TurnResponse(
        reply=result.reply,
        directive=result.directive_kind,
        case_route=result.parsed.case_route,
        emotion=schemas.EmotionModel(
            emotion=result.emotion.emotion.value if result.emotion.emotion else None,
            valence=result.emotion.valence.value,
            intensity=result.emotion.intensity,
        ),
        profile=result.profile,
        mood=result.mood,
        recommendations=[
            schemas.RecommendationModel(
                kind=r.kind,
                id=r.id,
                name=r.name,
                strength=r.strength,
                fired_rules=list(r.fired_rules),
                rationale=r.rationale,
            )
            for r in result.recommendations
        ],
        taboo=result.taboo,
        fired_rules=result.fired_rules,
    )


def create_app(
    data_dir: str | Path | None = None,
    sessions_dir: str | Path | None = None,
    threshold: float = 0.1,
) -> FastAPI:
    data_path = resolve_data_dir(data_dir)
    bundle = load_bundle(data_path)
    if sessions_dir is None:
        sessions_dir = data_path.parent / "sessions"
    store = SessionStore(sessions_dir)
    engine = DialogEngine(bundle, threshold=threshold)

    app = FastAPI(title="emotion concierge", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.bundle = bundle
    app.state.store = store
    app.state.engine = engine

    @app.exception_handler(ConciergeError)
    def _handle(request: Request, exc: ConciergeError):
        if isinstance(exc, NotFoundError):
            return _error(404, "not-found", str(exc))
        if isinstance(exc, EmptyUtteranceError):
            return _error(400, "empty-utterance", str(exc))
        if isinstance(exc, SessionIntegrityError):
            return _error(409, "session-integrity", str(exc))
        if isinstance(exc, ValidationError):
            return _error(400, "validation", str(exc))
        return _error(400, "concierge-error", str(exc))

    @app.post(f"{API_PREFIX}/sessions", response_model=schemas.CreateSessionResponse, status_code=201)
    def create_session(req: schemas.CreateSessionRequest | None = None):
        person = req.person_id if req else None
        state = store.create(person_id=person, mood=bundle.mstn.initial_state)
        return schemas.CreateSessionResponse(
            session_id=state.session_id, mood=state.mood, person_id=state.person_id
        )

    @app.post(f"{API_PREFIX}/sessions/{{session_id}}/utterances", response_model=schemas.TurnResponse)
    def post_utterance(session_id: str, req: schemas.UtteranceRequest):
        flags = SituationFlags(**req.flags.model_dump()) if req.flags else None
        with store.lock_for(session_id):
            state = store.load(session_id)
            result = engine.run_turn(state, req.text, flags)
            store.save(state)
        store.append_turn(session_id, state.history[-1])
        return turn_response(result)

    @app.get(f"{API_PREFIX}/sessions/{{session_id}}", response_model=schemas.SessionView)
    def get_session(session_id: str):
        state = store.load(session_id)
        return schemas.SessionView(
            session_id=state.session_id,
            person_id=state.person_id,
            mood=state.mood,
            profile=state.profile,
            taboo=state.taboo,
            turns=len(state.history),
            history=[
                schemas.TurnSummaryModel(
                    utterance=t.utterance,
                    case_route=t.case_route,
                    emotion=t.emotion,
                    valence=t.valence,
                    intensity=t.intensity,
                    mood_after=t.mood_after,
                    reply=t.reply,
                    fired_rules=t.fired_rules,
                    recommendations=[schemas.RecommendationModel(**r) for r in t.recommendations],
                )
                for t in state.history
            ],
        )

    @app.get(f"{API_PREFIX}/sessions", response_model=list[str])
    def list_sessions():
        return store.list_ids()

    @app.delete(f"{API_PREFIX}/sessions/{{session_id}}", status_code=204)
    def delete_session(session_id: str):
        store.delete(session_id)

    @app.get(f"{API_PREFIX}/catalog", response_model=schemas.CatalogResponse)
    def get_catalog():
        summary = bundle.summary()
        return schemas.CatalogResponse(
            spots=[schemas.CatalogSpotModel(**s) for s in summary["spots"]],
            foods=[schemas.CatalogItemModel(**f) for f in summary["foods"]],
            gifts=[schemas.CatalogItemModel(**g) for g in summary["gifts"]],
        )

    return app
