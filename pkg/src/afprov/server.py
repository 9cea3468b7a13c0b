"""HTTP service for the explorer UI: session-scoped frameworks, solution
queries, and what-if edge suspension.

Sessions live in memory with TTL eviction. Requests within one session are
serialized behind a per-session lock (single-writer contract); all engine
calls are pure, so cross-session requests run freely in parallel. Responses
are rendered through the canonical JSON serializer, which keeps payloads for
identical session content byte-identical.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles
from starlette.concurrency import run_in_threadpool

from .core import ArgumentationFramework, Attack
from .critical import DEFAULT_CANDIDATE_BUDGET, Minimality, find_critical_sets
from .errors import (
    AfError,
    BudgetExceeded,
    InvalidToken,
    NoCriticalSetFound,
    ParseError,
    UnknownArgument,
)
from .formats import (
    DocumentLayout,
    canonical_json,
    grounded_to_jsonable,
    layout_to_jsonable,
    overlay_to_jsonable,
    stable_to_jsonable,
)
from .grounded import GroundedSolution, solve_grounded
from .layout import layout_grounded, layout_overlay
from .overlay import build_overlay
from .stable import StableSolution, enumerate_stable
from .workbench import load_af, pick_delta, pick_stable


@dataclass
class Session:
    """One loaded framework plus caches and the what-if suspension state."""

    id: str
    af: ArgumentationFramework
    created: float
    touched: float
    suspended: frozenset[Attack] = frozenset()
    lock: threading.Lock = field(default_factory=threading.Lock)
    cache: dict = field(default_factory=dict)

    def invalidate(self) -> None:
        self.cache.clear()

    def grounded(self) -> GroundedSolution:
        if "grounded" not in self.cache:
            self.cache["grounded"] = solve_grounded(self.af)
        return self.cache["grounded"]

    def stable(self) -> list[StableSolution]:
        if "stable" not in self.cache:
            self.cache["stable"] = enumerate_stable(self.af)
        return self.cache["stable"]

    def critical(self, index: int, minimality: Minimality, budget: int):
        key = ("critical", index, minimality)
        if key not in self.cache:
            sol = pick_stable(self.stable(), index)
            self.cache[key] = find_critical_sets(
                self.af, self.grounded(), sol, minimality, budget=budget
            )
        return self.cache[key]


class SessionStore:
    def __init__(self, ttl: float = 3600.0):
        self.ttl = ttl
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def _evict_expired(self, now: float) -> None:
        dead = [s.id for s in self._sessions.values() if now - s.touched > self.ttl]
        for sid in dead:
            del self._sessions[sid]

    def create(self, af: ArgumentationFramework) -> Session:
        now = time.monotonic()
        session = Session(id=uuid.uuid4().hex, af=af, created=now, touched=now)
        with self._lock:
            self._evict_expired(now)
            self._sessions[session.id] = session
        return session

    def get(self, sid: str) -> Session:
        now = time.monotonic()
        with self._lock:
            self._evict_expired(now)
            session = self._sessions.get(sid)
            if session is None:
                raise UnknownArgument(f"unknown session {sid!r}")
            session.touched = now
            return session

    def delete(self, sid: str) -> None:
        with self._lock:
            if sid not in self._sessions:
                raise UnknownArgument(f"unknown session {sid!r}")
            del self._sessions[sid]


def _json_response(payload, status: int = 200) -> Response:
    return Response(
        content=canonical_json(payload),
        status_code=status,
        media_type="application/json",
    )


def _error(status: int, code: str, detail: str) -> Response:
    return _json_response({"code": code, "detail": detail}, status)


def create_app(
    ui_dir: str | None = None,
    session_ttl: float = 3600.0,
    budget: int = DEFAULT_CANDIDATE_BUDGET,
) -> FastAPI:
    app = FastAPI(title="af-prov", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(ttl=session_ttl)
    app.state.sessions = store

    @app.exception_handler(AfError)
    def _af_error(request: Request, exc: AfError) -> Response:
        if isinstance(exc, BudgetExceeded):
            return _error(409, "budget_exceeded", str(exc))
        if isinstance(exc, NoCriticalSetFound):
            return _error(409, "no_critical_set", str(exc))
        if isinstance(exc, UnknownArgument):
            return _error(404, "not_found", str(exc))
        if isinstance(exc, (ParseError, InvalidToken)):
            return _error(400, "malformed", str(exc))
        return _error(400, "malformed", str(exc))

    def _af_payload(af: ArgumentationFramework) -> dict:
        return {
            "arguments": list(af.arguments),
            "attacks": [[e.attacker, e.target] for e in af.attacks],
        }

    @app.get("/healthz")
    def healthz() -> Response:
        return Response(content="ok", media_type="text/plain")

    @app.post("/sessions")
    async def create_session(request: Request) -> Response:
        try:
            body = await request.json()
        except Exception:
            return _error(400, "malformed", "request body must be JSON")
        if not isinstance(body, dict):
            return _error(400, "malformed", "request body must be a JSON object")
        try:
            if "af" in body:
                af = load_af(canonical_json(body["af"]), "json")
            elif "content" in body:
                af = load_af(str(body["content"]), str(body.get("format", "apx")))
            else:
                return _error(400, "malformed", "expected 'af' or 'content'")
        except (ParseError, InvalidToken) as exc:
            return _error(400, "malformed", str(exc))
        session = store.create(af)
        return _json_response({"id": session.id, "af": _af_payload(af)}, status=201)

    @app.delete("/sessions/{sid}")
    def delete_session(sid: str) -> Response:
        store.delete(sid)
        return Response(status_code=204)

    @app.get("/sessions/{sid}/grounded")
    def get_grounded(sid: str, layout: bool = False) -> Response:
        session = store.get(sid)
        with session.lock:
            sol = session.grounded()
            payload = {"af": _af_payload(session.af), "grounded": grounded_to_jsonable(sol)}
            if layout:
                payload["layout"] = layout_to_jsonable(
                    DocumentLayout(subject="grounded", layout=layout_grounded(sol))
                )
        return _json_response(payload)

    @app.get("/sessions/{sid}/stable")
    def get_stable(sid: str) -> Response:
        session = store.get(sid)
        with session.lock:
            payload = {"stable": [stable_to_jsonable(s) for s in session.stable()]}
        return _json_response(payload)

    @app.get("/sessions/{sid}/stable/{index}/critical")
    def get_critical(sid: str, index: int, minimality: str = "cardinality") -> Response:
        session = store.get(sid)
        try:
            mode = Minimality(minimality)
        except ValueError:
            return _error(400, "malformed", f"unknown minimality {minimality!r}")
        with session.lock:
            sets = session.critical(index, mode, budget)
            payload = {
                "stable_index": index,
                "minimality": mode.value,
                "sets": [
                    {
                        "delta_index": cs.delta_index,
                        "edges": [[e.attacker, e.target] for e in cs.edges],
                    }
                    for cs in sets
                ],
            }
        return _json_response(payload)

    @app.get("/sessions/{sid}/overlay/{index}/{delta}")
    def get_overlay(
        sid: str,
        index: int,
        delta: int,
        minimality: str = "cardinality",
        layout: bool = False,
    ) -> Response:
        session = store.get(sid)
        try:
            mode = Minimality(minimality)
        except ValueError:
            return _error(400, "malformed", f"unknown minimality {minimality!r}")
        with session.lock:
            sol = pick_stable(session.stable(), index)
            chosen = pick_delta(session.critical(index, mode, budget), delta)
            overlay = build_overlay(session.af, session.grounded(), sol, chosen)
            payload = {"overlay": overlay_to_jsonable(overlay)}
            if layout:
                payload["layout"] = layout_to_jsonable(
                    DocumentLayout(
                        subject="overlay",
                        layout=layout_overlay(overlay),
                        stable_index=index,
                        delta_index=delta,
                    )
                )
        return _json_response(payload)

    def _apply_suspension(session: Session, edges: frozenset[Attack]) -> dict:
        # runs on a worker thread; the lock serializes what-if state per session
        with session.lock:
            if edges != session.suspended:
                session.suspended = edges
                session.invalidate()
            key = ("suspend", edges)
            if key not in session.cache:
                modified = session.af.without_attacks(edges)
                sol = solve_grounded(modified)
                session.cache[key] = {
                    "suspended": [[e.attacker, e.target] for e in sorted(edges)],
                    "af": _af_payload(modified),
                    "grounded": grounded_to_jsonable(sol),
                    "layout": layout_to_jsonable(
                        DocumentLayout(subject="grounded", layout=layout_grounded(sol))
                    ),
                }
            return session.cache[key]

    @app.post("/sessions/{sid}/suspend")
    async def suspend(sid: str, request: Request) -> Response:
        session = store.get(sid)
        try:
            body = await request.json()
        except Exception:
            return _error(400, "malformed", "request body must be JSON")
        edges_raw = body.get("edges") if isinstance(body, dict) else None
        if not isinstance(edges_raw, list) or not all(
            isinstance(e, list) and len(e) == 2 for e in edges_raw
        ):
            return _error(400, "malformed", "expected {'edges': [[attacker, target], ...]}")
        edges = frozenset(Attack(str(a), str(t)) for a, t in edges_raw)
        stray = [str(e) for e in sorted(edges - session.af.attack_set)]
        if stray:
            return _error(400, "malformed", f"edges not in framework: {stray}")
        payload = await run_in_threadpool(_apply_suspension, session, edges)
        return _json_response(payload)

    if ui_dir:
        if not Path(ui_dir).is_dir():
            raise AfError(f"UI directory not found: {ui_dir}")
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
