"""HTTP/JSON facade over the dispute engine.

A desk tool, not a production service: sessions live in memory behind an LRU
cap with idle eviction, and there is no authentication or persistence.
"""

from __future__ import annotations

import threading
import time
import uuid
from collections import OrderedDict

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import afio
from .core import ArgSet
from .games import (DEFAULT_STATE_BUDGET, DisputeKind, DisputeSolver,
                    DisputeState, OPP, PRO, ResourceBudgetError,
                    STRONG_TENABILITY, TENABILITY, diagnose_move,
                    legal_opp_moves, legal_pro_moves)

IN_PROGRESS = "IN_PROGRESS"
PRO_WON = "PRO_WON"
OPP_WON = "OPP_WON"

SESSION_CAP = 256
IDLE_TTL_SECONDS = 3600.0


class ApiError(Exception):
    def __init__(self, status, code, reason, condition=None):
        super().__init__(reason)
        self.status = status
        self.payload = {"code": code, "reason": reason}
        if condition is not None:
            self.payload["condition"] = condition


class Session:
    def __init__(self, fw, kind, initial, human_role, budget):
        self.id = uuid.uuid4().hex
        self.framework = fw
        self.kind = kind
        self.human_role = human_role
        self.state = DisputeState(pro_commit=initial, opp_commit=fw.empty_set(),
                                  turn=OPP, move_index=1)
        self.history = [(PRO, initial.labels())]
        self.status = IN_PROGRESS
        self.solver = DisputeSolver(fw, kind, budget=budget)
        self.lock = threading.Lock()
        self.last_touched = time.monotonic()

    @property
    def engine_role(self):
        return OPP if self.human_role == PRO else PRO

    def _mover_has_move(self):
        gen = legal_pro_moves if self.state.turn == PRO else legal_opp_moves
        return next(iter(gen(self.framework, self.state, self.kind)), None) is not None

    def _apply(self, player, new_commit):
        s = self.state
        if player == PRO:
            self.state = DisputeState(new_commit, s.opp_commit, OPP, s.move_index + 1)
        else:
            self.state = DisputeState(s.pro_commit, new_commit, PRO, s.move_index + 1)
        self.history.append((player, new_commit.labels()))

    def _settle(self):
        """If the side to move is stuck, the game is over: last mover wins."""
        if self.status == IN_PROGRESS and not self._mover_has_move():
            self.status = PRO_WON if self.state.turn == OPP else OPP_WON

    def engine_step(self):
        """One engine reply if the game is live and it is the engine's turn."""
        self._settle()
        if self.status != IN_PROGRESS or self.state.turn != self.engine_role:
            return
        s = self.state
        m = self.solver.best_move_mask(s.pro_commit.mask, s.opp_commit.mask, s.turn)
        if m is None:
            self.status = PRO_WON if s.turn == OPP else OPP_WON
            return
        self._apply(s.turn, ArgSet(self.framework, m))
        self._settle()

    def human_step(self, add_labels):
        if self.status != IN_PROGRESS:
            raise ApiError(409, "finished", f"session is over: {self.status}")
        if self.state.turn != self.human_role:
            raise ApiError(409, "not_your_turn", "it is the engine's turn")
        try:
            add = self.framework.set_of(*add_labels)
        except KeyError as e:
            raise ApiError(422, "illegal_move",
                           f"unknown argument label: {e.args[0]}")
        ok, cond, reason = diagnose_move(self.framework, self.state, self.kind, add.mask)
        if not ok:
            raise ApiError(422, "illegal_move", reason, condition=cond)
        base = self.state.pro_commit if self.human_role == PRO else self.state.opp_commit
        self._apply(self.human_role, base | add)
        self.engine_step()

    def hint(self):
        if self.status != IN_PROGRESS:
            raise ApiError(409, "finished", f"session is over: {self.status}")
        s = self.state
        m = self.solver.best_move_mask(s.pro_commit.mask, s.opp_commit.mask, s.turn)
        base = s.pro_commit.mask if s.turn == PRO else s.opp_commit.mask
        suggested = ArgSet(self.framework, m & ~base).labels() if m is not None else []
        mover_wins = self.solver.mover_wins(s.pro_commit.mask, s.opp_commit.mask, s.turn)
        winner = s.turn if mover_wins else (PRO if s.turn == OPP else OPP)
        return {"suggested": suggested, "winner_if_optimal": winner}

    def to_json(self):
        return {
            "id": self.id,
            "status": self.status,
            "human_role": self.human_role,
            "turn": self.state.turn,
            "move_index": self.state.move_index,
            "kind": {"variant": self.kind.variant, "move_bound": self.kind.move_bound},
            "pro_commit": self.state.pro_commit.labels(),
            "opp_commit": self.state.opp_commit.labels(),
            "history": [{"player": p, "position": labels} for p, labels in self.history],
            "framework": {
                "arguments": list(self.framework.names),
                "attacks": [[self.framework.names[i], self.framework.names[j]]
                            for i, j in self.framework.attack_pairs()],
            },
        }


class SessionStore:
    """In-memory LRU of live sessions with idle eviction."""

    def __init__(self, cap=SESSION_CAP, ttl=IDLE_TTL_SECONDS):
        self.cap = cap
        self.ttl = ttl
        self.sessions = OrderedDict()
        self.lock = threading.Lock()

    def put(self, session):
        with self.lock:
            self._sweep()
            self.sessions[session.id] = session
            while len(self.sessions) > self.cap:
                self.sessions.popitem(last=False)

    def get(self, session_id):
        with self.lock:
            self._sweep()
            session = self.sessions.get(session_id)
            if session is None:
                raise ApiError(404, "unknown_session", f"no session {session_id!r}")
            self.sessions.move_to_end(session_id)
            session.last_touched = time.monotonic()
            return session

    def _sweep(self):
        now = time.monotonic()
        stale = [sid for sid, s in self.sessions.items()
                 if now - s.last_touched > self.ttl]
        for sid in stale:
            del self.sessions[sid]


def _parse_create(body, budget):
    if not isinstance(body, dict):
        raise ApiError(400, "bad_request", "body must be a JSON object")
    spec = body.get("framework")
    if not isinstance(spec, dict) or "format" not in spec:
        raise ApiError(400, "bad_request", "framework must be {format, text-or-name}")
    fmt = spec["format"]
    if fmt == "fixture":
        name = spec.get("name", spec.get("text"))
        try:
            fw = afio.get_fixture(name).framework
        except KeyError:
            raise ApiError(422, "unknown_fixture", f"unknown fixture: {name!r}")
    elif fmt in ("iccma", "apx"):
        try:
            fw = afio.parse_framework(spec.get("text", ""), fmt)
        except afio.ParseError as e:
            raise ApiError(400, "bad_framework", str(e))
    else:
        raise ApiError(400, "bad_request", f"unknown framework format {fmt!r}")
    kind_tag = body.get("kind", "ten")
    if kind_tag not in ("ten", "strong"):
        raise ApiError(400, "bad_request", "kind must be 'ten' or 'strong'")
    bound = body.get("bound")
    if bound is not None and (not isinstance(bound, int) or bound < 1):
        raise ApiError(400, "bad_request", "bound must be a positive integer")
    kind = DisputeKind(TENABILITY if kind_tag == "ten" else STRONG_TENABILITY, bound)
    human_role = body.get("human_role", OPP)
    if human_role not in (PRO, OPP):
        raise ApiError(400, "bad_request", "human_role must be 'pro' or 'opp'")
    labels = body.get("initial", [])
    if not isinstance(labels, list):
        raise ApiError(400, "bad_request", "initial must be a list of labels")
    try:
        initial = fw.set_of(*labels)
    except KeyError as e:
        raise ApiError(400, "bad_labels", f"unknown argument label: {e.args[0]}")
    if not fw.cf_mask(initial.mask):
        raise ApiError(400, "bad_initial",
                       "initial position is not conflict-free", condition=1)
    return Session(fw, kind, initial, human_role, budget)


def create_app(budget=DEFAULT_STATE_BUDGET, session_cap=SESSION_CAP,
               idle_ttl=IDLE_TTL_SECONDS):
    app = FastAPI(title="tenab dispute service")
    store = SessionStore(cap=session_cap, ttl=idle_ttl)

    @app.exception_handler(ApiError)
    async def api_error_handler(request: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status, content=exc.payload)

    @app.exception_handler(ResourceBudgetError)
    async def budget_handler(request: Request, exc: ResourceBudgetError):
        return JSONResponse(status_code=503,
                            content={"code": "budget_exceeded", "reason": str(exc)})

    @app.post("/v1/sessions", status_code=201)
    async def create_session(request: Request):
        body = await request.json()
        session = _parse_create(body, budget)
        with session.lock:
            session.engine_step()
        store.put(session)
        return session.to_json()

    @app.get("/v1/sessions/{session_id}")
    async def get_state(session_id: str):
        return store.get(session_id).to_json()

    @app.post("/v1/sessions/{session_id}/moves")
    async def post_move(session_id: str, request: Request):
        body = await request.json()
        if not isinstance(body, dict) or not isinstance(body.get("add"), list):
            raise ApiError(400, "bad_request", "body must be {add: [labels]}")
        session = store.get(session_id)
        with session.lock:
            session.human_step(body["add"])
            return session.to_json()

    @app.get("/v1/sessions/{session_id}/hint")
    async def get_hint(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return session.hint()

    @app.get("/v1/fixtures")
    async def list_fixtures():
        out = []
        for fx in afio.fixtures():
            out.append({
                "name": fx.name,
                "designated": fx.designated_label,
                "arguments": list(fx.framework.names),
                "attacks": [[fx.framework.names[i], fx.framework.names[j]]
                            for i, j in fx.framework.attack_pairs()],
                "dot": afio.write_dot(fx.framework,
                                      highlights=[(fx.designated_set(), "lightblue")]),
            })
        return {"fixtures": out}

    return app
