"""HTTP facade over the solver: stateless analysis endpoints plus in-memory
game sessions, and the static explorer bundle at the root."""

from __future__ import annotations

import os
import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException, Query, Response
from fastapi.responses import HTMLResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .iso import DEFAULT_BOUND
from .positions import (
    Cell,
    Position,
    canonicalize,
    cell_for_move,
    chomp_at,
    is_valid_cell,
    parse_position,
    volume,
)
from .reports import iso_report, solve_report
from .rules import NormalizedRule, make_rule, normalize, parse_rule
from .solver import (
    OrdinalTable,
    ordinal_table,
    solution_representative,
    table_to_csv,
    table_to_json,
)

MAX_TABLE_VOLUME = 64  # keeps a single request from building a huge table

_PLACEHOLDER = """<!doctype html>
<html><head><title>chomplab</title></head>
<body><h1>chomplab service</h1>
<p>The explorer bundle is not built. The JSON API lives under /api/.</p>
</body></html>"""


def default_static_dir() -> str | None:
    here = os.path.dirname(os.path.abspath(__file__))
    for base in (os.getcwd(), os.path.join(here, "..", "..", "..")):
        cand = os.path.abspath(os.path.join(base, "frontend", "dist"))
        if os.path.isdir(cand):
            return cand
    return None


class NewGameBody(BaseModel):
    rule: str | list[float]
    position: str | list[int]
    humanSeats: list[int] = []


class MoveBody(BaseModel):
    row: int
    col: int


@dataclass
class GameSession:
    id: str
    raw_scores: tuple[float, ...]
    rule: NormalizedRule
    table: OrdinalTable
    human_seats: frozenset[int]
    start: Position
    position: Position
    to_move: int
    moves: list[dict] = field(default_factory=list)
    finished: bool = False
    scores: tuple[int, ...] | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)


def _session_state(s: GameSession) -> dict:
    return {
        "id": s.id,
        "rule": list(s.raw_scores),
        "normalized": list(s.rule.perm),
        "players": s.rule.players,
        "seats": [
            {"seat": i, "kind": "human" if i in s.human_seats else "engine"}
            for i in range(1, s.rule.players + 1)
        ],
        "start": list(s.start),
        "position": list(s.position),
        "toMove": None if s.finished else s.to_move,
        "finished": s.finished,
        "moves": s.moves,
        "scores": None if s.scores is None else list(s.scores),
    }


def _advance_engines(s: GameSession) -> None:
    """Let engine seats move until a human is on turn or the game ends."""
    from .play import final_scores

    while s.position and s.to_move not in s.human_seats:
        nxt = solution_representative(s.rule, s.position, s.table)
        cell = cell_for_move(s.position, nxt)
        s.moves.append({"seat": s.to_move, "row": cell.row, "col": cell.col,
                        "result": list(nxt)})
        s.position = nxt
        s.to_move = s.to_move % s.rule.players + 1
    if not s.position:
        s.finished = True
        s.scores = final_scores(s.rule, s.moves[-1]["seat"])


def _parse_rule_input(raw: str | list[float]):
    if isinstance(raw, str):
        return parse_rule(raw)
    cleaned = [int(x) if float(x).is_integer() else float(x) for x in raw]
    return make_rule(cleaned)


def _parse_position_input(raw: str | list[int]) -> Position:
    if isinstance(raw, str):
        return parse_position(raw)
    return canonicalize(tuple(int(x) for x in raw))


def create_app(static_dir: str | None = None,
               max_table_volume: int = MAX_TABLE_VOLUME) -> FastAPI:
    app = FastAPI(title="chomplab", version="0.1.0")
    sessions: dict[str, GameSession] = {}
    sessions_lock = threading.Lock()

    def fail(status: int, reason: str):
        raise HTTPException(status_code=status, detail=reason)

    @app.get("/api/solve")
    def api_solve(rule: str = Query(...), position: str = Query(...)):
        try:
            if volume(parse_position(position)) > max_table_volume:
                fail(422, f"position volume exceeds the budget {max_table_volume}")
            return solve_report(rule, position)
        except ValueError as exc:
            fail(422, str(exc))

    @app.get("/api/table")
    def api_table(rule: str = Query(...), volume_: int = Query(..., alias="volume"),
                  format: str = Query("json")):
        try:
            if volume_ > max_table_volume:
                fail(422, f"volume exceeds the budget {max_table_volume}")
            ranked = normalize(parse_rule(rule))
            table = ordinal_table(ranked, volume_)
        except ValueError as exc:
            fail(422, str(exc))
        if format == "csv":
            return Response(table_to_csv(table), media_type="text/csv")
        return Response(table_to_json(table), media_type="application/json")

    @app.get("/api/iso")
    def api_iso(f: str = Query(...), g: str = Query(...),
                volume_: int = Query(DEFAULT_BOUND, alias="volume")):
        try:
            if volume_ > max_table_volume:
                fail(422, f"volume exceeds the budget {max_table_volume}")
            return iso_report(f, g, volume_)
        except ValueError as exc:
            fail(422, str(exc))

    @app.get("/api/rules/normalize")
    def api_normalize(scores: str = Query(...)):
        try:
            return list(normalize(parse_rule(scores)).perm)
        except ValueError as exc:
            fail(422, str(exc))

    @app.post("/api/game")
    def api_new_game(body: NewGameBody):
        try:
            raw = _parse_rule_input(body.rule)
            ranked = normalize(raw)
            start = _parse_position_input(body.position)
        except ValueError as exc:
            fail(422, str(exc))
        if not start:
            fail(422, "cannot start from the empty position")
        if volume(start) > max_table_volume:
            fail(422, f"start volume exceeds the budget {max_table_volume}")
        humans = frozenset(body.humanSeats)
        if not humans <= set(range(1, ranked.players + 1)):
            fail(422, f"human seats must be within 1..{ranked.players}")
        session = GameSession(
            id=uuid.uuid4().hex,
            raw_scores=raw.scores,
            rule=ranked,
            table=ordinal_table(ranked, volume(start)),
            human_seats=humans,
            start=start,
            position=start,
            to_move=1,
        )
        with session.lock:
            _advance_engines(session)
            state = _session_state(session)
        with sessions_lock:
            sessions[session.id] = session
        return state

    def _get_session(game_id: str) -> GameSession:
        with sessions_lock:
            session = sessions.get(game_id)
        if session is None:
            fail(404, f"no game session {game_id}")
        return session

    @app.get("/api/game/{game_id}")
    def api_get_game(game_id: str):
        session = _get_session(game_id)
        with session.lock:
            return _session_state(session)

    @app.post("/api/game/{game_id}/move")
    def api_move(game_id: str, body: MoveBody):
        session = _get_session(game_id)
        with session.lock:
            if session.finished:
                fail(422, "the game is already finished")
            if session.to_move not in session.human_seats:
                fail(422, f"seat {session.to_move} is an engine seat")
            cell = Cell(body.row, body.col)
            if not is_valid_cell(session.position, cell):
                fail(422, f"cell {body.row} {body.col} is outside the board")
            nxt = chomp_at(session.position, cell)
            session.moves.append({"seat": session.to_move, "row": cell.row,
                                  "col": cell.col, "result": list(nxt)})
            session.position = nxt
            session.to_move = session.to_move % session.rule.players + 1
            if not session.position:
                from .play import final_scores

                session.finished = True
                session.scores = final_scores(session.rule,
                                              session.moves[-1]["seat"])
            else:
                _advance_engines(session)
            return _session_state(session)

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:
        @app.get("/", response_class=HTMLResponse)
        def index() -> str:
            return _PLACEHOLDER

    return app
