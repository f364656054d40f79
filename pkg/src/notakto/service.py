"""Minimal stateless JSON service over the engine, plus static file serving.

Endpoints:
    GET  /api/health    -> {"ok": true}
    POST /api/analyze   {"boards": [mask, ...]} ->
         {"outcome": "N"|"P", "value": "...", "winning_moves": [{"board": i, "cell": c}, ...]}
    POST /api/bestmove  {"boards": [mask, ...]} ->
         {"move": {"board": i, "cell": c} | null, "outcome": "N"|"P"}

Everything else under / serves static files from the configured root
(the web UI), falling back to a small placeholder page when no root is
configured.  Requests are independent: the full position travels in
every request body, so the service keeps no game state.
"""

from __future__ import annotations

import json
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import engine, monoid, quotient
from .oracle import Position

_PLACEHOLDER = """<!doctype html>
<html><head><title>notakto</title></head>
<body><h1>notakto analysis service</h1>
<p>No web UI assets configured. API endpoints:</p>
<ul><li>GET /api/health</li><li>POST /api/analyze</li><li>POST /api/bestmove</li></ul>
</body></html>
"""


class _RequestError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message


def _parse_boards(payload) -> Position:
    if not isinstance(payload, dict):
        raise _RequestError(400, "request body must be a JSON object")
    boards = payload.get("boards")
    if not isinstance(boards, list) or not boards:
        raise _RequestError(400, "'boards' must be a non-empty list of masks")
    masks = []
    for value in boards:
        if isinstance(value, bool) or not isinstance(value, int):
            raise _RequestError(400, f"mask {value!r} is not an integer")
        if not 0 <= value < 512:
            raise _RequestError(400, f"mask {value} out of range 0..511")
        masks.append(value)
    return Position(tuple(masks))


class _Handler(BaseHTTPRequestHandler):
    server: "NotaktoServer"

    def log_message(self, fmt, *args):  # keep test output quiet
        pass

    def _send_json(self, status: int, payload) -> None:
        body = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _read_payload(self):
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length)
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise _RequestError(400, f"malformed JSON: {exc}") from None

    def do_GET(self) -> None:
        if self.path == "/api/health":
            self._send_json(200, {"ok": True})
        elif self.path.startswith("/api/"):
            self._send_json(404, {"error": "not found"})
        else:
            self._send_static()

    def do_POST(self) -> None:
        try:
            if self.path == "/api/analyze":
                self._send_json(200, self._analyze())
            elif self.path == "/api/bestmove":
                self._send_json(200, self._bestmove())
            else:
                self._send_json(404, {"error": "not found"})
        except _RequestError as exc:
            self._send_json(exc.status, {"error": exc.message})

    def _analyze(self) -> dict:
        position = _parse_boards(self._read_payload())
        table = self.server.table
        value = quotient.position_value(position, table)
        moves = engine.winning_moves(position, table)
        return {
            "outcome": quotient.outcome_via_quotient(position, table).value,
            "value": monoid.render_element(value),
            "winning_moves": [{"board": m.board, "cell": m.cell} for m in moves],
        }

    def _bestmove(self) -> dict:
        position = _parse_boards(self._read_payload())
        rec = engine.recommend(position, self.server.table)
        move = None
        if rec.move is not None:
            move = {"board": rec.move.board, "cell": rec.move.cell}
        return {"move": move, "outcome": rec.outcome_now.value}

    def _send_static(self) -> None:
        root = self.server.static_root
        if root is None:
            if self.path in ("/", "/index.html"):
                body = _PLACEHOLDER.encode()
                self.send_response(200)
                self.send_header("Content-Type", "text/html; charset=utf-8")
                self.send_header("Content-Length", str(len(body)))
                self.end_headers()
                self.wfile.write(body)
            else:
                self._send_json(404, {"error": "not found"})
            return
        relative = self.path.lstrip("/") or "index.html"
        target = (root / relative.split("?", 1)[0]).resolve()
        if not str(target).startswith(str(root.resolve())) or not target.is_file():
            self._send_json(404, {"error": "not found"})
            return
        content_type = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
        body = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)


class NotaktoServer(ThreadingHTTPServer):
    """Threaded HTTP server sharing one immutable value table."""

    daemon_threads = True

    def __init__(self, address, table: quotient.ValueTable, static_root=None):
        super().__init__(address, _Handler)
        self.table = table
        self.static_root = Path(static_root) if static_root else None

    @property
    def port(self) -> int:
        return self.server_address[1]


def serve(
    table: quotient.ValueTable,
    host: str = "127.0.0.1",
    port: int = 8000,
    static_root=None,
) -> NotaktoServer:
    """Create a server bound to (host, port); call serve_forever on it."""
    return NotaktoServer((host, port), table, static_root=static_root)
