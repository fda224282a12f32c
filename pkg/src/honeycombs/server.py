"""Stateless JSON-over-HTTP service exposing the library to the web UI."""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .diagram import to_diagram
from .errors import HoneycombError, OutOfConeError
from .fibers import decide_sum, decide_triple, largest_lift, spectrum
from .graph import build_graph
from .honeycomb import (boundary, breathe, from_json, max_breathing,
                        to_json, vertex_position)
from .counting import tensor_multiplicity
from .plane import project_to_screen, rat, rat_str
from .render import RAY_DISPLAY_LENGTH, render_svg


def _spectrum_from(data, key):
    if key not in data:
        raise ValueError(f"missing field {key!r}")
    return spectrum([rat(v) for v in data[key]])


def _screen_geometry(h) -> dict:
    d = to_diagram(h)
    segments = []
    for start, end, mult in d.segments:
        x1, y1 = project_to_screen(start)
        x2, y2 = project_to_screen(end)
        segments.append({"x1": x1, "y1": y1, "x2": x2, "y2": y2,
                         "multiplicity": mult})
    rays = []
    for start, direction, mult in d.rays:
        tip = start.translate(direction, RAY_DISPLAY_LENGTH)
        x1, y1 = project_to_screen(start)
        x2, y2 = project_to_screen(tip)
        rays.append({"x1": x1, "y1": y1, "x2": x2, "y2": y2,
                     "multiplicity": mult})
    return {"segments": segments, "rays": rays}


def _boundary_json(h) -> dict:
    bt = boundary(h)
    return {"lam": [rat_str(v) for v in bt.lam],
            "mu": [rat_str(v) for v in bt.mu],
            "nu": [rat_str(v) for v in bt.nu]}


def _hexagon_ranges(h) -> list[dict]:
    out = []
    for hx in h.graph.hexagons:
        t_min, t_max = max_breathing(h, hx)
        out.append({"id": hx.id,
                    "t_min": rat_str(t_min) if t_min is not None else None,
                    "t_max": rat_str(t_max) if t_max is not None else None})
    return out


def _violated_fact(lam, mu, nu) -> dict | None:
    """A human-checkable reason for infeasibility of the sum relation."""
    trace = lam.trace + mu.trace - nu.trace
    if trace != 0:
        return {"kind": "trace", "value": rat_str(trace)}
    if len(lam) <= 4:
        from .horn import horn_inequalities, evaluate
        for ineq in horn_inequalities(len(lam)):
            if not evaluate(ineq, lam, mu, nu):
                return {"kind": "horn", "inequality": ineq.human(),
                        **ineq.machine()}
    return None


def handle_feasible(data: dict) -> dict:
    lam = _spectrum_from(data, "lam")
    mu = _spectrum_from(data, "mu")
    nu = _spectrum_from(data, "nu")
    mode = data.get("mode", "sum")
    if mode == "triple":
        feasible = decide_triple(lam, mu, nu)
        reason = None
    else:
        feasible = decide_sum(lam, mu, nu)
        reason = None if feasible else _violated_fact(lam, mu, nu)
    out = {"feasible": feasible}
    if not feasible and reason is not None:
        out["reason"] = reason
    return out


def handle_lrcoeff(data: dict) -> dict:
    lam = [rat(v) for v in data["lam"]]
    mu = [rat(v) for v in data["mu"]]
    nu = [rat(v) for v in data["nu"]]
    return {"multiplicity": str(tensor_multiplicity(lam, mu, nu))}


def handle_lift(data: dict) -> dict:
    lam = _spectrum_from(data, "lam")
    mu = _spectrum_from(data, "mu")
    nu = _spectrum_from(data, "nu")
    mode = data.get("mode", "triple")
    target = nu.negate() if mode == "sum" else nu
    if not decide_triple(lam, mu, target):
        out = {"feasible": False}
        if mode == "sum":
            reason = _violated_fact(lam, mu, nu)
            if reason:
                out["reason"] = reason
        return out
    h = largest_lift(lam, mu, target, seed=int(data.get("seed", 0)))
    return {"feasible": True,
            "honeycomb": to_json(h),
            "boundary": _boundary_json(h),
            "screen": _screen_geometry(h),
            "hexagons": _hexagon_ranges(h)}


def handle_breathe(data: dict) -> dict:
    h = from_json(data["honeycomb"])
    hexagon = data["hexagon"]
    t = rat(data.get("t", "0"))
    try:
        out = breathe(h, hexagon, t)
    except OutOfConeError as e:
        return {"error": "OUT_OF_CONE", "max_t": rat_str(e.max_t),
                "blocking_edge": e.blocking_edge}
    return {"honeycomb": to_json(out),
            "boundary": _boundary_json(out),
            "screen": _screen_geometry(out),
            "hexagons": _hexagon_ranges(out)}


def handle_render(data: dict) -> str:
    h = from_json(data["honeycomb"])
    return render_svg(h, origin=bool(data.get("origin", False)))


def handle_graph(n: int) -> dict:
    g = build_graph(n)
    return {"n": n,
            "vertices": len(g.vertices),
            "internal_edges": len(g.internal_edges),
            "boundary_edges": len(g.boundary_edges),
            "hexagons": len(g.hexagons),
            "vertex_ids": [v.key() for v in g.vertices],
            "edge_ids": list(g.all_edges),
            "hexagon_ids": [hx.id for hx in g.hexagons]}


class _Handler(BaseHTTPRequestHandler):
    server_version = "honeycombs/0.1"

    def log_message(self, fmt, *args):  # quiet by default
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    def _send(self, code: int, body: bytes, content_type: str) -> None:
        self.send_response(code)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, code: int, payload: dict) -> None:
        self._send(code, json.dumps(payload).encode(),
                   "application/json")

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        url = urlparse(self.path)
        if url.path == "/api/graph":
            try:
                n = int(parse_qs(url.query).get("n", ["3"])[0])
                if n < 1:
                    raise ValueError("n must be >= 1")
                self._send_json(200, handle_graph(n))
            except ValueError as e:
                self._send_json(400, {"code": "BAD_REQUEST",
                                      "message": str(e)})
            return
        if url.path == "/" or url.path == "/index.html":
            self._send(200, _INDEX_FALLBACK.encode(), "text/html")
            return
        self._send_json(404, {"code": "NOT_FOUND",
                              "message": url.path})

    def do_POST(self):
        url = urlparse(self.path)
        routes = {"/api/feasible": handle_feasible,
                  "/api/lrcoeff": handle_lrcoeff,
                  "/api/lift": handle_lift,
                  "/api/breathe": handle_breathe}
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length)
            data = json.loads(raw or b"{}")
            if not isinstance(data, dict):
                raise json.JSONDecodeError("object required", "", 0)
        except (json.JSONDecodeError, ValueError) as e:
            self._send_json(400, {"code": "BAD_JSON", "message": str(e)})
            return
        try:
            if url.path == "/api/render":
                svg = handle_render(data)
                self._send(200, svg.encode(), "image/svg+xml")
                return
            handler = routes.get(url.path)
            if handler is None:
                self._send_json(404, {"code": "NOT_FOUND",
                                      "message": url.path})
                return
            self._send_json(200, handler(data))
        except (ValueError, KeyError, HoneycombError) as e:
            self._send_json(400, {"code": "BAD_REQUEST", "message": str(e)})
        except Exception as e:  # pragma: no cover - invariant breaches
            self._send_json(500, {"code": "INTERNAL", "message": str(e)})


_INDEX_FALLBACK = """<!doctype html>
<html><head><title>honeycombs</title></head>
<body><p>honeycombs API: POST /api/feasible /api/lrcoeff /api/lift
/api/breathe /api/render; GET /api/graph?n=3</p></body></html>
"""


def make_server(host: str = "127.0.0.1",
                port: int = 8621) -> ThreadingHTTPServer:
    return ThreadingHTTPServer((host, port), _Handler)


def serve(host: str = "127.0.0.1", port: int = 8621,
          verbose: bool = True) -> None:
    httpd = make_server(host, port)
    httpd.verbose = verbose
    print(f"serving on http://{host}:{port}")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
