import json
import threading
import urllib.error
import urllib.request

import pytest

from honeycombs.server import make_server


@pytest.fixture(scope="module")
def server_port():
    srv = make_server("127.0.0.1", 0)
    port = srv.server_address[1]
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    yield port
    srv.shutdown()
    srv.server_close()


def _post(port, path, payload):
    req = urllib.request.Request(
        f"http://127.0.0.1:{port}{path}",
        data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"})
    with urllib.request.urlopen(req) as resp:
        return resp.status, resp.headers.get_content_type(), resp.read()


def _get(port, path):
    with urllib.request.urlopen(f"http://127.0.0.1:{port}{path}") as resp:
        return resp.status, json.loads(resp.read())


def test_graph_endpoint(server_port):
    status, payload = _get(server_port, "/api/graph?n=3")
    assert status == 200
    assert (payload["vertices"], payload["internal_edges"],
            payload["boundary_edges"], payload["hexagons"]) == (9, 9, 9, 1)
    assert "hex:1,1" in payload["hexagon_ids"]


def test_feasible_endpoint(server_port):
    status, _, body = _post(server_port, "/api/feasible",
                            {"lam": ["3"], "mu": ["4"], "nu": ["7"]})
    assert status == 200 and json.loads(body) == {"feasible": True}
    status, _, body = _post(server_port, "/api/feasible",
                            {"lam": ["3"], "mu": ["4"], "nu": ["5"]})
    payload = json.loads(body)
    assert status == 200 and payload["feasible"] is False
    assert payload["reason"]["kind"] == "trace"


def test_feasible_horn_reason(server_port):
    status, _, body = _post(server_port, "/api/feasible",
                            {"lam": ["3", "0"], "mu": ["4", "0"],
                             "nu": ["8", "-1"]})
    payload = json.loads(body)
    assert payload["feasible"] is False
    assert payload["reason"]["kind"] == "horn"


def test_lift_and_breathe_round_trip(server_port):
    status, _, body = _post(server_port, "/api/lift",
                            {"lam": ["2", "1", "0"], "mu": ["2", "1", "0"],
                             "nu": ["-1", "-2", "-3"]})
    lift = json.loads(body)
    assert status == 200 and lift["feasible"]
    assert lift["boundary"]["nu"] == ["-1", "-2", "-3"]
    assert len(lift["hexagons"]) == 1
    hexinfo = lift["hexagons"][0]

    status, _, body = _post(server_port, "/api/breathe",
                            {"honeycomb": lift["honeycomb"],
                             "hexagon": hexinfo["id"],
                             "t": hexinfo["t_min"]})
    breathed = json.loads(body)
    assert status == 200 and "error" not in breathed
    assert breathed["boundary"] == lift["boundary"]

    status, _, body = _post(server_port, "/api/breathe",
                            {"honeycomb": lift["honeycomb"],
                             "hexagon": hexinfo["id"], "t": "1000000"})
    out = json.loads(body)
    assert status == 200
    assert out["error"] == "OUT_OF_CONE"
    assert "max_t" in out


def test_render_endpoint_matches_library(server_port):
    status, _, body = _post(server_port, "/api/lift",
                            {"lam": ["1", "0"], "mu": ["1", "0"],
                             "nu": ["-1", "-1"]})
    lift = json.loads(body)
    status, ctype, svg = _post(server_port, "/api/render",
                               {"honeycomb": lift["honeycomb"],
                                "origin": True})
    assert status == 200 and ctype == "image/svg+xml"
    from honeycombs.honeycomb import from_json
    from honeycombs.render import render_svg
    expected = render_svg(from_json(lift["honeycomb"]), origin=True)
    assert svg.decode() == expected


def test_infeasible_lift_returns_flag(server_port):
    status, _, body = _post(server_port, "/api/lift",
                            {"lam": ["1"], "mu": ["2"], "nu": ["-2"]})
    assert status == 200
    assert json.loads(body) == {"feasible": False}


def test_malformed_json_is_400(server_port):
    req = urllib.request.Request(
        f"http://127.0.0.1:{server_port}/api/feasible", data=b"not json")
    with pytest.raises(urllib.error.HTTPError) as exc:
        urllib.request.urlopen(req)
    assert exc.value.code == 400
    assert json.loads(exc.value.read())["code"] == "BAD_JSON"


def test_missing_field_is_400(server_port):
    req = urllib.request.Request(
        f"http://127.0.0.1:{server_port}/api/feasible",
        data=json.dumps({"lam": ["1"]}).encode())
    with pytest.raises(urllib.error.HTTPError) as exc:
        urllib.request.urlopen(req)
    assert exc.value.code == 400


def test_stateless_identical_requests(server_port):
    payload = {"lam": ["2", "1", "0"], "mu": ["2", "1", "0"],
               "nu": ["-1", "-2", "-3"]}
    _, _, first = _post(server_port, "/api/lift", payload)
    _, _, second = _post(server_port, "/api/lift", payload)
    assert first == second


def test_unknown_route_404(server_port):
    req = urllib.request.Request(
        f"http://127.0.0.1:{server_port}/api/nope", data=b"{}")
    with pytest.raises(urllib.error.HTTPError) as exc:
        urllib.request.urlopen(req)
    assert exc.value.code == 404
