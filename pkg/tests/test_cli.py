import json

import pytest

from honeycombs.cli import run
from honeycombs.honeycomb import from_json, to_json
from honeycombs.overlays import one_honeycomb
from honeycombs.plane import point


def test_feasible_exit_codes_and_output(capsys):
    assert run(["feasible", "--lam", "3", "--mu", "4", "--nu", "7"]) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert run(["feasible", "--lam", "3", "--mu", "4", "--nu", "5"]) == 1
    assert capsys.readouterr().out.strip() == "false"


def test_json_flag(capsys):
    assert run(["--json", "feasible", "--lam", "2,0", "--mu", "2,0",
                "--nu", "3,1"]) == 0
    assert json.loads(capsys.readouterr().out) == {"feasible": True}


def test_lrcoeff(capsys):
    assert run(["lrcoeff", "--lam", "2,1,0", "--mu", "2,1,0",
                "--nu", "3,2,1"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert run(["lrcoeff", "--lam", "1", "--mu", "1", "--nu", "3"]) == 1


def test_lrcoeff_witnesses_round_trip(capsys):
    assert run(["--json", "lrcoeff", "--lam", "2,1,0", "--mu", "2,1,0",
                "--nu", "3,2,1", "--witnesses", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["multiplicity"] == "2"
    assert len(payload["witnesses"]) == 2
    for w in payload["witnesses"]:
        h = from_json(w)
        assert to_json(h) == w


def test_horn_lists_three_inequalities(capsys):
    assert run(["horn", "--n", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 3
    assert "l1+m1 >= n1" in lines


def test_horn_json_round_trip(capsys):
    assert run(["--json", "horn", "--n", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["inequalities"]) == 12


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["feasible", "--lam", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["nonsense"])
    assert exc.value.code == 2


def test_unsorted_spectrum_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["feasible", "--lam", "1,2", "--mu", "0", "--nu", "1"])
    assert exc.value.code == 2


def test_lift_saturation_volume(capsys, tmp_path):
    assert run(["--json", "lift", "--lam", "2,1,0", "--mu", "2,1,0",
                "--nu=-1,-2,-3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    h = from_json(payload)
    assert h.n == 3

    assert run(["--json", "saturation", "--lam", "2,1,0", "--mu", "2,1,0",
                "--nu=-1,-2,-3"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["feasible"] and rep["agrees"]

    assert run(["volume", "--lam", "2,1,0", "--mu", "2,1,0",
                "--nu=-1,-2,-3"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_overlay_and_shrink_files(capsys, tmp_path):
    a = one_honeycomb(point(0, 0, 0))
    b = one_honeycomb(point(-1, -1, 2))
    pa = tmp_path / "a.json"
    pb = tmp_path / "b.json"
    pa.write_text(json.dumps(to_json(a)))
    pb.write_text(json.dumps(to_json(b)))
    assert run(["--json", "overlay", "--a", str(pa), "--b", str(pb),
                "--facet"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "ALL_A_CW"
    assert payload["facet"]["nu_indices"] == [2]

    assert run(["--json", "shrink", "--a", str(pa), "--b", str(pb)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["n"] == 1


def test_render_to_file(capsys, tmp_path):
    a = one_honeycomb(point(1, 2, -3))
    pa = tmp_path / "h.json"
    pa.write_text(json.dumps(to_json(a)))
    out = tmp_path / "h.svg"
    assert run(["render", "--file", str(pa), "--origin",
                "-o", str(out)]) == 0
    svg = out.read_text()
    assert svg.startswith("<svg ")


def test_sample_command(capsys):
    assert run(["--json", "sample", "--lam", "1,0", "--mu", "1,0",
                "--trials", "50", "--seed", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["trials"] == 50
    assert payload["violations"] == []


def test_domain_error_exit_two(capsys):
    # Feasible but volume guard fires for n > 4.
    assert run(["volume", "--lam", "0,0,0,0,0", "--mu", "0,0,0,0,0",
                "--nu", "0,0,0,0,0"]) == 2
    assert "error" in capsys.readouterr().err
