"""Command-line interface.

Decision commands exit 0 on "true/feasible", 1 on "false/infeasible"
(so shell scripts can branch on them), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .counting import enumerate_integral, tensor_multiplicity
from .diagram import diagram_from_json
from .errors import HoneycombError
from .fibers import (check_saturation, decide_sum, decide_triple,
                     largest_lift, spectrum)
from .honeycomb import from_json as honeycomb_from_json
from .honeycomb import to_json as honeycomb_to_json
from .horn import horn_inequalities
from .overlays import analyze_overlay, facet_inequality, shrink
from .plane import rat, rat_str
from .render import render_svg
from .spectral import fiber_volume, monte_carlo_check


def _parse_spectrum(text: str):
    try:
        return spectrum([rat(v) for v in text.split(",") if v.strip()])
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _load_honeycomb(path: str):
    with open(path) as fh:
        return honeycomb_from_json(json.load(fh))


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="honeycombs",
        description="Spectra of sums of Hermitian matrices via exact "
                    "honeycomb linear programming")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_triple_args(p):
        p.add_argument("--lam", type=_parse_spectrum, required=True)
        p.add_argument("--mu", type=_parse_spectrum, required=True)
        p.add_argument("--nu", type=_parse_spectrum, required=True)

    p = sub.add_parser("feasible", help="decide lam boxplus mu ~ nu")
    add_triple_args(p)

    p = sub.add_parser("triple",
                       help="decide the symmetric triple relation")
    add_triple_args(p)

    p = sub.add_parser("lrcoeff", help="tensor-product multiplicity")
    add_triple_args(p)
    p.add_argument("--witnesses", type=int, default=0,
                   help="include up to N integral honeycomb witnesses")

    p = sub.add_parser("enumerate", help="list integral honeycombs")
    add_triple_args(p)
    p.add_argument("--limit", type=int, default=10)

    p = sub.add_parser("horn", help="Horn's inequality list")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("lift", help="largest lift of a boundary triple")
    add_triple_args(p)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("saturation", help="saturation report")
    add_triple_args(p)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("overlay", help="analyze an overlay of two "
                                       "honeycomb JSON files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--facet", action="store_true",
                   help="also print the facet inequality")

    p = sub.add_parser("shrink", help="shrink A against B")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    p = sub.add_parser("sample", help="Monte-Carlo spectra of sums")
    p.add_argument("--lam", type=_parse_spectrum, required=True)
    p.add_argument("--mu", type=_parse_spectrum, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="write sampled spectra to a CSV file")

    p = sub.add_parser("volume", help="exact fiber volume (n <= 4)")
    add_triple_args(p)

    p = sub.add_parser("render", help="render a honeycomb or diagram "
                                      "JSON file to SVG")
    p.add_argument("--file", required=True)
    p.add_argument("--origin", action="store_true")
    p.add_argument("-o", "--output", help="output path (default stdout)")

    p = sub.add_parser("serve", help="run the JSON/HTTP service")
    p.add_argument("--port", type=int, default=8621)
    p.add_argument("--host", default="127.0.0.1")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except HoneycombError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    cmd = args.command

    if cmd == "feasible":
        ok = decide_sum(args.lam, args.mu, args.nu)
        _emit(args, {"feasible": ok}, "true" if ok else "false")
        return 0 if ok else 1

    if cmd == "triple":
        ok = decide_triple(args.lam, args.mu, args.nu)
        _emit(args, {"feasible": ok}, "true" if ok else "false")
        return 0 if ok else 1

    if cmd == "lrcoeff":
        mult = tensor_multiplicity(args.lam.values, args.mu.values,
                                   args.nu.values)
        payload = {"multiplicity": str(mult)}
        if args.witnesses:
            neg = args.nu.negate()
            witnesses = enumerate_integral(args.lam.values, args.mu.values,
                                           neg.values, args.witnesses)
            payload["witnesses"] = [honeycomb_to_json(h) for h in witnesses]
        _emit(args, payload, str(mult))
        return 0 if mult > 0 else 1

    if cmd == "enumerate":
        hs = enumerate_integral(args.lam.values, args.mu.values,
                                args.nu.values, args.limit)
        payload = {"count_listed": len(hs),
                   "witnesses": [honeycomb_to_json(h) for h in hs]}
        _emit(args, payload,
              "\n".join(json.dumps(honeycomb_to_json(h)) for h in hs)
              or "none")
        return 0 if hs else 1

    if cmd == "horn":
        ineqs = horn_inequalities(args.n)
        if args.json:
            print(json.dumps({"n": args.n,
                              "inequalities": [q.machine() for q in ineqs]}))
        else:
            for q in ineqs:
                print(q.human())
        return 0

    if cmd == "lift":
        h = largest_lift(args.lam, args.mu, args.nu, seed=args.seed)
        _emit(args, honeycomb_to_json(h), json.dumps(honeycomb_to_json(h)))
        return 0

    if cmd == "saturation":
        report = check_saturation(args.lam, args.mu, args.nu,
                                  seed=args.seed)
        human = (f"feasible={report.feasible} "
                 f"integral_witness={bool(report.witness_integral)} "
                 f"agrees={report.agrees}")
        _emit(args, report.to_json(), human)
        return 0 if report.agrees else 1

    if cmd == "overlay":
        a = _load_honeycomb(args.a)
        b = _load_honeycomb(args.b)
        analysis = analyze_overlay(a, b)
        payload = analysis.to_json()
        human = [f"verdict: {analysis.verdict}",
                 f"crossings: {len(analysis.intersections)}"]
        if args.facet:
            ineq = facet_inequality(a, b)
            payload["facet"] = ineq.machine()
            human.append(f"facet: {ineq.human()}")
        _emit(args, payload, "\n".join(human))
        return 0

    if cmd == "shrink":
        a = _load_honeycomb(args.a)
        b = _load_honeycomb(args.b)
        result = shrink(a, b)
        _emit(args, honeycomb_to_json(result),
              json.dumps(honeycomb_to_json(result)))
        return 0

    if cmd == "sample":
        report = monte_carlo_check(args.lam, args.mu, args.trials,
                                   args.seed)
        if args.csv:
            from .spectral import sample_sum_spectra
            rows = sample_sum_spectra(args.lam, args.mu, args.trials,
                                      args.seed)
            with open(args.csv, "w") as fh:
                for row in rows:
                    fh.write(",".join(f"{x:.12g}" for x in row) + "\n")
        human = (f"trials={report.trials} "
                 f"violations={len(report.violations)} "
                 f"max_margin={report.max_infeasibility_margin:g}")
        _emit(args, report.to_json(), human)
        return 0 if report.ok else 1

    if cmd == "volume":
        vol = fiber_volume(args.lam, args.mu, args.nu)
        _emit(args, {"volume": rat_str(vol)}, rat_str(vol))
        return 0

    if cmd == "render":
        with open(args.file) as fh:
            data = json.load(fh)
        if "coords" in data:
            obj = honeycomb_from_json(data)
        else:
            obj = diagram_from_json(data)
        svg = render_svg(obj, origin=args.origin)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(svg)
        else:
            print(svg, end="")
        return 0

    if cmd == "serve":
        from .server import serve
        serve(host=args.host, port=args.port)
        return 0

    raise ValueError(f"unknown command {cmd}")


def main() -> None:
    sys.exit(run())
