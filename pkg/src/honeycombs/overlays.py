"""Clockwise overlays, boundary-cone facet inequalities, and shrinking.

At a transverse crossing the two edges have distinct coordinate classes;
"A turns clockwise to B" means B's axis is A's axis rotated 60 degrees
clockwise on screen, i.e. (class_A, class_B) is one of (Y, X), (X, Z),
(Z, Y).  The orientation is pinned by the facet ground truth: the overlay
of a single Y placed north-west-most over any honeycomb realizes the
inequality lam_1 + mu_1 + nu_n >= 0, which must be the valid one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .diagram import (Diagram, Piece, intersect_pieces, line_param,
                      to_diagram)
from .errors import InvariantError, NonTransverseError, NotClockwiseError
from .graph import Vertex
from .honeycomb import (Honeycomb, boundary, honeycomb_from_boundary,
                        is_integral, validate, vertex_position)
from .plane import Direction, EdgeClass, PointB, Rat

A_CW_TO_B = "A_CW_TO_B"
B_CW_TO_A = "B_CW_TO_A"
ALL_A_CW = "ALL_A_CW"
ALL_B_CW = "ALL_B_CW"
MIXED = "MIXED"
NON_TRANSVERSE = "NON_TRANSVERSE"

# Axis rotated 60 degrees clockwise: X (NW/SE) -> Z (N/S) -> Y (NE/SW) -> X.
_CW60 = {EdgeClass.X: EdgeClass.Z, EdgeClass.Z: EdgeClass.Y,
         EdgeClass.Y: EdgeClass.X}


@dataclass(frozen=True)
class Crossing:
    point: PointB
    piece_a: int
    piece_b: int
    turning: str


@dataclass
class OverlayAnalysis:
    diagram_a: Diagram
    diagram_b: Diagram
    intersections: list[Crossing]
    verdict: str

    def to_json(self) -> dict:
        from .plane import rat_str
        return {
            "verdict": self.verdict,
            "intersections": [
                {"point": [rat_str(c.point.x), rat_str(c.point.y),
                           rat_str(c.point.z)],
                 "piece_a": c.piece_a, "piece_b": c.piece_b,
                 "turning": c.turning}
                for c in self.intersections],
        }


def analyze_diagrams(d_a: Diagram, d_b: Diagram) -> OverlayAnalysis:
    """Classify every intersection point of two canonical diagrams."""
    crossings: list[Crossing] = []
    non_transverse = False

    points: dict[tuple, list[tuple[str, int]]] = {}
    for ia, pa in enumerate(d_a.pieces):
        for ib, pb in enumerate(d_b.pieces):
            hit = intersect_pieces(pa, pb, strict=False)
            if hit is None:
                continue
            if hit == "overlap":
                non_transverse = True
                continue
            points.setdefault(hit.as_tuple(), [])

    for key in points:
        p = PointB(*key)
        through_a = [i for i, pc in enumerate(d_a.pieces)
                     if _passes_through(pc, p)]
        through_b = [i for i, pc in enumerate(d_b.pieces)
                     if _passes_through(pc, p)]
        if len(through_a) != 1 or len(through_b) != 1:
            non_transverse = True    # triple point or coincident vertex
            continue
        pa = d_a.pieces[through_a[0]]
        pb = d_b.pieces[through_b[0]]
        if (not _strictly_interior(pa, p) or not _strictly_interior(pb, p)
                or pa.mult != 1 or pb.mult != 1):
            non_transverse = True
            continue
        turning = (A_CW_TO_B if pb.cls == _CW60[pa.cls] else B_CW_TO_A)
        crossings.append(Crossing(p, through_a[0], through_b[0], turning))

    if non_transverse:
        verdict = NON_TRANSVERSE
    elif all(c.turning == A_CW_TO_B for c in crossings):
        verdict = ALL_A_CW           # vacuously when no crossings
    elif all(c.turning == B_CW_TO_A for c in crossings):
        verdict = ALL_B_CW
    else:
        verdict = MIXED
    crossings.sort(key=lambda c: c.point.as_tuple())
    return OverlayAnalysis(d_a, d_b, crossings, verdict)


def _passes_through(piece: Piece, p: PointB) -> bool:
    if piece.const != p.coord(piece.cls):
        return False
    return piece.contains_param(line_param(piece.cls, p), strict=False)


def _strictly_interior(piece: Piece, p: PointB) -> bool:
    return piece.contains_param(line_param(piece.cls, p), strict=True)


def analyze_overlay(a: Honeycomb, b: Honeycomb) -> OverlayAnalysis:
    return analyze_diagrams(to_diagram(a), to_diagram(b))


# ---------------------------------------------------------------------------
# Facet inequalities.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryInequality:
    """sum over lam_indices of lam + ... + sum over nu_indices of nu >= 0
    on boundary triples of the merged size."""

    n: int
    lam_indices: tuple[int, ...]
    mu_indices: tuple[int, ...]
    nu_indices: tuple[int, ...]

    def evaluate(self, lam, mu, nu) -> bool:
        lam = list(lam)
        mu = list(mu)
        nu = list(nu)
        total = (sum(lam[i - 1] for i in self.lam_indices)
                 + sum(mu[j - 1] for j in self.mu_indices)
                 + sum(nu[k - 1] for k in self.nu_indices))
        return total >= 0

    def human(self) -> str:
        terms = ([f"l{i}" for i in self.lam_indices]
                 + [f"m{j}" for j in self.mu_indices]
                 + [f"n{k}" for k in self.nu_indices])
        return "+".join(terms) + " >= 0"

    def machine(self) -> dict:
        return {"n": self.n, "lam_indices": list(self.lam_indices),
                "mu_indices": list(self.mu_indices),
                "nu_indices": list(self.nu_indices)}


def _merged_slots(vals_a: list[Rat], vals_b: list[Rat]) -> tuple[int, ...]:
    """1-based positions of A's values in the merged decreasing order."""
    merged = sorted([(v, 0) for v in vals_a] + [(v, 1) for v in vals_b],
                    key=lambda t: t[0], reverse=True)
    values = [v for v, _ in merged]
    if len(set(values)) != len(values):
        raise InvariantError("tied boundary constants in merged overlay")
    return tuple(i + 1 for i, (_, who) in enumerate(merged) if who == 0)


def facet_inequality(a: Honeycomb, b: Honeycomb) -> BoundaryInequality:
    """The boundary-cone inequality read off a clockwise overlay: the sum
    of the boundary coordinates contributed by A is nonnegative."""
    analysis = analyze_overlay(a, b)
    if analysis.verdict == NON_TRANSVERSE:
        raise NonTransverseError("overlay has non-transverse intersections")
    if analysis.verdict != ALL_A_CW:
        raise NotClockwiseError(f"verdict {analysis.verdict}")
    ba = boundary(a)
    bb = boundary(b)
    return BoundaryInequality(
        a.n + b.n,
        _merged_slots(list(ba.lam), list(bb.lam)),
        _merged_slots(list(ba.mu), list(bb.mu)),
        _merged_slots(list(ba.nu), list(bb.nu)))


# ---------------------------------------------------------------------------
# The shrink construction.
# ---------------------------------------------------------------------------

def shrink(a: Honeycomb, b: Honeycomb) -> Honeycomb:
    """Replace each edge of A by one of length equal to its crossing count
    with B; bottom-right vertex lands at the origin.  The result is an
    integral honeycomb of A's size."""
    analysis = analyze_overlay(a, b)
    if analysis.verdict == NON_TRANSVERSE:
        raise NonTransverseError("overlay has non-transverse intersections")
    if analysis.verdict != ALL_A_CW:
        raise NotClockwiseError(f"verdict {analysis.verdict}")

    g = a.graph
    d_a = analysis.diagram_a
    piece_of_edge: dict[str, int] = {}
    for eid in g.internal_edges:
        edge = g.edge(eid)
        pu = vertex_position(a, edge.u)
        pv = vertex_position(a, edge.v)
        lo = min(line_param(edge.cls, pu), line_param(edge.cls, pv))
        hi = max(line_param(edge.cls, pu), line_param(edge.cls, pv))
        for i, pc in enumerate(d_a.pieces):
            if (pc.cls == edge.cls and pc.const == pu.coord(edge.cls)
                    and pc.lo == lo and pc.hi == hi):
                piece_of_edge[eid] = i
                break
        else:
            raise NonTransverseError(
                "A must be nondegenerate (edge pieces must not merge)")

    counts: dict[int, int] = {}
    for c in analysis.intersections:
        counts[c.piece_a] = counts.get(c.piece_a, 0) + 1
    lengths = {eid: Fraction(counts.get(piece_of_edge[eid], 0))
               for eid in g.internal_edges}

    # Walk the graph placing vertices; start at the bottom-right Y.
    start = Vertex("up", g.n - 1, 0)
    pos: dict[Vertex, PointB] = {start: PointB(Fraction(0), Fraction(0),
                                               Fraction(0))}
    step = {EdgeClass.Z: Direction.N, EdgeClass.X: Direction.NW,
            EdgeClass.Y: Direction.NE}
    frontier = [start]
    while frontier:
        v = frontier.pop()
        for cls, eid in g.vertex_edges[v].items():
            edge = g.edge(eid)
            if not edge.internal:
                continue
            # Position invariant: pos[edge.u] = pos[edge.v] + len * step.
            if edge.u == v:
                target = edge.v
                cand = pos[v].translate(step[cls], -lengths[eid])
            else:
                target = edge.u
                cand = pos[v].translate(step[cls], lengths[eid])
            if target in pos:
                if pos[target] != cand:
                    raise InvariantError(
                        "crossing counts do not close up; overlay is not "
                        "consistently clockwise")
            else:
                pos[target] = cand
                frontier.append(target)

    coords: dict[str, Rat] = {}
    for eid in g.all_edges:
        edge = g.edge(eid)
        coords[eid] = pos[edge.u].coord(edge.cls)
    result = Honeycomb(g, coords)
    validate(result)
    if not is_integral(result):
        raise InvariantError("shrink produced a non-integral honeycomb")
    return result


# ---------------------------------------------------------------------------
# Clockwise-pair generators (used by the verification suites).
# ---------------------------------------------------------------------------

def one_honeycomb(p: PointB) -> Honeycomb:
    """The 1-honeycomb whose Y-vertex sits at p."""
    return honeycomb_from_boundary([p.x], [p.y], [p.z], {})


def northwest_clockwise_pair(b: Honeycomb, rng: random.Random
                             ) -> tuple[Honeycomb, Honeycomb]:
    """A single Y placed so its NE ray crosses exactly B's NW rays.

    Positioned with x and y strictly above everything in B, every crossing
    has classes (Y, X): consistently A-clockwise by construction."""
    d = to_diagram(b)
    xs = []
    ys = []
    for piece in d.pieces:
        for pt in piece.endpoints():
            if pt is not None:
                xs.append(pt.x)
                ys.append(pt.y)
        if piece.cls is EdgeClass.X:
            xs.append(piece.const)
        elif piece.cls is EdgeClass.Y:
            ys.append(piece.const)
    px = max(xs) + rng.randint(1, 5) + Fraction(rng.randint(1, 7), 8)
    py = max(ys) + rng.randint(1, 5) + Fraction(rng.randint(1, 7), 8)
    p = PointB(px, py, -px - py)
    return one_honeycomb(p), b
