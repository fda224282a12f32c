"""Multiplicity-weighted diagrams: the measure-level picture.

A diagram is a set of segments and rays parallel to the cardinal
directions, each with a positive integer multiplicity.  Two diagrams are
equal iff their associated measures agree; the canonical form realizes
this by merging collinear overlapping pieces into maximal pieces of
constant multiplicity.

Every piece lies on a line with one constant coordinate; points on the
line are parametrized by a second coordinate:

  class X (NW/SE, constant x): parameter z, NW is the -inf side;
  class Y (NE/SW, constant y): parameter x, NE is the -inf side;
  class Z (N/S,   constant z): parameter x, S  is the +inf side.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .honeycomb import BoundaryTriple, Honeycomb, edge_length, vertex_position
from .plane import Direction, EdgeClass, PointB, Rat, rat, rat_str

_PARAM_SLOT = {EdgeClass.X: 2, EdgeClass.Y: 0, EdgeClass.Z: 0}

# Ray directions reachable on each line class, keyed by which infinite end.
_NEG_INF_DIR = {EdgeClass.X: Direction.NW, EdgeClass.Y: Direction.NE,
                EdgeClass.Z: Direction.N}
_POS_INF_DIR = {EdgeClass.X: Direction.SE, EdgeClass.Y: Direction.SW,
                EdgeClass.Z: Direction.S}

_RAY_CLASS = {Direction.NW: EdgeClass.X, Direction.NE: EdgeClass.Y,
              Direction.S: EdgeClass.Z}


def line_point(cls: EdgeClass, const: Rat, param: Rat) -> PointB:
    if cls is EdgeClass.X:
        return PointB(const, -const - param, param)
    if cls is EdgeClass.Y:
        return PointB(param, const, -const - param)
    return PointB(param, -const - param, const)


def line_param(cls: EdgeClass, p: PointB) -> Rat:
    return p.as_tuple()[_PARAM_SLOT[cls]]


def line_const(cls: EdgeClass, p: PointB) -> Rat:
    return p.coord(cls)


@dataclass(frozen=True)
class Piece:
    """A maximal piece of a canonical diagram on line (cls, const).

    ``lo``/``hi`` are parameter bounds; None encodes the infinite end
    (only -inf for class X/Y pieces and +inf for class Z pieces occur in
    honeycomb diagrams)."""

    cls: EdgeClass
    const: Rat
    lo: Rat | None
    hi: Rat | None
    mult: int

    def sort_key(self):
        lo_key = (0,) if self.lo is None else (1, self.lo)
        hi_key = (1,) if self.hi is None else (0, self.hi)
        return (self.cls.name, self.const, lo_key, hi_key, self.mult)

    def endpoints(self) -> tuple[PointB | None, PointB | None]:
        start = (None if self.lo is None
                 else line_point(self.cls, self.const, self.lo))
        end = (None if self.hi is None
               else line_point(self.cls, self.const, self.hi))
        return start, end

    def contains_param(self, p: Rat, strict: bool) -> bool:
        if self.lo is not None and (p < self.lo or (strict and p == self.lo)):
            return False
        if self.hi is not None and (p > self.hi or (strict and p == self.hi)):
            return False
        return True


@dataclass
class Diagram:
    """Canonical diagram; construct through ``make_diagram`` or helpers."""

    pieces: tuple[Piece, ...]

    def __eq__(self, other) -> bool:
        return isinstance(other, Diagram) and self.pieces == other.pieces

    @property
    def segments(self) -> list[tuple[PointB, PointB, int]]:
        out = []
        for p in self.pieces:
            if p.lo is not None and p.hi is not None:
                s, e = p.endpoints()
                out.append((s, e, p.mult))
        return out

    @property
    def rays(self) -> list[tuple[PointB, Direction, int]]:
        out = []
        for p in self.pieces:
            if p.lo is None:
                out.append((line_point(p.cls, p.const, p.hi),
                            _NEG_INF_DIR[p.cls], p.mult))
            elif p.hi is None:
                out.append((line_point(p.cls, p.const, p.lo),
                            _POS_INF_DIR[p.cls], p.mult))
        return out


def make_diagram(segments=(), rays=()) -> Diagram:
    """Canonicalize raw segments/rays into a Diagram.

    segments: iterable of (start: PointB, end: PointB, mult);
    rays: iterable of (start: PointB, direction in {NW, NE, S}, mult).
    """
    raw: list[tuple[EdgeClass, Rat, Rat | None, Rat | None, int]] = []
    for start, end, mult in segments:
        if mult <= 0:
            raise ValueError("multiplicity must be positive")
        delta = end.sub(start)
        nonzero = [c for c in delta.as_tuple() if c != 0]
        if not nonzero:
            continue  # zero-length segments carry no measure
        cls = None
        for k in EdgeClass:
            if delta.coord(k) == 0:
                cls = k
                break
        if cls is None:
            raise ValueError(f"segment {start}->{end} not cardinal")
        c = line_const(cls, start)
        a, b = line_param(cls, start), line_param(cls, end)
        if a > b:
            a, b = b, a
        raw.append((cls, c, a, b, mult))
    for start, direction, mult in rays:
        if mult <= 0:
            raise ValueError("multiplicity must be positive")
        if direction not in _RAY_CLASS:
            raise ValueError(f"rays must go NW, NE, or S, not {direction}")
        cls = _RAY_CLASS[direction]
        c = line_const(cls, start)
        p = line_param(cls, start)
        if direction is Direction.S:
            raw.append((cls, c, p, None, mult))
        else:
            raw.append((cls, c, None, p, mult))

    by_line: dict[tuple[EdgeClass, Rat], list] = {}
    for cls, c, lo, hi, mult in raw:
        by_line.setdefault((cls, c), []).append((lo, hi, mult))

    pieces: list[Piece] = []
    for (cls, c), intervals in by_line.items():
        base = 0
        events: dict[Rat, int] = {}
        for lo, hi, mult in intervals:
            if lo is None:
                base += mult
            else:
                events[lo] = events.get(lo, 0) + mult
            if hi is not None:
                events[hi] = events.get(hi, 0) - mult
        points = sorted(p for p, d in events.items() if d != 0)
        run = base
        prev: Rat | None = None
        for p in points:
            if run > 0:
                pieces.append(Piece(cls, c, prev, p, run))
            run += events[p]
            prev = p
        if run > 0:
            if prev is None:
                raise ValueError("full-line pieces are not representable")
            pieces.append(Piece(cls, c, prev, None, run))
    pieces.sort(key=Piece.sort_key)
    return Diagram(tuple(pieces))


def to_diagram(h: Honeycomb) -> Diagram:
    """Canonical diagram of a honeycomb: positive-length edges as segments,
    boundary rays with their directions; degeneracies merge."""
    g = h.graph
    segments = []
    for e in g.internal_edges:
        if edge_length(h, e) > 0:
            edge = g.edge(e)
            segments.append((vertex_position(h, edge.u),
                             vertex_position(h, edge.v), 1))
    rays = []
    for e in g.boundary_edges:
        edge = g.edge(e)
        rays.append((vertex_position(h, edge.u), edge.direction, 1))
    return make_diagram(segments, rays)


def overlay(d1: Diagram, d2: Diagram) -> Diagram:
    """Measure sum of two diagrams, in canonical form."""
    return make_diagram(d1.segments + d2.segments, d1.rays + d2.rays)


def empty_diagram() -> Diagram:
    return Diagram(())


def diagram_boundary(d: Diagram) -> BoundaryTriple:
    """Boundary values (with multiplicity) sorted weakly decreasing."""
    sides: dict[Direction, list[Rat]] = {Direction.NW: [], Direction.NE: [],
                                         Direction.S: []}
    for start, direction, mult in d.rays:
        if direction not in sides:
            raise ValueError(f"unexpected ray direction {direction}")
        const = line_const(_RAY_CLASS[direction], start)
        sides[direction].extend([const] * mult)
    lam = tuple(sorted(sides[Direction.NW], reverse=True))
    mu = tuple(sorted(sides[Direction.NE], reverse=True))
    nu = tuple(sorted(sides[Direction.S], reverse=True))
    return BoundaryTriple(lam, mu, nu)


def intersect_pieces(p1: Piece, p2: Piece,
                     strict: bool) -> PointB | str | None:
    """Exact intersection of two canonical pieces.

    Returns a PointB for a single-point crossing, the string "overlap"
    for a shared sub-segment of positive length, and None when disjoint.
    With ``strict`` the crossing must avoid both pieces' endpoints.
    """
    if p1.cls == p2.cls:
        if p1.const != p2.const:
            return None
        lo = max((v for v in (p1.lo, p2.lo) if v is not None),
                 default=None)
        hi = min((v for v in (p1.hi, p2.hi) if v is not None),
                 default=None)
        if lo is None or hi is None or lo < hi:
            return "overlap"
        if lo == hi:
            return line_point(p1.cls, p1.const, lo)
        return None
    consts = {p1.cls: p1.const, p2.cls: p2.const}
    missing = next(k for k in EdgeClass if k not in consts)
    coords = [Fraction(0)] * 3
    total = Fraction(0)
    for k, c in consts.items():
        coords[k.slot] = c
        total += c
    coords[missing.slot] = -total
    pt = PointB(*coords)
    for piece in (p1, p2):
        if not piece.contains_param(line_param(piece.cls, pt), strict):
            return None
    return pt


# ---------------------------------------------------------------------------
# JSON.
# ---------------------------------------------------------------------------

def _point_json(p: PointB) -> list[str]:
    return [rat_str(p.x), rat_str(p.y), rat_str(p.z)]


def _point_from_json(v) -> PointB:
    return PointB(rat(v[0]), rat(v[1]), rat(v[2]))


def diagram_to_json(d: Diagram) -> dict:
    return {
        "segments": [{"start": _point_json(s), "end": _point_json(e),
                      "multiplicity": m} for s, e, m in d.segments],
        "rays": [{"start": _point_json(s), "direction": dr.name,
                  "multiplicity": m} for s, dr, m in d.rays],
    }


def diagram_from_json(data: dict) -> Diagram:
    segments = [(_point_from_json(s["start"]), _point_from_json(s["end"]),
                 int(s["multiplicity"])) for s in data.get("segments", [])]
    rays = [(_point_from_json(r["start"]), Direction[r["direction"]],
             int(r["multiplicity"])) for r in data.get("rays", [])]
    return make_diagram(segments, rays)
