"""Honeycombs as exact coordinate vectors on the fixed topology tau_n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfConeError
from .graph import (HoneycombGraph, TriVertex, boundary_edge_id,
                    boundary_potential, build_graph,
                    edge_coord_from_potential, length_pairs,
                    potential_from_coords)
from .plane import EdgeClass, PointB, Rat, rat, rat_str


@dataclass(frozen=True)
class BoundaryTriple:
    lam: tuple[Rat, ...]
    mu: tuple[Rat, ...]
    nu: tuple[Rat, ...]

    @property
    def trace(self) -> Rat:
        return sum(self.lam) + sum(self.mu) + sum(self.nu)


@dataclass
class Honeycomb:
    """Coordinate assignment on tau_n; a point of the closed honeycomb cone.

    Treated as an immutable value; deformations return new instances.
    """

    graph: HoneycombGraph
    coords: dict[str, Rat]

    @property
    def n(self) -> int:
        return self.graph.n

    def __eq__(self, other) -> bool:
        return (isinstance(other, Honeycomb) and self.n == other.n
                and self.coords == other.coords)

    def coord(self, edge_id: str) -> Rat:
        return self.coords[edge_id]


def validate(h: Honeycomb) -> None:
    """Check vertex equalities and nonnegative edge lengths, exactly."""
    g = h.graph
    for v, incident in g.vertex_edges.items():
        total = sum(h.coords[e] for e in incident.values())
        if total != 0:
            raise ValueError(f"coordinates around vertex {v} sum to {total}")
    for e in g.internal_edges:
        length = edge_length(h, e)
        if length < 0:
            raise ValueError(f"edge {e} has negative length {length}")


def vertex_position(h: Honeycomb, v) -> PointB:
    incident = h.graph.vertex_edges[v]
    return PointB(h.coords[incident[EdgeClass.X]],
                  h.coords[incident[EdgeClass.Y]],
                  h.coords[incident[EdgeClass.Z]])


def boundary(h: Honeycomb) -> BoundaryTriple:
    n = h.n
    lam = tuple(h.coords[boundary_edge_id("NW", i)] for i in range(1, n + 1))
    mu = tuple(h.coords[boundary_edge_id("NE", i)] for i in range(1, n + 1))
    nu = tuple(h.coords[boundary_edge_id("S", i)] for i in range(1, n + 1))
    return BoundaryTriple(lam, mu, nu)


def edge_length(h: Honeycomb, edge_id: str) -> Rat:
    """Length of an internal edge from same-class coordinate differences.

    The two available differences must agree (a consequence of the vertex
    equalities); both are always computed and checked.
    """
    (p1, m1), (p2, m2) = length_pairs(h.graph, edge_id)
    first = h.coords[p1] - h.coords[m1]
    second = h.coords[p2] - h.coords[m2]
    if first != second:
        raise ValueError(
            f"edge {edge_id}: length expressions disagree "
            f"({first} vs {second}); vertex equalities violated")
    return first


def is_integral(h: Honeycomb) -> bool:
    return all(c.denominator == 1 for c in h.coords.values())


def breathing_vector(g: HoneycombGraph, hexagon) -> dict[str, Rat]:
    """Coordinate change per unit of outward dilation of a hexagon.

    Supported on the hexagon's six edges with alternating signs; lies in
    the kernel of every vertex equality and fixes the boundary.
    """
    hx = g.hexagon(hexagon) if isinstance(hexagon, str) else hexagon
    return {e: Fraction(s) for e, s in zip(hx.edges, hx.dilation)}


def breathe(h: Honeycomb, hexagon, t: Rat) -> Honeycomb:
    """Dilate a hexagon by t (negative t breathes inward).

    Raises OutOfConeError if any edge length would become negative,
    reporting the first blocking edge and the maximal admissible |t|.
    """
    t = rat(t)
    g = h.graph
    hx = g.hexagon(hexagon) if isinstance(hexagon, str) else hexagon
    vec = breathing_vector(g, hx)
    if t != 0:
        # Length of edge e changes at rate sum of vec over its length pairs.
        blocking = None
        max_abs = None
        for e in g.internal_edges:
            (p1, m1), _ = length_pairs(g, e)
            rate = vec.get(p1, Fraction(0)) - vec.get(m1, Fraction(0))
            step = rate * t
            if step < 0:
                admissible = edge_length(h, e) / abs(rate)
                if max_abs is None or admissible < max_abs:
                    max_abs = admissible
                    blocking = e
        if max_abs is not None and abs(t) > max_abs:
            raise OutOfConeError(blocking, max_abs)
    coords = dict(h.coords)
    for e, s in vec.items():
        coords[e] = coords[e] + t * s
    return Honeycomb(g, coords)


def max_breathing(h: Honeycomb, hexagon) -> tuple[Rat | None, Rat | None]:
    """Admissible dilation range (t_min <= 0 <= t_max) for a hexagon.

    ``None`` means unbounded in that direction (cannot happen for
    honeycombs with finite boundary, but kept for safety)."""
    g = h.graph
    hx = g.hexagon(hexagon) if isinstance(hexagon, str) else hexagon
    vec = breathing_vector(g, hx)
    t_min: Rat | None = None
    t_max: Rat | None = None
    for e in g.internal_edges:
        (p1, m1), _ = length_pairs(g, e)
        rate = vec.get(p1, Fraction(0)) - vec.get(m1, Fraction(0))
        if rate == 0:
            continue
        bound = -edge_length(h, e) / rate
        if rate < 0:
            t_max = bound if t_max is None else min(t_max, bound)
        else:
            t_min = bound if t_min is None else max(t_min, bound)
    return (t_min, t_max)


# ---------------------------------------------------------------------------
# Construction.
# ---------------------------------------------------------------------------

def honeycomb_from_potential(g: HoneycombGraph,
                             H: dict[TriVertex, Rat]) -> Honeycomb:
    coords = {e: edge_coord_from_potential(g, e, H) for e in g.all_edges}
    return Honeycomb(g, coords)


def honeycomb_potential(h: Honeycomb) -> dict[TriVertex, Rat]:
    return potential_from_coords(h.graph, h.coords)


def honeycomb_from_boundary(lam, mu, nu,
                            interior: dict[TriVertex, Rat]) -> Honeycomb:
    """Assemble a honeycomb from boundary values and interior potential."""
    lam = [rat(v) for v in lam]
    mu = [rat(v) for v in mu]
    nu = [rat(v) for v in nu]
    n = len(lam)
    H = boundary_potential(lam, mu, nu)
    for p, value in interior.items():
        H[p] = rat(value)
    return honeycomb_from_potential(build_graph(n), H)


def standard_potential(n: int, scale: Rat = Fraction(1)
                       ) -> dict[TriVertex, Rat]:
    """Potential of the regular honeycomb: every edge has length ``scale``."""
    scale = rat(scale)
    return {(i, j): scale * (i * i + i * j + j * j)
            for i in range(n + 1) for j in range(n + 1 - i)}


# ---------------------------------------------------------------------------
# JSON.
# ---------------------------------------------------------------------------

def to_json(h: Honeycomb) -> dict:
    return {"n": h.n,
            "coords": {e: rat_str(c) for e, c in sorted(h.coords.items())}}


def from_json(data: dict) -> Honeycomb:
    n = int(data["n"])
    g = build_graph(n)
    coords = {e: rat(v) for e, v in data["coords"].items()}
    missing = set(g.all_edges) - set(coords)
    extra = set(coords) - set(g.all_edges)
    if missing or extra:
        raise ValueError(f"bad edge set: missing {sorted(missing)[:3]}, "
                         f"unknown {sorted(extra)[:3]}")
    h = Honeycomb(g, coords)
    validate(h)
    return h
