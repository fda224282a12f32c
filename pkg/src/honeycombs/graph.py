"""The fixed nondegenerate topology tau_n.

The graph is realized as the dual of the size-n triangular subdivision of
an upward triangle: one Y-vertex per upward cell (rays NW, NE, S), one
upside-down Y per downward cell (rays N, SW, SE).  Every edge is dual to a
triangulation side and carries the coordinate class of the direction it
crosses.

Coordinate assignments on edges are equivalent to a potential on the
triangulation vertices: each edge coordinate is the difference of the
potential at the dual side's endpoints, which makes the vertex equalities
hold identically.  Boundary values pin the boundary potential via partial
sums; interior potential values are the free fiber parameters, one per
hexagonal face.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import DimensionMismatchError
from .plane import Direction, EdgeClass, Rat


class Vertex(NamedTuple):
    kind: str  # "up" | "dn"
    a: int
    b: int

    def key(self) -> str:
        return f"{self.kind}:{self.a},{self.b}"


_CLS_ORDER = {EdgeClass.X: 0, EdgeClass.Y: 1, EdgeClass.Z: 2}
_CLS_BY_NAME = {c.name: c for c in EdgeClass}


def internal_edge_id(a: int, b: int, cls: EdgeClass) -> str:
    return f"dn:{a},{b}:{cls.name}"


def boundary_edge_id(side: str, i: int) -> str:
    return f"bdy:{side}:{i}"


@dataclass(frozen=True)
class Edge:
    """One edge of tau_n.

    For internal edges ``u`` and ``v`` are oriented endpoints:
    class Z: u = top, v = bottom; class X: u = NW end, v = SE end;
    class Y: u = NE end, v = SW end.  Boundary rays store their attached
    vertex in ``u`` and the outgoing direction.
    """

    id: str
    cls: EdgeClass
    internal: bool
    u: Vertex
    v: Vertex | None
    direction: Direction | None  # boundary rays only
    side: str | None = None      # "NW" | "NE" | "S"
    slot: int | None = None      # 1-based boundary index


@dataclass(frozen=True)
class Hexagon:
    """An internal face; ``edges`` lists its 6-cycle with classes
    alternating X, Y, Z, X, Y, Z.  ``dilation`` gives the coordinate
    change of each cycle edge per unit of outward dilation."""

    id: str
    center: tuple[int, int]  # interior triangulation vertex (i, j)
    edges: tuple[str, ...]
    dilation: tuple[int, ...]


@dataclass(frozen=True)
class HoneycombGraph:
    n: int
    vertices: tuple[Vertex, ...]
    internal_edges: tuple[str, ...]
    boundary_edges: tuple[str, ...]
    hexagons: tuple[Hexagon, ...]
    edges: dict  # id -> Edge
    vertex_edges: dict  # Vertex -> {EdgeClass: edge id}

    @property
    def all_edges(self) -> tuple[str, ...]:
        return self.internal_edges + self.boundary_edges

    def edge(self, edge_id: str) -> Edge:
        return self.edges[edge_id]

    def hexagon(self, hex_id: str) -> Hexagon:
        for h in self.hexagons:
            if h.id == hex_id:
                return h
        raise KeyError(hex_id)


def _build(n: int) -> HoneycombGraph:
    ups = [Vertex("up", a, b) for a in range(n) for b in range(n - a)]
    dns = [Vertex("dn", a, b) for a in range(n - 1) for b in range(n - 1 - a)]
    vertices = tuple(sorted(ups) + sorted(dns))

    edges: dict[str, Edge] = {}
    vertex_edges: dict[Vertex, dict[EdgeClass, str]] = {
        v: {} for v in vertices}

    def add(edge: Edge) -> None:
        edges[edge.id] = edge
        vertex_edges[edge.u][edge.cls] = edge.id
        if edge.v is not None:
            vertex_edges[edge.v][edge.cls] = edge.id

    internal_ids = []
    for dn in sorted(dns):
        a, b = dn.a, dn.b
        for cls, other in ((EdgeClass.X, Vertex("up", a + 1, b)),
                           (EdgeClass.Y, Vertex("up", a, b)),
                           (EdgeClass.Z, Vertex("up", a, b + 1))):
            eid = internal_edge_id(a, b, cls)
            u, v = (dn, other) if cls != EdgeClass.Z else (other, dn)
            add(Edge(eid, cls, True, u, v, None))
            internal_ids.append(eid)

    boundary_ids = []
    for i in range(1, n + 1):
        eid = boundary_edge_id("NW", i)
        add(Edge(eid, EdgeClass.X, False, Vertex("up", 0, i - 1), None,
                 Direction.NW, "NW", i))
        boundary_ids.append(eid)
    for i in range(1, n + 1):
        eid = boundary_edge_id("NE", i)
        add(Edge(eid, EdgeClass.Y, False, Vertex("up", i - 1, n - i), None,
                 Direction.NE, "NE", i))
        boundary_ids.append(eid)
    for i in range(1, n + 1):
        eid = boundary_edge_id("S", i)
        add(Edge(eid, EdgeClass.Z, False, Vertex("up", n - i, 0), None,
                 Direction.S, "S", i))
        boundary_ids.append(eid)

    hexagons = []
    for i in range(1, n):
        for j in range(1, n - i):
            cycle = (internal_edge_id(i - 1, j, EdgeClass.X),
                     internal_edge_id(i - 1, j, EdgeClass.Y),
                     internal_edge_id(i - 1, j - 1, EdgeClass.Z),
                     internal_edge_id(i - 1, j - 1, EdgeClass.X),
                     internal_edge_id(i, j - 1, EdgeClass.Y),
                     internal_edge_id(i, j - 1, EdgeClass.Z))
            # Outward dilation decreases the interior potential at (i, j);
            # cycle coordinates carry it with alternating sign.
            dilation = (-1, 1, -1, 1, -1, 1)
            hexagons.append(Hexagon(f"hex:{i},{j}", (i, j), cycle, dilation))

    for v, incident in vertex_edges.items():
        assert len(incident) == 3, f"vertex {v} has {len(incident)} edges"

    return HoneycombGraph(n, vertices, tuple(internal_ids),
                          tuple(boundary_ids), tuple(hexagons), edges,
                          vertex_edges)


_cache: dict[int, HoneycombGraph] = {}
_cache_lock = threading.Lock()


def build_graph(n: int) -> HoneycombGraph:
    """The honeycomb topology tau_n; memoized, thread safe."""
    if n < 1:
        raise ValueError("n must be >= 1")
    with _cache_lock:
        g = _cache.get(n)
        if g is None:
            g = _build(n)
            _cache[n] = g
        return g


def length_pairs(g: HoneycombGraph, edge_id: str
                 ) -> tuple[tuple[str, str], tuple[str, str]]:
    """Two equivalent expressions for an internal edge length.

    Returns ((p1, m1), (p2, m2)) with length = coord[p1] - coord[m1]
    = coord[p2] - coord[m2]; agreement is a consequence of the vertex
    equalities.
    """
    e = g.edges[edge_id]
    if not e.internal:
        raise ValueError("boundary rays have no length")
    ve = g.vertex_edges
    u, v = e.u, e.v
    if e.cls is EdgeClass.Z:      # top u, bottom v
        return ((ve[u][EdgeClass.Y], ve[v][EdgeClass.Y]),
                (ve[v][EdgeClass.X], ve[u][EdgeClass.X]))
    if e.cls is EdgeClass.X:      # NW u, SE v
        return ((ve[u][EdgeClass.Y], ve[v][EdgeClass.Y]),
                (ve[v][EdgeClass.Z], ve[u][EdgeClass.Z]))
    # class Y: NE u, SW v
    return ((ve[u][EdgeClass.Z], ve[v][EdgeClass.Z]),
            (ve[v][EdgeClass.X], ve[u][EdgeClass.X]))


# ---------------------------------------------------------------------------
# Potential (triangulation-vertex) coordinatization.
# ---------------------------------------------------------------------------

TriVertex = tuple[int, int]


def tri_vertices(n: int) -> list[TriVertex]:
    return [(i, j) for i in range(n + 1) for j in range(n + 1 - i)]


def interior_tri_vertices(n: int) -> list[TriVertex]:
    """Free fiber parameters; one per hexagon, row-major order."""
    return [(i, j) for i in range(1, n) for j in range(1, n - i)]


def boundary_tri_vertices(n: int) -> list[TriVertex]:
    return [p for p in tri_vertices(n)
            if p[0] == 0 or p[1] == 0 or p[0] + p[1] == n]


def boundary_potential(lam: Iterable[Rat], mu: Iterable[Rat],
                       nu: Iterable[Rat]) -> dict[TriVertex, Rat]:
    """Potential values on boundary triangulation vertices.

    Requires the trace identity (the two derivations of the SE corner must
    agree); raises DimensionMismatchError on unequal lengths.
    """
    lam, mu, nu = list(lam), list(mu), list(nu)
    n = len(lam)
    if len(mu) != n or len(nu) != n:
        raise DimensionMismatchError("spectra must have equal lengths")
    if sum(lam) + sum(mu) + sum(nu) != 0:
        raise ValueError("trace identity fails; no boundary potential")
    H: dict[TriVertex, Rat] = {(0, 0): Fraction(0)}
    for j in range(1, n + 1):                     # NW flank, top of ray j
        H[(0, j)] = H[(0, j - 1)] - lam[j - 1]
    for a in range(1, n + 1):                     # S flank
        H[(a, 0)] = H[(a - 1, 0)] + nu[n - a]
    for a in range(1, n + 1):                     # NE flank
        H[(a, n - a)] = H[(a - 1, n - a + 1)] - mu[a - 1]
    return H


def edge_coord_from_potential(g: HoneycombGraph, edge_id: str,
                              H: dict[TriVertex, Rat]) -> Rat:
    n = g.n
    e = g.edges[edge_id]
    if e.internal:
        if e.cls is EdgeClass.Z:
            a, b = e.v.a, e.v.b           # down endpoint keys the edge
            return H[(a + 1, b + 1)] - H[(a, b + 1)]
        a, b = e.u.a, e.u.b               # down endpoint is u for X, Y
        if e.cls is EdgeClass.Y:
            return H[(a, b + 1)] - H[(a + 1, b)]
        return H[(a + 1, b)] - H[(a + 1, b + 1)]
    i = e.slot
    if e.side == "NW":
        return H[(0, i - 1)] - H[(0, i)]
    if e.side == "NE":
        return H[(i - 1, n - i + 1)] - H[(i, n - i)]
    return H[(n - i + 1, 0)] - H[(n - i, 0)]


def edge_length_corners(edge_id: str) -> tuple[tuple[TriVertex, TriVertex],
                                               tuple[TriVertex, TriVertex]]:
    """((far1, far2), (shared1, shared2)) of the rhombus across an internal
    edge: length = H[far1] + H[far2] - H[shared1] - H[shared2]."""
    kind, ab, cls_name = edge_id.split(":")
    if kind != "dn":
        raise ValueError("boundary rays have no rhombus")
    a, b = (int(t) for t in ab.split(","))
    if cls_name == "Z":
        return (((a + 1, b), (a, b + 2)), ((a, b + 1), (a + 1, b + 1)))
    if cls_name == "Y":
        return (((a, b), (a + 1, b + 1)), ((a + 1, b), (a, b + 1)))
    return (((a + 2, b), (a, b + 1)), ((a + 1, b), (a + 1, b + 1)))


def edge_length_from_potential(edge_id: str,
                               H: dict[TriVertex, Rat]) -> Rat:
    (f1, f2), (s1, s2) = edge_length_corners(edge_id)
    return H[f1] + H[f2] - H[s1] - H[s2]


def potential_from_coords(g: HoneycombGraph,
                          coords: dict[str, Rat]) -> dict[TriVertex, Rat]:
    """Integrate edge coordinates to the potential, gauge H(0,0) = 0.

    Assumes the vertex equalities hold (they make the result well
    defined)."""
    n = g.n
    H: dict[TriVertex, Rat] = {(0, 0): Fraction(0)}
    for a in range(1, n + 1):
        H[(a, 0)] = H[(a - 1, 0)] + coords[boundary_edge_id("S", n - a + 1)]
    for j in range(1, n + 1):
        H[(0, j)] = H[(0, j - 1)] - coords[boundary_edge_id("NW", j)]
    for j in range(1, n + 1):
        for i in range(1, n + 1 - j):
            H[(i, j)] = H[(i - 1, j)] + coords[
                internal_edge_id(i - 1, j - 1, EdgeClass.Z)]
    return H
