from fractions import Fraction

import pytest

from honeycombs.graph import (build_graph, boundary_potential,
                              interior_tri_vertices, tri_vertices)
from honeycombs.plane import EdgeClass


@pytest.mark.parametrize("n,verts,internal,bdy,hexes", [
    (1, 1, 0, 3, 0),
    (2, 4, 3, 6, 0),
    (3, 9, 9, 9, 1),
    (4, 16, 18, 12, 3),
    (5, 25, 30, 15, 6),
])
def test_counts(n, verts, internal, bdy, hexes):
    g = build_graph(n)
    assert len(g.vertices) == verts == n * n
    assert len(g.internal_edges) == internal == 3 * n * (n - 1) // 2
    assert len(g.boundary_edges) == bdy == 3 * n
    assert len(g.hexagons) == hexes == (n - 1) * (n - 2) // 2


def test_rejects_zero():
    with pytest.raises(ValueError):
        build_graph(0)


def test_every_vertex_has_one_edge_per_class():
    g = build_graph(4)
    for v, incident in g.vertex_edges.items():
        assert set(incident) == {EdgeClass.X, EdgeClass.Y, EdgeClass.Z}


def test_hexagon_cycles_alternate_classes():
    g = build_graph(5)
    for hx in g.hexagons:
        classes = [g.edge(e).cls for e in hx.edges]
        assert classes == [EdgeClass.X, EdgeClass.Y, EdgeClass.Z,
                           EdgeClass.X, EdgeClass.Y, EdgeClass.Z]
        assert hx.dilation == (-1, 1, -1, 1, -1, 1)


def test_memoized_instance():
    assert build_graph(3) is build_graph(3)


def test_equality_system_solution_dimension():
    # Vertex equalities: one per vertex over all edge coordinates; their
    # solution space has dimension n(n+3)/2, i.e. rank n^2 exactly.
    for n in (1, 2, 3, 4):
        g = build_graph(n)
        edges = list(g.all_edges)
        idx = {e: k for k, e in enumerate(edges)}
        rows = []
        for v in g.vertices:
            row = [Fraction(0)] * len(edges)
            for e in g.vertex_edges[v].values():
                row[idx[e]] += 1
            rows.append(row)
        rank = _rank(rows)
        assert rank == n * n
        assert len(edges) - rank == n * (n + 3) // 2


def test_breathing_vectors_linearly_independent():
    from honeycombs.honeycomb import breathing_vector

    g = build_graph(5)
    edges = {e: k for k, e in enumerate(g.all_edges)}
    rows = []
    for hx in g.hexagons:
        vec = breathing_vector(g, hx)
        row = [Fraction(0)] * len(edges)
        for e, s in vec.items():
            row[edges[e]] = s
        rows.append(row)
    assert _rank(rows) == len(g.hexagons)


def test_breathing_vector_in_equality_kernel():
    from honeycombs.honeycomb import breathing_vector

    g = build_graph(5)
    for hx in g.hexagons:
        vec = breathing_vector(g, hx)
        for v, incident in g.vertex_edges.items():
            total = sum(vec.get(e, Fraction(0)) for e in incident.values())
            assert total == 0
        for e in g.boundary_edges:
            assert e not in vec


def test_boundary_potential_partial_sums():
    lam = [Fraction(3), Fraction(1)]
    mu = [Fraction(2), Fraction(0)]
    nu = [Fraction(-2), Fraction(-4)]
    H = boundary_potential(lam, mu, nu)
    assert H[(0, 0)] == 0
    assert H[(0, 1)] == -3 and H[(0, 2)] == -4
    assert H[(1, 0)] == -4 and H[(2, 0)] == -6
    assert H[(1, 1)] == -6  # H(0,2) - mu_1
    with pytest.raises(ValueError):
        boundary_potential([Fraction(1)], [Fraction(1)], [Fraction(1)])


def test_tri_vertex_enumeration():
    assert len(tri_vertices(3)) == 10
    assert interior_tri_vertices(3) == [(1, 1)]
    assert interior_tri_vertices(4) == [(1, 1), (1, 2), (2, 1)]


def _rank(rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows))
                    if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank
