"""Feasibility of boundary triples, fiber polytopes, and largest lifts.

The fiber over (lam, mu, nu) is coordinatized by the interior potential
values (one per hexagon); every edge length is an affine form in those
with coefficients in {-1, 0, +1} and at most four terms.  Decisions are
made exactly: a "feasible" answer always carries an exactly verified
rational point, an "infeasible" answer a trace violation, an exactly
verified Farkas combination, or an exact simplex run.  The floating-point
presolve only proposes candidates and never decides anything by itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import lp as lpmod
from .errors import (DimensionMismatchError, InfeasibleTripleError,
                     InvariantError)
from .graph import (HoneycombGraph, TriVertex, boundary_potential,
                    build_graph, edge_length_corners, interior_tri_vertices,
                    internal_edge_id)
from .diagram import line_param, to_diagram
from .honeycomb import (Honeycomb, boundary, honeycomb_from_potential,
                        is_integral)
from .plane import Direction, EdgeClass, PointB, Rat, rat

ZERO = Fraction(0)


@dataclass(frozen=True)
class Spectrum:
    """A weakly decreasing list of exact rationals."""

    values: tuple[Rat, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.values, self.values[1:]):
            if a < b:
                raise ValueError(f"spectrum {self.values} not decreasing")

    def __len__(self) -> int:
        return len(self.values)

    def negate(self) -> "Spectrum":
        return Spectrum(tuple(-v for v in reversed(self.values)))

    def scale(self, factor) -> "Spectrum":
        factor = rat(factor)
        if factor < 0:
            raise ValueError("scale factor must be nonnegative")
        return Spectrum(tuple(factor * v for v in self.values))

    def shift(self, c) -> "Spectrum":
        c = rat(c)
        return Spectrum(tuple(v + c for v in self.values))

    def add(self, other: "Spectrum") -> "Spectrum":
        if len(other) != len(self):
            raise DimensionMismatchError("spectra of unequal lengths")
        return Spectrum(tuple(a + b for a, b in
                              zip(self.values, other.values)))

    @property
    def trace(self) -> Rat:
        return sum(self.values, ZERO)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def is_regular(self) -> bool:
        """No repeated entries."""
        return all(a > b for a, b in zip(self.values, self.values[1:]))


def spectrum(values) -> Spectrum:
    return Spectrum(tuple(rat(v) for v in values))


def _as_spectrum(s) -> Spectrum:
    return s if isinstance(s, Spectrum) else spectrum(s)


def _check_lengths(*specs: Spectrum) -> int:
    n = len(specs[0])
    if any(len(s) != n for s in specs):
        raise DimensionMismatchError(
            f"spectra lengths {[len(s) for s in specs]} differ")
    return n


# ---------------------------------------------------------------------------
# Reduced fiber system over interior potential variables.
# ---------------------------------------------------------------------------

@dataclass
class ReducedFiber:
    """rows[i] = (coeffs, const) meaning const + coeffs . t >= 0."""

    n: int
    interior: list[TriVertex]
    var_index: dict[TriVertex, int]
    rows: list[tuple[dict[int, int], Rat]]
    row_edges: list[str]
    Hb: dict[TriVertex, Rat]


def reduced_fiber(lam: Spectrum, mu: Spectrum, nu: Spectrum) -> ReducedFiber:
    """Requires trace zero (checked by boundary_potential)."""
    n = len(lam)
    Hb = boundary_potential(lam.values, mu.values, nu.values)
    interior = interior_tri_vertices(n)
    var_index = {p: k for k, p in enumerate(interior)}
    rows = []
    row_edges = []
    for a in range(n - 1):
        for b in range(n - 1 - a):
            for cls in (EdgeClass.X, EdgeClass.Y, EdgeClass.Z):
                eid = internal_edge_id(a, b, cls)
                (f1, f2), (s1, s2) = edge_length_corners(eid)
                coeffs: dict[int, int] = {}
                const = ZERO
                for corner, sign in ((f1, 1), (f2, 1), (s1, -1), (s2, -1)):
                    if corner in var_index:
                        k = var_index[corner]
                        coeffs[k] = coeffs.get(k, 0) + sign
                        if coeffs[k] == 0:
                            del coeffs[k]
                    else:
                        const += sign * Hb[corner]
                rows.append((coeffs, const))
                row_edges.append(eid)
    return ReducedFiber(n, interior, var_index, rows, row_edges, Hb)


def _reduced_lp(rf: ReducedFiber, objective=None) -> lpmod.LinearProgram:
    nv = len(rf.interior)
    ineqs = []
    for coeffs, const in rf.rows:
        row = [ZERO] * nv
        for k, c in coeffs.items():
            row[k] = Fraction(c)
        ineqs.append((tuple(row), -const))
    obj = tuple(objective) if objective is not None else (ZERO,) * nv
    return lpmod.LinearProgram(nv, (), tuple(ineqs), obj)


def _verify_point(rf: ReducedFiber, t: list[Rat]) -> bool:
    return all(const + sum(t[k] * c for k, c in coeffs.items()) >= 0
               for coeffs, const in rf.rows)


def _interval_feasible(rf: ReducedFiber) -> list[Rat] | None:
    """Exact solution for a single interior variable, no LP needed."""
    lo: Rat | None = None
    hi: Rat | None = None
    for coeffs, const in rf.rows:
        if not coeffs:
            if const < 0:
                return None
            continue
        c = coeffs[0]
        bound = -const / Fraction(c)
        if c > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is not None and hi is not None and lo > hi:
        return None
    pick = lo if lo is not None else (hi if hi is not None else ZERO)
    return [pick]


def _float_presolve(rf: ReducedFiber) -> tuple[str, list[list[Rat]]]:
    """Floating-point max-margin presolve.

    Returns ("feasible", candidates), ("infeasible", []) or
    ("unknown", []).  Candidates are rational roundings of the max-margin
    point; the caller verifies them exactly, so this stage can never
    corrupt an answer."""
    try:
        import numpy as np
        from scipy.optimize import linprog
    except Exception:  # pragma: no cover - scipy is an optional accelerant
        return ("unknown", [])
    nv = len(rf.interior)
    nr = len(rf.rows)
    A = np.zeros((nr, nv + 1))
    b = np.zeros(nr)
    for r, (coeffs, const) in enumerate(rf.rows):
        for k, c in coeffs.items():
            A[r, k] = -float(c)          # -coeffs.t + delta <= const
        A[r, nv] = 1.0
        b[r] = float(const)
    c_obj = np.zeros(nv + 1)
    c_obj[nv] = -1.0                     # maximize interior margin delta
    bounds = [(None, None)] * nv + [(None, 1.0)]
    res = linprog(c_obj, A_ub=A, b_ub=b, bounds=bounds, method="highs")
    if not res.success or res.x is None:
        return ("unknown", [])
    margin = res.x[nv]
    if margin < -1e-7:
        return ("infeasible", [])
    x = res.x[:nv]
    candidates = []
    for k in (0, 8, 16, 24, 32, 48):
        denom = 1 << k
        candidates.append([Fraction(round(v * denom), denom) for v in x])
    return ("feasible", candidates)


def _float_farkas(rf: ReducedFiber) -> bool:
    """Try to certify infeasibility exactly from a float dual solution.

    Returns True only when an exact rational Farkas combination has been
    reconstructed and verified."""
    try:
        import numpy as np
        from scipy.optimize import linprog
    except Exception:  # pragma: no cover
        return False
    nv = len(rf.interior)
    nr = len(rf.rows)
    # minimize const . y  s.t.  A^T y = 0, sum y = 1, y >= 0
    A_eq = np.zeros((nv + 1, nr))
    for r, (coeffs, _) in enumerate(rf.rows):
        for k, c in coeffs.items():
            A_eq[k, r] = float(c)
        A_eq[nv, r] = 1.0
    b_eq = np.zeros(nv + 1)
    b_eq[nv] = 1.0
    c_obj = np.array([float(const) for _, const in rf.rows])
    res = linprog(c_obj, A_eq=A_eq, b_eq=b_eq,
                  bounds=[(0, None)] * nr, method="highs")
    if not res.success or res.x is None or res.fun >= -1e-9:
        return False
    support = [r for r in range(nr) if res.x[r] > 1e-9]
    if not support or len(support) > 800:
        return False
    # Solve the support system exactly: columns are supported rows.
    m_rows = nv + 1
    M = [[Fraction(0)] * len(support) for _ in range(m_rows)]
    for col, r in enumerate(support):
        coeffs, _ = rf.rows[r]
        for k, c in coeffs.items():
            M[k][col] = Fraction(c)
        M[nv][col] = Fraction(1)
    rhs = [Fraction(0)] * m_rows
    rhs[nv] = Fraction(1)
    sol = _solve_exact(M, rhs)
    if sol is None:
        return False
    if any(v < 0 for v in sol):
        return False
    total = sum(v * rf.rows[r][1] for v, r in zip(sol, support))
    if total >= 0:
        return False
    combo = [ZERO] * nv
    for v, r in zip(sol, support):
        for k, c in rf.rows[r][0].items():
            combo[k] += v * c
    return all(c == 0 for c in combo)


def _solve_exact(M: list[list[Rat]], rhs: list[Rat]) -> list[Rat] | None:
    """Gaussian elimination over the rationals; a particular solution of
    M x = rhs or None when inconsistent.  Free variables are set to 0."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    A = [list(row) + [r] for row, r in zip(M, rhs)]
    pivots: list[tuple[int, int]] = []
    pr = 0
    for pc in range(cols):
        sel = next((r for r in range(pr, rows) if A[r][pc] != 0), None)
        if sel is None:
            continue
        A[pr], A[sel] = A[sel], A[pr]
        inv = Fraction(1) / A[pr][pc]
        A[pr] = [v * inv for v in A[pr]]
        for r in range(rows):
            if r != pr and A[r][pc] != 0:
                f = A[r][pc]
                A[r] = [a - f * b for a, b in zip(A[r], A[pr])]
        pivots.append((pr, pc))
        pr += 1
        if pr == rows:
            break
    for r in range(pr, rows):
        if A[r][cols] != 0:
            return None
    x = [ZERO] * cols
    for r, c in pivots:
        x[c] = A[r][cols]
    return x


def feasible_potential(lam: Spectrum, mu: Spectrum, nu: Spectrum
                       ) -> dict[TriVertex, Rat] | None:
    """A potential for some honeycomb with the given boundary, or None.

    Every "feasible" answer carries an exactly verified rational point;
    "infeasible" is backed by a trace violation, an exactly verified
    Farkas combination, or an exact simplex run.
    """
    n = _check_lengths(lam, mu, nu)
    if lam.trace + mu.trace + nu.trace != 0:
        return None
    rf = reduced_fiber(lam, mu, nu)
    nv = len(rf.interior)

    def assemble(t: list[Rat]) -> dict[TriVertex, Rat]:
        H = dict(rf.Hb)
        for p, v in zip(rf.interior, t):
            H[p] = v
        return H

    if nv == 0:
        if all(const >= 0 for _, const in rf.rows):
            return dict(rf.Hb)
        return None
    if nv == 1:
        t = _interval_feasible(rf)
        return assemble(t) if t is not None else None

    status, candidates = _float_presolve(rf)
    if status == "feasible":
        for cand in candidates:
            if _verify_point(rf, cand):
                return assemble(cand)
    elif status == "infeasible" and _float_farkas(rf):
        return None

    res = lpmod.feasible_point(_reduced_lp(rf))
    if res.status == lpmod.OPTIMAL:
        t = list(res.point)
        if not _verify_point(rf, t):
            raise InvariantError("simplex point failed fiber verification")
        return assemble(t)
    return None


@dataclass
class FiberPolytope:
    """The polytope of honeycombs over a fixed boundary.

    ``lp`` is the full-coordinate program (one variable per edge of tau_n,
    vertex-sum equalities, pinned boundary, nonnegative lengths), exactly
    as the cone is organized; operations use the equivalent reduced system
    internally.
    """

    lam: Spectrum
    mu: Spectrum
    nu: Spectrum
    graph: HoneycombGraph
    lp: lpmod.LinearProgram


def fiber_polytope(lam, mu, nu) -> FiberPolytope:
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    n = _check_lengths(lam, mu, nu)
    g = build_graph(n)
    edges = list(g.all_edges)
    idx = {e: k for k, e in enumerate(edges)}
    nv = len(edges)

    def unit(e: str, sign=1) -> list[Rat]:
        row = [ZERO] * nv
        row[idx[e]] = Fraction(sign)
        return row

    equalities = []
    for v in g.vertices:
        row = [ZERO] * nv
        for e in g.vertex_edges[v].values():
            row[idx[e]] += 1
        equalities.append((tuple(row), ZERO))
    for side, spec in (("NW", lam), ("NE", mu), ("S", nu)):
        for i, value in enumerate(spec.values, start=1):
            equalities.append((tuple(unit(f"bdy:{side}:{i}")), value))

    inequalities = []
    from .graph import length_pairs
    for e in g.internal_edges:
        (p1, m1), _ = length_pairs(g, e)
        row = [ZERO] * nv
        row[idx[p1]] += 1
        row[idx[m1]] -= 1
        inequalities.append((tuple(row), ZERO))

    program = lpmod.LinearProgram(nv, tuple(equalities),
                                  tuple(inequalities), (ZERO,) * nv)
    return FiberPolytope(lam, mu, nu, g, program)


def decide_triple(lam, mu, nu) -> bool:
    """Whether a honeycomb with boundary (lam, mu, nu) exists; exact."""
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    _check_lengths(lam, mu, nu)
    return feasible_potential(lam, mu, nu) is not None


def decide_sum(lam, mu, nu) -> bool:
    """The spectral-sum relation: honeycomb with boundary (lam, mu, -nu)."""
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    _check_lengths(lam, mu, nu)
    return decide_triple(lam, mu, nu.negate())


# ---------------------------------------------------------------------------
# Slackened feasibility (for empirically sampled boundary data).
# ---------------------------------------------------------------------------

def _slack_lp(lam: Spectrum, mu: Spectrum, nu: Spectrum,
              slack_bound: Rat | None) -> tuple[lpmod.LinearProgram, int]:
    """LP over (interior potentials, nu perturbations delta[, s]).

    The nu side may move within the box |delta_i| <= slack (or <= s when
    ``slack_bound`` is None and s is a minimized extra variable); the
    perturbed triple must close the trace exactly.  Returns (lp, n_vars_t).
    """
    from .graph import edge_length_corners, internal_edge_id
    n = len(lam)
    interior = interior_tri_vertices(n)
    var_index = {p: k for k, p in enumerate(interior)}
    nt = len(interior)
    ns = 0 if slack_bound is not None else 1
    nv = nt + n + ns
    s_col = nt + n

    def corner_expr(i: int, j: int) -> tuple[dict[int, Rat], Rat]:
        if (i, j) in var_index:
            return ({var_index[(i, j)]: Fraction(1)}, ZERO)
        if j == 0:
            const = sum(nu.values[n - i:], ZERO)
            coeffs = {nt + k: Fraction(1) for k in range(n - i, n)}
            return (coeffs, const)
        if i == 0:
            return ({}, -sum(lam.values[:j], ZERO))
        # hypotenuse, i + j == n, i > 0
        return ({}, -lam.trace - sum(mu.values[:i], ZERO))

    ineqs = []
    for a in range(n - 1):
        for b in range(n - 1 - a):
            for cls in (EdgeClass.X, EdgeClass.Y, EdgeClass.Z):
                eid = internal_edge_id(a, b, cls)
                (f1, f2), (s1, s2) = edge_length_corners(eid)
                row = [ZERO] * nv
                const = ZERO
                for corner, sign in ((f1, 1), (f2, 1), (s1, -1), (s2, -1)):
                    coeffs, c = corner_expr(*corner)
                    const += sign * c
                    for k, v in coeffs.items():
                        row[k] += sign * v
                ineqs.append((tuple(row), -const))
    for k in range(n):
        up = [ZERO] * nv
        up[nt + k] = Fraction(-1)
        dn = [ZERO] * nv
        dn[nt + k] = Fraction(1)
        if slack_bound is not None:
            ineqs.append((tuple(up), -slack_bound))   # delta_k <= slack
            ineqs.append((tuple(dn), -slack_bound))   # delta_k >= -slack
        else:
            up[s_col] = Fraction(1)
            dn[s_col] = Fraction(1)
            ineqs.append((tuple(up), ZERO))           # s - delta_k >= 0
            ineqs.append((tuple(dn), ZERO))           # s + delta_k >= 0
    eq_row = [ZERO] * nv
    for k in range(n):
        eq_row[nt + k] = Fraction(1)
    mismatch = -(lam.trace + mu.trace + nu.trace)
    equalities = ((tuple(eq_row), mismatch),)
    objective = [ZERO] * nv
    if ns:
        objective[s_col] = Fraction(-1)   # maximize -s == minimize s
    return (lpmod.LinearProgram(nv, equalities, tuple(ineqs),
                                tuple(objective)), nt)


def decide_triple_nu_slack(lam, mu, nu, slack) -> bool:
    """Triple feasibility allowing the nu boundary values to move within
    an exact box of radius ``slack`` (trace re-closed exactly)."""
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    _check_lengths(lam, mu, nu)
    slack = rat(slack)
    mismatch = lam.trace + mu.trace + nu.trace
    if abs(mismatch) > len(lam) * slack:
        return False
    program, _ = _slack_lp(lam, mu, nu, slack)
    return lpmod.feasible_point(program).status == lpmod.OPTIMAL


def minimal_nu_slack(lam, mu, nu) -> Rat:
    """The smallest box radius on nu that makes the triple feasible."""
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    _check_lengths(lam, mu, nu)
    program, _ = _slack_lp(lam, mu, nu, None)
    res = lpmod.solve(program)
    if res.status != lpmod.OPTIMAL:
        raise InvariantError("minimal slack LP must be solvable")
    return -res.value


# ---------------------------------------------------------------------------
# Superharmonic functionals and largest lifts.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SuperharmonicWeights:
    """Edge weights whose functional strictly increases under dilation of
    every hexagon; certified at construction."""

    graph: HoneycombGraph
    weights: dict[str, Rat]
    seed: int

    def value(self, h: Honeycomb) -> Rat:
        return sum(w * h.coords[e] for e, w in self.weights.items())


def superharmonic_weights(g: HoneycombGraph, seed: int
                          ) -> SuperharmonicWeights:
    """Base telescoping functional plus a seeded small perturbation.

    The base pairs every hexagon's dilation with +1; perturbations are
    bounded by 1/16 per edge so each hexagon keeps a margin >= 5/8."""
    weights: dict[str, Rat] = {e: ZERO for e in g.all_edges}
    for (i, j) in interior_tri_vertices(g.n):
        for k in range(1, i + 1):
            eid = internal_edge_id(k - 1, j - 1, EdgeClass.Z)
            weights[eid] -= 1
    rng = random.Random(seed)
    for e in g.all_edges:
        weights[e] += Fraction(rng.randint(-4, 4), 64)
    sw = SuperharmonicWeights(g, weights, seed)
    from .honeycomb import breathing_vector
    for hx in g.hexagons:
        vec = breathing_vector(g, hx)
        pairing = sum(weights[e] * s for e, s in vec.items())
        if pairing <= 0:
            raise InvariantError(
                f"superharmonic certificate failed on {hx.id}")
    return sw


def _edge_coord_affine(g: HoneycombGraph, edge_id: str,
                       rf: ReducedFiber) -> tuple[dict[int, Rat], Rat]:
    """Edge coordinate as (coeffs over interior vars, const)."""
    from .graph import edge_coord_from_potential
    probe = dict(rf.Hb)
    for p in rf.interior:
        probe[p] = ZERO
    const = edge_coord_from_potential(g, edge_id, probe)
    coeffs: dict[int, Rat] = {}
    for k, p in enumerate(rf.interior):
        probe[p] = Fraction(1)
        value = edge_coord_from_potential(g, edge_id, probe)
        probe[p] = ZERO
        if value != const:
            coeffs[k] = value - const
    return coeffs, const


def largest_lift(lam, mu, nu, w: SuperharmonicWeights | None = None,
                 seed: int = 0) -> Honeycomb:
    """The honeycomb maximizing the superharmonic functional over the
    fiber, with lexicographic tie-break over edge coordinates."""
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    n = _check_lengths(lam, mu, nu)
    g = build_graph(n)
    if w is None:
        w = superharmonic_weights(g, seed)
    if lam.trace + mu.trace + nu.trace != 0:
        raise InfeasibleTripleError("trace identity fails")
    rf = reduced_fiber(lam, mu, nu)
    nv = len(rf.interior)
    if nv == 0:
        if not all(const >= 0 for _, const in rf.rows):
            raise InfeasibleTripleError("no honeycomb with this boundary")
        return honeycomb_from_potential(g, dict(rf.Hb))

    objective = [ZERO] * nv
    for e, weight in w.weights.items():
        if weight == 0:
            continue
        coeffs, _ = _edge_coord_affine(g, e, rf)
        for k, c in coeffs.items():
            objective[k] += weight * c

    program = _reduced_lp(rf, objective)
    res = lpmod.solve(program)
    if res.status == lpmod.INFEASIBLE:
        raise InfeasibleTripleError("no honeycomb with this boundary")
    if res.status == lpmod.UNBOUNDED:
        raise InvariantError("fiber polytope must be compact")
    program = lpmod.LinearProgram(
        program.num_vars,
        program.equalities + ((tuple(objective), res.value),),
        program.inequalities, program.objective)

    # Tie-break: maximize edge coordinates in the deterministic edge order.
    for e in g.internal_edges:
        coeffs, const = _edge_coord_affine(g, e, rf)
        if not coeffs:
            continue
        row = [ZERO] * nv
        for k, c in coeffs.items():
            row[k] = c
        sub = lpmod.LinearProgram(nv, program.equalities,
                                  program.inequalities, tuple(row))
        res_e = lpmod.solve(sub)
        if res_e.status != lpmod.OPTIMAL:
            raise InvariantError("tie-break solve must stay bounded")
        program = lpmod.LinearProgram(
            nv, program.equalities + ((tuple(row), res_e.value),),
            program.inequalities, program.objective)

    final = lpmod.feasible_point(program)
    if final.status != lpmod.OPTIMAL:
        raise InvariantError("pinned lift system must be feasible")
    H = dict(rf.Hb)
    for p, v in zip(rf.interior, final.point):
        H[p] = v
    lift = honeycomb_from_potential(g, H)
    got = boundary(lift)
    if (got.lam != lam.values or got.mu != mu.values
            or got.nu != nu.values):
        raise InvariantError("lift boundary mismatch")
    return lift


# ---------------------------------------------------------------------------
# Underlying graphs of simply degenerate honeycombs.
# ---------------------------------------------------------------------------

NOT_SIMPLY_DEGENERATE = "NOT_SIMPLY_DEGENERATE"

_INC_DIR = {EdgeClass.X: Direction.SE, EdgeClass.Y: Direction.SW,
            EdgeClass.Z: Direction.S}
_DEC_DIR = {EdgeClass.X: Direction.NW, EdgeClass.Y: Direction.NE,
            EdgeClass.Z: Direction.N}

_UP_STAR = frozenset((Direction.NW, Direction.NE, Direction.S))
_DOWN_STAR = frozenset((Direction.N, Direction.SW, Direction.SE))


@dataclass
class UnderlyingGraph:
    """Y-vertices and the multiplicity-one pieces joining them; transverse
    crossings are not vertices."""

    vertices: list[PointB]
    edges: list[tuple[int, int]]
    rays: list[tuple[int, Direction]]

    def has_cycle(self) -> bool:
        parent = list(range(len(self.vertices)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                return True
            parent[ru] = rv
        return False


def underlying_graph(h):
    """The underlying graph, or NOT_SIMPLY_DEGENERATE.

    Vertices are the Y-shaped endpoint stars of the canonical diagram;
    transverse crossings of two straight pieces count as edges missing
    one another.  Any multiplicity above 1 or any non-Y endpoint star
    disqualifies the input.  Accepts a Honeycomb or a canonical Diagram
    (overlays are diagrams)."""
    from .diagram import Diagram
    d = h if isinstance(h, Diagram) else to_diagram(h)
    if any(p.mult != 1 for p in d.pieces):
        return NOT_SIMPLY_DEGENERATE

    stars: dict[tuple, list[Direction]] = {}
    seg_ends: list[tuple] = []
    for piece in d.pieces:
        start, end = piece.endpoints()
        if start is not None:
            stars.setdefault(start.as_tuple(), []).append(
                _INC_DIR[piece.cls])
        if end is not None:
            stars.setdefault(end.as_tuple(), []).append(
                _DEC_DIR[piece.cls])
        seg_ends.append((start, end))

    for pt, dirs in stars.items():
        star = frozenset(dirs)
        if len(dirs) != 3 or (star != _UP_STAR and star != _DOWN_STAR):
            return NOT_SIMPLY_DEGENERATE
    # No piece may pass through a vertex point in its interior.
    for piece in d.pieces:
        for pt in stars:
            p = PointB(*pt)
            if piece.const == p.coord(piece.cls):
                if piece.contains_param(line_param(piece.cls, p),
                                        strict=True):
                    return NOT_SIMPLY_DEGENERATE

    index = {pt: k for k, pt in enumerate(stars)}
    vertices = [PointB(*pt) for pt in stars]
    edges = []
    rays = []
    for piece, (start, end) in zip(d.pieces, seg_ends):
        if start is not None and end is not None:
            edges.append((index[start.as_tuple()], index[end.as_tuple()]))
        elif start is not None:
            # Infinite on the +param side: ray leaves toward increasing
            # parameter.
            rays.append((index[start.as_tuple()], _INC_DIR[piece.cls]))
        elif end is not None:
            rays.append((index[end.as_tuple()], _DEC_DIR[piece.cls]))
    return UnderlyingGraph(vertices, edges, rays)


# ---------------------------------------------------------------------------
# Saturation.
# ---------------------------------------------------------------------------

@dataclass
class SaturationReport:
    feasible: bool
    witness: Honeycomb | None
    witness_integral: bool | None
    agrees: bool

    def to_json(self) -> dict:
        from .honeycomb import to_json as h_json
        return {"feasible": self.feasible,
                "integral_witness": (h_json(self.witness)
                                     if self.witness is not None
                                     and self.witness_integral else None),
                "agrees": self.agrees}


def check_saturation(lam, mu, nu, seed: int = 0) -> SaturationReport:
    """Real feasibility vs integral witness for an integral triple."""
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    _check_lengths(lam, mu, nu)
    for s in (lam, mu, nu):
        if not s.is_integral():
            raise ValueError("check_saturation needs integer spectra")
    feasible = decide_triple(lam, mu, nu)
    if not feasible:
        return SaturationReport(False, None, None, True)
    witness = largest_lift(lam, mu, nu, seed=seed)
    integral = is_integral(witness)
    got = boundary(witness)
    agrees = integral and got.lam == lam.values and got.mu == mu.values \
        and got.nu == nu.values
    return SaturationReport(True, witness, integral, agrees)
