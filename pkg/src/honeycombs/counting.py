"""Counting integral honeycombs: tensor-product multiplicities.

Two independent routes are kept deliberately separate:

  * ``count_integral_triple`` counts lattice points of the fiber polytope
    by depth-first search over the interior potential variables with exact
    interval pruning;
  * ``lr_oracle`` counts Littlewood-Richardson skew tableaux (column
    strict, row weak, lattice word) and shares no code with the counter.

Counts are exact arbitrary-precision integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

from . import lp as lpmod
from .errors import DimensionMismatchError
from .fibers import ReducedFiber, _reduced_lp, reduced_fiber, spectrum
from .graph import build_graph
from .honeycomb import Honeycomb, honeycomb_from_potential

ZERO = Fraction(0)


def _as_weight(values) -> list[int]:
    out = []
    for v in values:
        f = Fraction(v)
        if f.denominator != 1:
            raise ValueError(f"integral weight has non-integer entry {v}")
        out.append(f.numerator)
    for a, b in zip(out, out[1:]):
        if a < b:
            raise ValueError(f"weight {out} not weakly decreasing")
    return out


def _check_weights(*weights) -> tuple[list[list[int]], int]:
    ws = [_as_weight(w) for w in weights]
    n = len(ws[0])
    if any(len(w) != n for w in ws):
        raise DimensionMismatchError("weights of unequal lengths")
    return ws, n


def _negate(w: list[int]) -> list[int]:
    return [-v for v in reversed(w)]


# ---------------------------------------------------------------------------
# Honeycomb lattice-point counter.
# ---------------------------------------------------------------------------

def _root_bounds(rf: ReducedFiber) -> list[tuple[int, int]] | None:
    """Exact integer bounds per interior variable; None if fiber empty."""
    program = _reduced_lp(rf)
    bounds = []
    for k in range(len(rf.interior)):
        try:
            lo, hi = lpmod.bounding_box(program, k)
        except lpmod.InfeasibleProgramError:
            return None
        if lo is None or hi is None:
            raise lpmod.InvariantError("fiber polytope must be compact")
        bounds.append((ceil(lo), floor(hi)))
    return bounds


def _dfs_lattice(rf: ReducedFiber, on_point, stop,
                 first_interval: tuple[int, int] | None = None) -> None:
    """Enumerate integer interior vectors; calls on_point(t) per solution.

    ``stop()`` short-circuits the search when it returns True."""
    nv = len(rf.interior)
    bounds = _root_bounds(rf)
    if bounds is None:
        return
    if first_interval is not None:
        lo0, hi0 = bounds[0]
        bounds[0] = (max(lo0, first_interval[0]),
                     min(hi0, first_interval[1]))
    rows = rf.rows
    touching: list[list[int]] = [[] for _ in range(nv)]
    for r, (coeffs, _) in enumerate(rows):
        for k in coeffs:
            touching[k].append(r)
    resid = [const for _, const in rows]
    unassigned = [len(coeffs) for coeffs, _ in rows]
    t = [0] * nv

    def var_bounds(v: int) -> tuple[int, int]:
        lo, hi = bounds[v]
        for r in touching[v]:
            coeffs, _ = rows[r]
            free = ZERO
            for u, cu in coeffs.items():
                if u == v or u < v:
                    continue
                blo, bhi = bounds[u]
                free += max(cu * blo, cu * bhi)
            cv = coeffs[v]
            rhs = -resid[r] - free
            if cv > 0:
                lo = max(lo, ceil(Fraction(rhs) / cv))
            else:
                hi = min(hi, floor(Fraction(rhs) / cv))
        return lo, hi

    def descend(v: int) -> None:
        if stop():
            return
        if v == nv:
            on_point(list(t))
            return
        lo, hi = var_bounds(v)
        for value in range(lo, hi + 1):
            t[v] = value
            ok = True
            for r in touching[v]:
                coeffs, _ = rows[r]
                resid[r] += coeffs[v] * value
                unassigned[r] -= 1
                if unassigned[r] == 0 and resid[r] < 0:
                    ok = False
            if ok:
                descend(v + 1)
            for r in touching[v]:
                coeffs, _ = rows[r]
                resid[r] -= coeffs[v] * value
                unassigned[r] += 1
            if stop():
                return
        t[v] = 0

    descend(0)


def count_integral_triple(lam, mu, nu, stop_at: int | None = None,
                          first_interval: tuple[int, int] | None = None
                          ) -> int:
    """Number of integral honeycombs with boundary (lam, mu, nu).

    ``first_interval`` restricts the first interior variable to a closed
    integer range; counts over a partition of that variable's box add up
    to the total, which is the deterministic work-splitting contract."""
    (lam_w, mu_w, nu_w), n = _check_weights(lam, mu, nu)
    if sum(lam_w) + sum(mu_w) + sum(nu_w) != 0:
        return 0
    rf = reduced_fiber(spectrum(lam_w), spectrum(mu_w), spectrum(nu_w))
    if not rf.interior:
        if first_interval is not None:
            raise ValueError("no interior variable to split on")
        return 1 if all(const >= 0 for _, const in rf.rows) else 0
    count = 0

    def on_point(_t):
        nonlocal count
        count += 1

    def stop():
        return stop_at is not None and count >= stop_at

    _dfs_lattice(rf, on_point, stop, first_interval=first_interval)
    return count


def split_first_variable(lam, mu, nu, parts: int
                         ) -> list[tuple[int, int]]:
    """Partition the first interior variable's exact integer box into up
    to ``parts`` consecutive intervals covering it exactly."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    (lam_w, mu_w, nu_w), _ = _check_weights(lam, mu, nu)
    if sum(lam_w) + sum(mu_w) + sum(nu_w) != 0:
        return []
    rf = reduced_fiber(spectrum(lam_w), spectrum(mu_w), spectrum(nu_w))
    if not rf.interior:
        raise ValueError("no interior variable to split on")
    bounds = _root_bounds(rf)
    if bounds is None:
        return []
    lo, hi = bounds[0]
    if lo > hi:
        return []
    width = hi - lo + 1
    parts = min(parts, width)
    cuts = [lo + (width * k) // parts for k in range(parts)] + [hi + 1]
    return [(cuts[k], cuts[k + 1] - 1) for k in range(parts)]


def tensor_multiplicity(lam, mu, nu, stop_at: int | None = None) -> int:
    """Multiplicity of the weight-nu irreducible in the tensor product of
    the weight-lam and weight-mu irreducibles of U(n)."""
    (lam_w, mu_w, nu_w), _ = _check_weights(lam, mu, nu)
    return count_integral_triple(lam_w, mu_w, _negate(nu_w),
                                 stop_at=stop_at)


def decide_quantum(lam, mu, nu) -> bool:
    return tensor_multiplicity(lam, mu, nu, stop_at=1) >= 1


def enumerate_integral(lam, mu, nu, limit: int) -> list[Honeycomb]:
    """Up to ``limit`` integral honeycombs with the given boundary, in
    lexicographic order of the interior potential vector."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    (lam_w, mu_w, nu_w), n = _check_weights(lam, mu, nu)
    if sum(lam_w) + sum(mu_w) + sum(nu_w) != 0:
        return []
    rf = reduced_fiber(spectrum(lam_w), spectrum(mu_w), spectrum(nu_w))
    g = build_graph(n)
    found: list[Honeycomb] = []
    if not rf.interior:
        if all(const >= 0 for _, const in rf.rows):
            found.append(honeycomb_from_potential(g, dict(rf.Hb)))
        return found

    def on_point(t):
        H = dict(rf.Hb)
        for p, v in zip(rf.interior, t):
            H[p] = Fraction(v)
        found.append(honeycomb_from_potential(g, H))

    def stop():
        return len(found) >= limit

    _dfs_lattice(rf, on_point, stop)
    return found


# ---------------------------------------------------------------------------
# Independent Littlewood-Richardson tableaux oracle.
# ---------------------------------------------------------------------------

def lr_oracle(lam, mu, nu) -> int:
    """Littlewood-Richardson count via skew tableaux; no honeycombs.

    Shifts all three weights by a common center twist to reach partitions
    (shifting lam by c and mu by d shifts nu by c + d), then counts column
    strict, row weak skew fillings of nu/lam with content mu whose reverse
    reading word is a lattice word.
    """
    (lam_w, mu_w, nu_w), n = _check_weights(lam, mu, nu)
    c = -lam_w[-1]
    d = -mu_w[-1]
    lam_p = [v + c for v in lam_w]
    mu_p = [v + d for v in mu_w]
    nu_p = [v + c + d for v in nu_w]
    if nu_p[-1] < 0:
        return 0
    if sum(nu_p) != sum(lam_p) + sum(mu_p):
        return 0
    if any(nu_p[i] < lam_p[i] for i in range(n)):
        return 0
    if mu_p == [0] * n:
        return 1 if nu_p == lam_p else 0

    # Cells in reverse reading order: each row right to left.
    cells = []
    for r in range(n):
        for col in range(nu_p[r] - 1, lam_p[r] - 1, -1):
            cells.append((r, col))

    remaining = list(mu_p)
    placed: dict[tuple[int, int], int] = {}
    prefix = [0] * (n + 1)
    total = 0

    def fill(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, col = cells[idx]
        right = placed.get((r, col + 1))
        above = placed.get((r - 1, col)) if r > 0 else None
        hi = right if right is not None else n
        # Lattice word + row weakness force every v to sit in row >= v-1.
        hi = min(hi, r + 1)
        for v in range(1, hi + 1):
            if above is not None and v <= above:
                continue
            if remaining[v - 1] == 0:
                continue
            if v > 1 and prefix[v - 1] < prefix[v] + 1:
                continue
            placed[(r, col)] = v
            remaining[v - 1] -= 1
            prefix[v] += 1
            fill(idx + 1)
            prefix[v] -= 1
            remaining[v - 1] += 1
            del placed[(r, col)]

    fill(0)
    return total
