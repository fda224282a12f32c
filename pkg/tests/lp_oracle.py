"""Independent brute-force LP oracle for cross-checking the simplex.

Feasibility and optimal values via Fourier-Motzkin elimination, plus
vertex/basis enumeration for optimal-value cross-checks.  Exponential and
exact; only for tiny programs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

INF = "inf"


def _substitute(rows, pivot_row, var):
    coeffs, rhs = pivot_row
    c = coeffs[var]
    out = []
    for r_coeffs, r_rhs, kind in rows:
        f = r_coeffs[var]
        if f == 0:
            out.append((r_coeffs, r_rhs, kind))
            continue
        scale = f / c
        new_coeffs = [a - scale * b for a, b in zip(r_coeffs, coeffs)]
        out.append((new_coeffs, r_rhs - scale * rhs, kind))
    return out


def fm_status_and_max(num_vars, equalities, inequalities, objective):
    """("infeasible" | "unbounded" | "optimal", value) by projection.

    inequalities mean coeff . x >= rhs; the objective is maximized.
    """
    # Extend with t = objective . x; eliminate all original variables.
    rows = []
    for coeffs, rhs in equalities:
        rows.append((list(coeffs) + [Fraction(0)], rhs, "eq"))
    for coeffs, rhs in inequalities:
        rows.append((list(coeffs) + [Fraction(0)], rhs, "ge"))
    rows.append((list(-c for c in objective) + [Fraction(1)],
                 Fraction(0), "eq"))
    nv = num_vars + 1

    for var in range(num_vars):
        pivot_idx = next((i for i, (c, _, k) in enumerate(rows)
                          if k == "eq" and c[var] != 0), None)
        if pivot_idx is not None:
            coeffs, rhs, _ = rows[pivot_idx]
            rest = rows[:pivot_idx] + rows[pivot_idx + 1:]
            rows = _substitute(rest, (coeffs, rhs), var)
            continue
        lowers = []
        uppers = []
        rest = []
        for coeffs, rhs, kind in rows:
            c = coeffs[var]
            if c == 0:
                rest.append((coeffs, rhs, kind))
            elif c > 0:
                lowers.append((coeffs, rhs))
            else:
                uppers.append((coeffs, rhs))
        new_rows = list(rest)
        for lc, lr in lowers:
            for uc, ur in uppers:
                a = lc[var]
                b = -uc[var]
                coeffs = [b * p + a * q for p, q in zip(lc, uc)]
                new_rows.append((coeffs, b * lr + a * ur, "ge"))
        rows = new_rows

    # Only the t column remains.
    lo = None
    hi = None
    feasible = True
    for coeffs, rhs, kind in rows:
        c = coeffs[num_vars]
        if kind == "eq":
            if c == 0:
                if rhs != 0:
                    feasible = False
            else:
                v = rhs / c
                lo = v if lo is None else max(lo, v)
                hi = v if hi is None else min(hi, v)
        else:
            if c == 0:
                if rhs > 0:
                    feasible = False
            elif c > 0:
                v = rhs / c
                lo = v if lo is None else max(lo, v)
            else:
                v = rhs / c
                hi = v if hi is None else min(hi, v)
    if not feasible or (lo is not None and hi is not None and lo > hi):
        return ("infeasible", None)
    if hi is None:
        return ("unbounded", None)
    return ("optimal", hi)


def enumerate_vertices(num_vars, equalities, inequalities):
    """All basic feasible points of the constraint system."""
    rows = [(tuple(c), r) for c, r in equalities]
    rows += [(tuple(c), r) for c, r in inequalities]
    n_eq = len(equalities)
    verts = []
    indices = range(len(rows))
    for subset in combinations(indices, num_vars):
        if not set(range(n_eq)) <= set(subset) and n_eq > num_vars:
            continue
        M = [list(rows[i][0]) for i in subset]
        rhs = [rows[i][1] for i in subset]
        pt = _solve_square(M, rhs)
        if pt is None:
            continue
        ok = True
        for i, (coeffs, r) in enumerate(rows):
            val = sum(c * x for c, x in zip(coeffs, pt))
            if i < n_eq:
                if val != r:
                    ok = False
                    break
            elif val < r:
                ok = False
                break
        if ok and pt not in verts:
            verts.append(pt)
    return verts


def _solve_square(M, rhs):
    n = len(M)
    A = [list(row) + [r] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        inv = Fraction(1) / A[col][col]
        A[col] = [v * inv for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return tuple(A[r][n] for r in range(n))
