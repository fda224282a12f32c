"""Exact rational linear programming.

Two-phase tableau simplex over Fraction with Bland's anti-cycling rule.
Every returned status carries an exactly verified witness: feasible points
satisfy all constraints with zero tolerance, infeasibility comes with a
Farkas certificate, unboundedness with an improving ray.

Variables are free (unrestricted sign); constraints are equalities
``coeff . x == rhs`` and inequalities ``coeff . x >= rhs``; the objective
is maximized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (InfeasibleProgramError, InvariantError,
                     UnboundedDirectionError)
from .plane import Rat

Row = tuple[tuple[Rat, ...], Rat]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LinearProgram:
    num_vars: int
    equalities: tuple[Row, ...]
    inequalities: tuple[Row, ...]
    objective: tuple[Rat, ...]

    def __post_init__(self) -> None:
        for coeffs, _ in self.equalities + self.inequalities:
            if len(coeffs) != self.num_vars:
                raise ValueError("constraint row length != num_vars")
        if len(self.objective) != self.num_vars:
            raise ValueError("objective length != num_vars")


def make_lp(num_vars: int,
            equalities: Sequence[tuple[Sequence[int | str | Fraction],
                                       int | str | Fraction]] = (),
            inequalities: Sequence[tuple[Sequence[int | str | Fraction],
                                         int | str | Fraction]] = (),
            objective: Sequence[int | str | Fraction] | None = None,
            ) -> LinearProgram:
    """Convenience constructor converting entries to Fractions."""
    conv_rows = lambda rows: tuple(
        (tuple(Fraction(c) for c in coeffs), Fraction(rhs))
        for coeffs, rhs in rows)
    obj = (tuple(Fraction(c) for c in objective) if objective is not None
           else (ZERO,) * num_vars)
    return LinearProgram(num_vars, conv_rows(equalities),
                         conv_rows(inequalities), obj)


INFEASIBLE = "infeasible"
OPTIMAL = "optimal"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    point: tuple[Rat, ...] | None = None
    value: Rat | None = None
    certificate: tuple[Rat, ...] | None = None  # (y_eq..., y_ineq...)
    ray: tuple[Rat, ...] | None = None


def _check_point(lp: LinearProgram, x: Sequence[Rat]) -> None:
    for coeffs, rhs in lp.equalities:
        if sum(c * v for c, v in zip(coeffs, x)) != rhs:
            raise InvariantError("optimal point violates an equality")
    for coeffs, rhs in lp.inequalities:
        if sum(c * v for c, v in zip(coeffs, x)) < rhs:
            raise InvariantError("optimal point violates an inequality")


def _check_certificate(lp: LinearProgram, y: Sequence[Rat]) -> None:
    ne = len(lp.equalities)
    y_eq, y_in = y[:ne], y[ne:]
    if any(v < 0 for v in y_in):
        raise InvariantError("Farkas certificate negative on an inequality")
    combo = [ZERO] * lp.num_vars
    total = ZERO
    for w, (coeffs, rhs) in zip(y_eq, lp.equalities):
        for j, c in enumerate(coeffs):
            combo[j] += w * c
        total += w * rhs
    for w, (coeffs, rhs) in zip(y_in, lp.inequalities):
        for j, c in enumerate(coeffs):
            combo[j] += w * c
        total += w * rhs
    if any(c != 0 for c in combo) or total <= 0:
        raise InvariantError("Farkas certificate fails verification")


def _check_ray(lp: LinearProgram, ray: Sequence[Rat]) -> None:
    for coeffs, _ in lp.equalities:
        if sum(c * v for c, v in zip(coeffs, ray)) != 0:
            raise InvariantError("ray violates an equality direction")
    for coeffs, _ in lp.inequalities:
        if sum(c * v for c, v in zip(coeffs, ray)) < 0:
            raise InvariantError("ray violates an inequality direction")
    if sum(c * v for c, v in zip(lp.objective, ray)) <= 0:
        raise InvariantError("ray does not improve the objective")


class _Tableau:
    """Dense simplex tableau in standard form.

    Columns: u_0..u_{N-1}, v_0..v_{N-1} (x = u - v), one surplus column per
    inequality, one artificial per row; last column is the rhs.
    """

    def __init__(self, lp: LinearProgram):
        self.lp = lp
        n = lp.num_vars
        ne = len(lp.equalities)
        ni = len(lp.inequalities)
        self.m = ne + ni
        self.ncols = 2 * n + ni + self.m
        self.art0 = 2 * n + ni
        self.row_sign: list[int] = []
        self.rows: list[list[Rat]] = []
        self.active: list[bool] = [True] * self.m

        all_rows = list(lp.equalities) + list(lp.inequalities)
        for i, (coeffs, rhs) in enumerate(all_rows):
            row = [ZERO] * (self.ncols + 1)
            for j, c in enumerate(coeffs):
                row[j] = c
                row[n + j] = -c
            if i >= ne:
                row[2 * n + (i - ne)] = -ONE  # surplus for >=
            row[self.ncols] = rhs
            sign = 1
            if rhs < 0:
                sign = -1
                row = [-c for c in row]
            row[self.art0 + i] = ONE
            self.row_sign.append(sign)
            self.rows.append(row)
        self.basis = [self.art0 + i for i in range(self.m)]
        self.obj = [ZERO] * (self.ncols + 1)

    def set_objective(self, costs: list[Rat], allow: Callable[[int], bool]) -> None:
        """Recompute the reduced-cost row ``z_j - c_j`` for given costs."""
        self.costs = costs
        self.allow = allow
        obj = [ZERO] * (self.ncols + 1)
        for j in range(self.ncols + 1):
            s = ZERO
            for r in range(self.m):
                if self.active[r]:
                    cb = costs[self.basis[r]]
                    if cb:
                        s += cb * self.rows[r][j]
            obj[j] = s
        for j in range(self.ncols):
            obj[j] -= costs[j]
        self.obj = obj

    def pivot(self, r: int, col: int) -> None:
        prow = self.rows[r]
        piv = prow[col]
        inv = ONE / piv
        self.rows[r] = [c * inv for c in prow]
        prow = self.rows[r]
        for i in range(self.m):
            if i != r and self.active[i]:
                f = self.rows[i][col]
                if f:
                    row = self.rows[i]
                    self.rows[i] = [a - f * b for a, b in zip(row, prow)]
        f = self.obj[col]
        if f:
            self.obj = [a - f * b for a, b in zip(self.obj, prow)]
        self.basis[r] = col

    def run(self, dump: Callable[[str], None] | None = None
            ) -> tuple[str, int]:
        """Bland simplex to optimality.

        Returns (OPTIMAL, -1) or (UNBOUNDED, entering_column).
        """
        while True:
            col = -1
            for j in range(self.ncols):
                if self.allow(j) and self.obj[j] < 0:
                    col = j
                    break
            if col < 0:
                return OPTIMAL, -1
            best_r = -1
            best = None
            for r in range(self.m):
                if not self.active[r]:
                    continue
                a = self.rows[r][col]
                if a > 0:
                    ratio = self.rows[r][self.ncols] / a
                    if (best is None or ratio < best
                            or (ratio == best
                                and self.basis[r] < self.basis[best_r])):
                        best = ratio
                        best_r = r
            if best_r < 0:
                return UNBOUNDED, col
            if dump is not None:
                dump(self.render())
            self.pivot(best_r, col)

    def render(self) -> str:
        lines = ["basis " + " ".join(str(b) for b in self.basis)]
        for r in range(self.m):
            if self.active[r]:
                lines.append(" ".join(str(c) for c in self.rows[r]))
        lines.append("z " + " ".join(str(c) for c in self.obj))
        return "\n".join(lines) + "\n"

    def values(self) -> list[Rat]:
        vals = [ZERO] * self.ncols
        for r in range(self.m):
            if self.active[r]:
                vals[self.basis[r]] = self.rows[r][self.ncols]
        return vals

    def point(self) -> tuple[Rat, ...]:
        vals = self.values()
        n = self.lp.num_vars
        return tuple(vals[j] - vals[n + j] for j in range(n))


def solve(lp: LinearProgram,
          debug_dump: Callable[[str], None] | None = None) -> LPResult:
    """Exact two-phase simplex with Bland's rule; deterministic."""
    # Degenerate rows with no variables at all.
    if lp.num_vars == 0:
        for i, (_, rhs) in enumerate(lp.equalities):
            if rhs != 0:
                cert = [ZERO] * (len(lp.equalities) + len(lp.inequalities))
                cert[i] = ONE if rhs > 0 else -ONE
                _check_certificate(lp, cert)
                return LPResult(INFEASIBLE, certificate=tuple(cert))
        for i, (_, rhs) in enumerate(lp.inequalities):
            if rhs > 0:
                cert = [ZERO] * (len(lp.equalities) + len(lp.inequalities))
                cert[len(lp.equalities) + i] = ONE
                _check_certificate(lp, cert)
                return LPResult(INFEASIBLE, certificate=tuple(cert))
        return LPResult(OPTIMAL, point=(), value=ZERO)

    tab = _Tableau(lp)
    n = lp.num_vars
    ne = len(lp.equalities)

    # Phase 1: maximize -sum(artificials).
    costs1 = [ZERO] * tab.ncols
    for j in range(tab.art0, tab.ncols):
        costs1[j] = -ONE
    tab.set_objective(costs1, lambda j: True)
    status, _ = tab.run(debug_dump)
    if status != OPTIMAL:
        raise InvariantError("phase 1 cannot be unbounded")
    if tab.obj[tab.ncols] < 0:
        # y = c_B B^-1, read off the artificial (identity) columns.
        y_std = [tab.obj[tab.art0 + i] + costs1[tab.art0 + i]
                 for i in range(tab.m)]
        y = [-tab.row_sign[i] * y_std[i] for i in range(tab.m)]
        # Clear roundoff-free tiny negatives cannot occur (exact); but
        # equality multipliers are free, inequality ones must be >= 0.
        _check_certificate(lp, y)
        return LPResult(INFEASIBLE, certificate=tuple(y))

    # Drive basic artificials out; drop rows that are entirely redundant.
    for r in range(tab.m):
        if tab.active[r] and tab.basis[r] >= tab.art0:
            piv_col = -1
            for j in range(tab.art0):
                if tab.rows[r][j] != 0:
                    piv_col = j
                    break
            if piv_col >= 0:
                tab.pivot(r, piv_col)
            else:
                tab.active[r] = False

    # Phase 2: original objective; artificials are barred from entering.
    costs2 = [ZERO] * tab.ncols
    for j in range(n):
        costs2[j] = lp.objective[j]
        costs2[n + j] = -lp.objective[j]
    allow = lambda j: j < tab.art0
    tab.set_objective(costs2, allow)
    status, col = tab.run(debug_dump)

    if status == UNBOUNDED:
        direction = [ZERO] * tab.ncols
        direction[col] = ONE
        for r in range(tab.m):
            if tab.active[r]:
                direction[tab.basis[r]] = -tab.rows[r][col]
        ray = tuple(direction[j] - direction[n + j] for j in range(n))
        _check_ray(lp, ray)
        return LPResult(UNBOUNDED, ray=ray)

    x = tab.point()
    _check_point(lp, x)
    value = sum(c * v for c, v in zip(lp.objective, x))
    return LPResult(OPTIMAL, point=x, value=value)


def feasible_point(lp: LinearProgram) -> LPResult:
    """Phase-1 only: OPTIMAL with a feasible point, or INFEASIBLE."""
    probe = LinearProgram(lp.num_vars, lp.equalities, lp.inequalities,
                          (ZERO,) * lp.num_vars)
    return solve(probe)


def _with_objective(lp: LinearProgram, obj: Sequence[Rat]) -> LinearProgram:
    return LinearProgram(lp.num_vars, lp.equalities, lp.inequalities,
                         tuple(obj))


def _with_equality(lp: LinearProgram, coeffs: Sequence[Rat],
                   rhs: Rat) -> LinearProgram:
    return LinearProgram(lp.num_vars,
                         lp.equalities + ((tuple(coeffs), rhs),),
                         lp.inequalities, lp.objective)


def lexicographic_max(lp: LinearProgram,
                      priority: Sequence[int]) -> tuple[Rat, ...]:
    """Maximize variables in priority order, each subject to earlier maxima.

    ``priority`` is a permutation of range(num_vars); the result is the
    unique lexicographic maximizer.
    """
    if sorted(priority) != list(range(lp.num_vars)):
        raise ValueError("priority must be a permutation of the variables")
    current = lp
    for var in priority:
        obj = [ZERO] * lp.num_vars
        obj[var] = ONE
        res = solve(_with_objective(current, obj))
        if res.status == INFEASIBLE:
            raise InfeasibleProgramError("lexicographic_max on empty region")
        if res.status == UNBOUNDED:
            raise UnboundedDirectionError(f"variable {var} is unbounded")
        current = _with_equality(current, obj, res.value)
    res = feasible_point(current)
    if res.status != OPTIMAL:
        raise InvariantError("pinned lexicographic system must be feasible")
    return res.point


def bounding_box(lp: LinearProgram,
                 var: int) -> tuple[Rat | None, Rat | None]:
    """Exact (min, max) of a variable over the feasible region.

    ``None`` stands for an infinite bound.  Raises InfeasibleProgramError
    on an empty region.
    """
    obj = [ZERO] * lp.num_vars
    obj[var] = ONE
    res_max = solve(_with_objective(lp, obj))
    if res_max.status == INFEASIBLE:
        raise InfeasibleProgramError("bounding_box of empty region")
    obj[var] = -ONE
    res_min = solve(_with_objective(lp, obj))
    hi = res_max.value if res_max.status == OPTIMAL else None
    lo = -res_min.value if res_min.status == OPTIMAL else None
    return (lo, hi)
