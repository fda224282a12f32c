"""The random-matrix side: sample sums of Hermitian matrices with fixed
spectra and compare against the exact polyhedral decisions.

Floating point lives only here; every LP question re-enters exact
arithmetic (sampled spectra are rounded to rationals first).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (InfeasibleTripleError, InvariantError,
                     NotHermitianError, TooLargeError)
from .fibers import (Spectrum, _as_spectrum, _reduced_lp, _solve_exact,
                     decide_triple, decide_triple_nu_slack, minimal_nu_slack,
                     reduced_fiber, spectrum)
from . import lp as lpmod
from .plane import Rat

HERMITIAN_TOL = 1e-9
JACOBI_TOL = 1e-14
ROUND_DENOM = 10 ** 6
DEFAULT_SLACK = Fraction(1, 10 ** 5)


def matrix_with_spectrum(lam, seed: int) -> np.ndarray:
    """U diag(lam) U* with U Haar-distributed.

    U comes from QR of a complex Gaussian matrix with the R-diagonal phase
    correction that makes the distribution exactly Haar."""
    lam = _as_spectrum(lam)
    rng = np.random.default_rng(seed)
    u = _haar_unitary(rng, len(lam), 1)[0]
    vals = np.array([float(v) for v in lam.values])
    h = (u * vals) @ u.conj().T
    h = (h + h.conj().T) / 2.0
    got = eigenvalues(h)
    tol = 1e-10 * (1.0 + max(abs(v) for v in vals))
    if max(abs(a - b) for a, b in zip(got, vals)) > tol:
        raise InvariantError("sampled matrix spectrum drifted")
    return h


def _haar_unitary(rng: np.random.Generator, n: int,
                  batch: int) -> np.ndarray:
    z = (rng.standard_normal((batch, n, n))
         + 1j * rng.standard_normal((batch, n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1).copy()
    d[np.abs(d) == 0] = 1.0
    ph = d / np.abs(d)
    return q * ph[:, None, :]


def eigenvalues(h) -> list[float]:
    """Eigenvalues by cyclic Jacobi rotations, weakly decreasing.

    Sweeps run until the off-diagonal Frobenius mass drops below
    1e-14 * ||H||; raises NotHermitianError if H fails the Hermitian
    invariant beyond 1e-9."""
    a = np.array(h, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOL:
        raise NotHermitianError("matrix is not Hermitian within 1e-9")
    vals = _jacobi_batch(a[None, :, :])[0]
    return sorted((float(v) for v in vals), reverse=True)


def eigenvalues_batch(hs: np.ndarray) -> np.ndarray:
    """Cyclic Jacobi on a stack of Hermitian matrices; rows sorted
    decreasing."""
    return _jacobi_batch(np.array(hs, dtype=complex))


def _jacobi_batch(a: np.ndarray) -> np.ndarray:
    b, n, _ = a.shape
    a = (a + np.conj(np.transpose(a, (0, 2, 1)))) / 2.0
    if n == 1:
        return a[:, 0, 0].real
    norm = np.sqrt(np.sum(np.abs(a) ** 2, axis=(1, 2)))
    target = JACOBI_TOL * np.maximum(norm, 1e-300)
    for _ in range(60):
        off = np.sqrt(np.maximum(
            np.sum(np.abs(a) ** 2, axis=(1, 2))
            - np.sum(np.abs(np.diagonal(a, axis1=1, axis2=2)) ** 2, axis=1),
            0.0))
        if np.all(off <= target):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q].copy()
                mag = np.abs(apq)
                active = mag > 0
                if not np.any(active):
                    continue
                phase = np.ones(b, dtype=complex)
                phase[active] = apq[active] / mag[active]
                # Rotate column/row q so the pivot becomes real.
                a[:, :, q] *= np.conj(phase)[:, None]
                a[:, q, :] *= phase[:, None]
                app = a[:, p, p].real
                aqq = a[:, q, q].real
                apq_r = a[:, p, q].real
                t = np.zeros(b)
                nz = np.abs(apq_r) > 0
                tau = np.zeros(b)
                tau[nz] = (aqq[nz] - app[nz]) / (2.0 * apq_r[nz])
                t[nz] = np.sign(tau[nz]) / (
                    np.abs(tau[nz]) + np.sqrt(1.0 + tau[nz] ** 2))
                t[nz & (tau == 0)] = 1.0
                c = 1.0 / np.sqrt(1.0 + t ** 2)
                s = t * c
                cp = a[:, :, p].copy()
                cq = a[:, :, q].copy()
                a[:, :, p] = c[:, None] * cp - s[:, None] * cq
                a[:, :, q] = s[:, None] * cp + c[:, None] * cq
                rp = a[:, p, :].copy()
                rq = a[:, q, :].copy()
                a[:, p, :] = c[:, None] * rp - s[:, None] * rq
                a[:, q, :] = s[:, None] * rp + c[:, None] * rq
    else:
        raise InvariantError("Jacobi sweeps failed to converge")
    diag = np.real(np.diagonal(a, axis1=1, axis2=2))
    return -np.sort(-diag, axis=1)


# ---------------------------------------------------------------------------
# Monte Carlo necessity checks.
# ---------------------------------------------------------------------------

@dataclass
class SampleReport:
    trials: int
    violations: list[tuple[tuple[float, ...], float]] = field(
        default_factory=list)
    max_infeasibility_margin: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"trials": self.trials,
                "violations": [{"nu": list(nu), "margin": margin}
                               for nu, margin in self.violations],
                "max_infeasibility_margin": self.max_infeasibility_margin}


def sample_sum_spectra(lam, mu, trials: int, seed: int,
                       chunk: int = 4096) -> np.ndarray:
    """Spectra of H_lam + H_mu for independent Haar pairs; one row per
    trial, sorted decreasing."""
    lam = _as_spectrum(lam)
    mu = _as_spectrum(mu)
    n = len(lam)
    lam_f = np.array([float(v) for v in lam.values])
    mu_f = np.array([float(v) for v in mu.values])
    rng = np.random.default_rng(seed)
    out = np.empty((trials, n))
    done = 0
    while done < trials:
        m = min(chunk, trials - done)
        u = _haar_unitary(rng, n, m)
        v = _haar_unitary(rng, n, m)
        h = ((u * lam_f) @ np.conj(np.transpose(u, (0, 2, 1)))
             + (v * mu_f) @ np.conj(np.transpose(v, (0, 2, 1))))
        out[done:done + m] = eigenvalues_batch(h)
        done += m
    return out


def _round_spectrum(row) -> Spectrum:
    vals = [Fraction(round(x * ROUND_DENOM), ROUND_DENOM) for x in row]
    vals.sort(reverse=True)
    return Spectrum(tuple(vals))


def monte_carlo_check(lam, mu, trials: int, seed: int,
                      slack: Rat = DEFAULT_SLACK) -> SampleReport:
    """Sample spectra of sums and test each against the exact decision
    with the nu boundary slackened.

    Fast path: round, rebalance the trace uniformly, and test exact
    feasibility; only near-boundary samples fall through to the slack LP.
    """
    lam = _as_spectrum(lam)
    mu = _as_spectrum(mu)
    n = len(lam)
    slack = Fraction(slack) if not isinstance(slack, Fraction) else slack
    samples = sample_sum_spectra(lam, mu, trials, seed)
    report = SampleReport(trials=trials)
    for row in samples:
        nu = _round_spectrum(row)
        neg = nu.negate()
        mismatch = lam.trace + mu.trace + neg.trace
        balanced = neg.shift(-mismatch / n)
        if decide_triple(lam, mu, balanced):
            continue
        if decide_triple_nu_slack(lam, mu, neg, slack):
            continue
        margin = float(minimal_nu_slack(lam, mu, neg))
        report.violations.append((tuple(float(x) for x in row), margin))
        report.max_infeasibility_margin = max(
            report.max_infeasibility_margin, margin)
    return report


# ---------------------------------------------------------------------------
# Exact fiber volumes (desk scale).
# ---------------------------------------------------------------------------

def fiber_volume(lam, mu, nu) -> Rat:
    """Volume of the fiber polytope in the interior-potential coordinates.

    Dimension 0 fibers count as volume 1 by convention; n = 3 fibers are
    segments measured in the breathing parameter; n = 4 fibers are 3-polytopes
    measured by exact simplicial decomposition."""
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    n = len(lam)
    if n > 4:
        raise TooLargeError("fiber_volume is desk scale: n <= 4")
    if not decide_triple(lam, mu, nu):
        raise InfeasibleTripleError("empty fiber")
    if n <= 2:
        return Fraction(1)
    rf = reduced_fiber(lam, mu, nu)
    program = _reduced_lp(rf)
    if n == 3:
        lo, hi = lpmod.bounding_box(program, 0)
        if lo is None or hi is None:
            raise InvariantError("fiber must be compact")
        return hi - lo
    return _volume_3d(rf)


def _vertices_3d(rf) -> list[tuple[Rat, Rat, Rat]]:
    rows = [(coeffs, const) for coeffs, const in rf.rows]
    m = len(rows)
    seen = set()
    verts = []
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                M = []
                rhs = []
                for r in (i, j, k):
                    coeffs, const = rows[r]
                    M.append([Fraction(coeffs.get(c, 0)) for c in range(3)])
                    rhs.append(-const)
                det = _det3(M)
                if det == 0:
                    continue
                sol = _solve_exact(M, rhs)
                if sol is None:
                    continue
                pt = tuple(sol)
                if pt in seen:
                    continue
                good = all(const + sum(pt[c] * v for c, v in coeffs.items())
                           >= 0 for coeffs, const in rows)
                if good:
                    seen.add(pt)
                    verts.append(pt)
    return verts


def _det3(M) -> Rat:
    return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))


def _volume_3d(rf) -> Rat:
    verts = _vertices_3d(rf)
    if len(verts) < 4:
        return Fraction(0)
    cx = sum(v[0] for v in verts) / len(verts)
    cy = sum(v[1] for v in verts) / len(verts)
    cz = sum(v[2] for v in verts) / len(verts)
    center = (cx, cy, cz)
    total = Fraction(0)
    seen_facets = set()
    for coeffs, const in rf.rows:
        tight = [v for v in verts
                 if const + sum(v[c] * w for c, w in coeffs.items()) == 0]
        if len(tight) < 3:
            continue
        key = frozenset(tight)
        if key in seen_facets:
            continue
        seen_facets.add(key)
        total += _fan_volume(center, tight)
    return total


def _fan_volume(center, polygon_pts) -> Rat:
    """Sum of tetrahedra from ``center`` over a planar convex polygon
    given as an unordered vertex list; exact."""
    from functools import cmp_to_key

    pts = sorted(set(polygon_pts))
    p0 = pts[0]
    u1 = next((_sub(p, p0) for p in pts[1:] if any(_sub(p, p0))), None)
    if u1 is None:
        return Fraction(0)
    u2 = next((_sub(p, p0) for p in pts[1:]
               if any(_cross(u1, _sub(p, p0)))), None)
    if u2 is None:
        return Fraction(0)

    def chart(p):
        d = _sub(p, p0)
        return (_dot(d, u1), _dot(d, u2))

    k = len(pts)
    mx = sum(chart(p)[0] for p in pts) / k
    my = sum(chart(p)[1] for p in pts) / k

    def compare(a, b):
        ax, ay = chart(a)[0] - mx, chart(a)[1] - my
        bx, by = chart(b)[0] - mx, chart(b)[1] - my
        ha = 0 if (ay > 0 or (ay == 0 and ax > 0)) else 1
        hb = 0 if (by > 0 or (by == 0 and bx > 0)) else 1
        if ha != hb:
            return -1 if ha < hb else 1
        cross = ax * by - ay * bx
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    ordered = sorted(pts, key=cmp_to_key(compare))
    total = Fraction(0)
    a = ordered[0]
    for b, c in zip(ordered[1:], ordered[2:]):
        det = _det3([list(_sub(b, a)), list(_sub(c, a)),
                     list(_sub(center, a))])
        total += abs(det)
    return total / 6


def _sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def _dot(a, b) -> Rat:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])
