"""Horn's recursive inequality list and the inequality-only decision.

Admissible index triples (i, j, k) of length r < n, entries in [0, n-r],
are filtered by the quantum relation in dimension r; each yields the
linear inequality

    lam_{i_1+r} + ... + lam_{i_r+1} + mu_{j_1+r} + ... + mu_{j_r+1}
        >= nu_{k_1+r} + ... + nu_{k_r+1}

on spectra of length n (1-based indexing).  The list is Horn's full,
deliberately overcomplete one; facet minimization lives with the overlay
machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .counting import decide_quantum
from .errors import DimensionMismatchError
from .fibers import _as_spectrum


@dataclass(frozen=True)
class AdmissibleTriple:
    r: int
    i: tuple[int, ...]
    j: tuple[int, ...]
    k: tuple[int, ...]


@dataclass(frozen=True)
class HornInequality:
    triple: AdmissibleTriple
    n: int

    def subsets(self) -> tuple[tuple[int, ...], tuple[int, ...],
                               tuple[int, ...]]:
        """1-based index subsets (I, J, K) with sum_I lam + sum_J mu >=
        sum_K nu."""
        r = self.triple.r
        # term t (1-based) of sequence s contributes index s_t + (r - t + 1)
        idx = lambda seq: tuple(sorted(seq[t - 1] + r - t + 1
                                       for t in range(1, r + 1)))
        return idx(self.triple.i), idx(self.triple.j), idx(self.triple.k)

    def human(self) -> str:
        I, J, K = self.subsets()
        lhs = "+".join([f"l{i}" for i in I] + [f"m{j}" for j in J])
        rhs = "+".join(f"n{k}" for k in K)
        return f"{lhs} >= {rhs}"

    def machine(self) -> dict:
        I, J, K = self.subsets()
        return {"r": self.triple.r, "i": list(self.triple.i),
                "j": list(self.triple.j), "k": list(self.triple.k),
                "lam_indices": list(I), "mu_indices": list(J),
                "nu_indices": list(K)}


def _weakly_decreasing(r: int, top: int):
    for comb in combinations_with_replacement(range(top + 1), r):
        yield tuple(sorted(comb, reverse=True))


@lru_cache(maxsize=None)
def admissible_triples(n: int) -> tuple[AdmissibleTriple, ...]:
    """All admissible triples for dimension n, ordered by (r, lex)."""
    if n < 2:
        raise ValueError("admissible triples need n >= 2")
    out = []
    for r in range(1, n):
        top = n - r
        seqs = sorted(set(_weakly_decreasing(r, top)))
        for i in seqs:
            for j in seqs:
                for k in seqs:
                    if sum(i) + sum(j) != sum(k):
                        continue  # center character must match
                    if decide_quantum(list(i), list(j), list(k)):
                        out.append(AdmissibleTriple(r, i, j, k))
    return tuple(out)


def horn_inequalities(n: int) -> tuple[HornInequality, ...]:
    return tuple(HornInequality(t, n) for t in admissible_triples(n))


def evaluate(ineq: HornInequality, lam, mu, nu) -> bool:
    """Exact check of one Horn inequality on spectra of length n."""
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    n = ineq.n
    if len(lam) != n or len(mu) != n or len(nu) != n:
        raise DimensionMismatchError("spectrum length != inequality n")
    I, J, K = ineq.subsets()
    lhs = sum(lam.values[i - 1] for i in I) + sum(mu.values[j - 1]
                                                  for j in J)
    rhs = sum(nu.values[k - 1] for k in K)
    return lhs >= rhs


def decide_by_horn(lam, mu, nu) -> bool:
    """Trace identity plus every Horn inequality for dimension n."""
    lam, mu, nu = map(_as_spectrum, (lam, mu, nu))
    n = len(lam)
    if len(mu) != n or len(nu) != n:
        raise DimensionMismatchError("spectra of unequal lengths")
    if lam.trace + mu.trace != nu.trace:
        return False
    if n == 1:
        return True
    return all(evaluate(ineq, lam, mu, nu) for ineq in horn_inequalities(n))
