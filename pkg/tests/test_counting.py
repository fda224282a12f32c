import random
from itertools import combinations_with_replacement

import pytest

from honeycombs.counting import (count_integral_triple, decide_quantum,
                                 enumerate_integral, lr_oracle,
                                 tensor_multiplicity)
from honeycombs.errors import DimensionMismatchError
from honeycombs.fibers import decide_sum
from honeycombs.honeycomb import boundary, is_integral


def weakly_decreasing(n, lo, hi):
    for comb in combinations_with_replacement(range(hi, lo - 1, -1), n):
        yield tuple(sorted(comb, reverse=True))


def test_count_examples():
    assert count_integral_triple([1], [2], [-3]) == 1
    assert count_integral_triple([1], [2], [-2]) == 0
    assert count_integral_triple([1, 0], [1, 0], [-1, -1]) == 1
    assert count_integral_triple([2, 1, 0], [2, 1, 0], [-1, -2, -3]) == 2


def test_tensor_multiplicity_examples():
    assert tensor_multiplicity([1, 0], [1, 0], [1, 1]) == 1
    assert tensor_multiplicity([1, 0], [1, 0], [2, 0]) == 1
    assert tensor_multiplicity([2, 1, 0], [2, 1, 0], [3, 2, 1]) == 2
    assert tensor_multiplicity([1], [1], [3]) == 0


def test_lr_oracle_examples():
    assert lr_oracle([1, 0], [1, 0], [2, 0]) == 1
    assert lr_oracle([1, 0], [1, 0], [1, 1]) == 1
    assert lr_oracle([2, 1, 0], [2, 1, 0], [3, 2, 1]) == 2
    for k in range(4):
        for m in range(4):
            assert lr_oracle([k], [m], [k + m]) == 1


def test_decide_quantum_examples():
    assert decide_quantum([1, 0], [1, 0], [1, 1])
    assert not decide_quantum([3], [4], [5])


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        tensor_multiplicity([1, 0], [1], [1])


def test_non_integer_weight_rejected():
    with pytest.raises(ValueError):
        count_integral_triple(["1/2"], ["1/2"], [-1])


def test_oracle_equivalence_exhaustive_n2():
    specs = list(weakly_decreasing(2, 0, 3))
    for lam in specs:
        for mu in specs:
            for nu in specs:
                assert (count_integral_triple(lam, mu,
                                              [-v for v in reversed(nu)])
                        == lr_oracle(lam, mu, nu))


def test_oracle_equivalence_sampled_n3_n4():
    rng = random.Random(10)
    for n, entries in ((3, 5), (4, 4)):
        for _ in range(60):
            lam = tuple(sorted((rng.randint(0, entries) for _ in range(n)),
                               reverse=True))
            mu = tuple(sorted((rng.randint(0, entries) for _ in range(n)),
                              reverse=True))
            nu = tuple(sorted((rng.randint(0, entries) for _ in range(n)),
                              reverse=True))
            assert tensor_multiplicity(lam, mu, nu) == lr_oracle(lam, mu, nu)


def test_translation_covariance():
    rng = random.Random(12)
    for _ in range(25):
        lam = tuple(sorted((rng.randint(0, 4) for _ in range(3)),
                           reverse=True))
        mu = tuple(sorted((rng.randint(0, 4) for _ in range(3)),
                          reverse=True))
        nu = tuple(sorted((rng.randint(0, 6) for _ in range(3)),
                          reverse=True))
        base = tensor_multiplicity(lam, mu, nu)
        c, d = rng.randint(-3, 3), rng.randint(-3, 3)
        shifted = tensor_multiplicity([v + c for v in lam],
                                      [v + d for v in mu],
                                      [v + c + d for v in nu])
        assert base == shifted


def _random_trace_matched(rng, n, hi):
    """(lam, mu, nu) with sum(nu) == sum(lam) + sum(mu); nu wanders
    around the feasible region so both outcomes occur."""
    lam = tuple(sorted((rng.randint(0, hi) for _ in range(n)),
                       reverse=True))
    mu = tuple(sorted((rng.randint(0, hi) for _ in range(n)),
                      reverse=True))
    perm = list(mu)
    rng.shuffle(perm)
    nu = sorted((a + b for a, b in zip(lam, perm)), reverse=True)
    for _ in range(rng.randint(0, 4)):
        i, j = rng.randrange(n), rng.randrange(n)
        nu[i] += 1
        nu[j] -= 1
        nu.sort(reverse=True)
    return lam, mu, tuple(nu)


def test_scaling_monotonicity():
    rng = random.Random(14)
    found = 0
    for _ in range(40):
        lam, mu, nu = _random_trace_matched(rng, 3, 3)
        if not decide_quantum(lam, mu, nu):
            continue
        found += 1
        for N in (2, 3):
            assert decide_quantum([N * v for v in lam],
                                  [N * v for v in mu],
                                  [N * v for v in nu])
    assert found >= 5


def _weyl_dimension(weight) -> int:
    # Product over i < j of (w_i - w_j + j - i) / (j - i).
    n = len(weight)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= weight[i] - weight[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


def test_tensor_square_dimension_sum_rule():
    for n, lam, mu in ((2, (2, 0), (1, 0)), (3, (2, 1, 0), (1, 1, 0)),
                       (3, (2, 0, 0), (2, 1, 0))):
        dim_product = _weyl_dimension(lam) * _weyl_dimension(mu)
        total = 0
        lo = lam[-1] + mu[-1]
        hi = lam[0] + mu[0]
        for nu in combinations_with_replacement(range(hi, lo - 1, -1), n):
            nu = tuple(sorted(nu, reverse=True))
            if sum(nu) != sum(lam) + sum(mu):
                continue
            mult = tensor_multiplicity(lam, mu, nu)
            total += mult * _weyl_dimension(nu)
        assert total == dim_product


def test_quantum_implies_classical():
    rng = random.Random(15)
    found = 0
    for _ in range(60):
        lam, mu, nu = _random_trace_matched(rng, 3, 4)
        if decide_quantum(lam, mu, nu):
            found += 1
            assert decide_sum(lam, mu, nu)
    assert found >= 10


def test_enumerate_matches_count_and_postconditions():
    lam, mu, nu = [2, 1, 0], [2, 1, 0], [-1, -2, -3]
    hs = enumerate_integral(lam, mu, nu, 10)
    assert len(hs) == count_integral_triple(lam, mu, nu) == 2
    seen = set()
    for h in hs:
        assert is_integral(h)
        bt = boundary(h)
        assert bt.lam == (2, 1, 0) and bt.mu == (2, 1, 0)
        assert bt.nu == (-1, -2, -3)
        seen.add(tuple(sorted(h.coords.items())))
    assert len(seen) == 2
    # The two differ by one breathing step along the segment fiber.
    diff = {e for e in hs[0].graph.all_edges
            if hs[0].coords[e] != hs[1].coords[e]}
    hexagon = set(hs[0].graph.hexagons[0].edges)
    assert diff == hexagon


def test_enumerate_limit_and_infeasible():
    assert enumerate_integral([1], [2], [-2], 5) == []
    hs = enumerate_integral([2, 1, 0], [2, 1, 0], [-1, -2, -3], 1)
    assert len(hs) == 1
    with pytest.raises(ValueError):
        enumerate_integral([1], [2], [-3], 0)


def test_count_with_stop_at_short_circuits():
    full = count_integral_triple([3, 2, 1, 0], [3, 2, 1, 0],
                                 [-1, -2, -3, -6])
    assert full >= 1
    assert count_integral_triple([3, 2, 1, 0], [3, 2, 1, 0],
                                 [-1, -2, -3, -6], stop_at=1) == 1


def test_work_splitting_contract():
    from honeycombs.counting import split_first_variable

    lam, mu, nu = [3, 2, 1, 0], [3, 2, 1, 0], [-1, -2, -3, -6]
    total = count_integral_triple(lam, mu, nu)
    for parts in (1, 2, 3, 5):
        intervals = split_first_variable(lam, mu, nu, parts)
        assert intervals
        pieces = [count_integral_triple(lam, mu, nu, first_interval=iv)
                  for iv in intervals]
        assert sum(pieces) == total
    # Intervals cover the box exactly and do not overlap.
    intervals = split_first_variable(lam, mu, nu, 3)
    for (a, b), (c, d) in zip(intervals, intervals[1:]):
        assert b + 1 == c
