import random
from fractions import Fraction

import numpy as np
import pytest

from honeycombs.errors import (InfeasibleTripleError, NotHermitianError,
                               TooLargeError)
from honeycombs.counting import count_integral_triple
from honeycombs.fibers import decide_triple
from honeycombs.sampling import random_feasible_triple
from honeycombs.spectral import (eigenvalues, eigenvalues_batch,
                                 fiber_volume, matrix_with_spectrum,
                                 monte_carlo_check, sample_sum_spectra)


def test_eigenvalue_examples():
    assert eigenvalues(np.diag([3.0, 1.0])) == [3.0, 1.0]
    vals = eigenvalues(np.array([[0, 1], [1, 0]], dtype=complex))
    assert abs(vals[0] - 1) < 1e-12 and abs(vals[1] + 1) < 1e-12
    vals = eigenvalues(np.array([[2, 1j], [-1j, 2]]))
    assert abs(vals[0] - 3) < 1e-12 and abs(vals[1] - 1) < 1e-12


def test_not_hermitian_raises():
    with pytest.raises(NotHermitianError):
        eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_output_weakly_decreasing():
    rng = np.random.default_rng(3)
    for _ in range(20):
        z = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        h = (z + z.conj().T) / 2
        vals = eigenvalues(h)
        assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_jacobi_against_characteristic_polynomial():
    rng = np.random.default_rng(5)
    for n in (2, 3):
        for _ in range(40):
            z = (rng.standard_normal((n, n))
                 + 1j * rng.standard_normal((n, n)))
            h = (z + z.conj().T) / 2
            got = eigenvalues(h)
            want = sorted(np.roots(np.poly(h)).real, reverse=True)
            assert max(abs(a - b) for a, b in zip(got, want)) < 1e-9


def test_matrix_with_spectrum_round_trip():
    h = matrix_with_spectrum([2, 1, 0], seed=4)
    vals = eigenvalues(h)
    assert max(abs(a - b) for a, b in zip(vals, [2, 1, 0])) < 1e-10
    assert abs(np.trace(h).real - 3) < 1e-10
    assert np.max(np.abs(h - h.conj().T)) < 1e-12


def test_constant_spectrum_gives_identity():
    for seed in (0, 1, 2):
        h = matrix_with_spectrum([3, 3, 3], seed=seed)
        assert np.max(np.abs(h - 3 * np.eye(3))) < 1e-12


def test_adding_zero_matrix_returns_lam():
    samples = sample_sum_spectra([1, 0, 0], [0, 0, 0], 50, seed=8)
    assert np.max(np.abs(samples - np.array([1.0, 0, 0]))) < 1e-10


def test_haar_diagonal_mean():
    # (1,1) entry of U diag(1,0) U* has mean 1/2.
    rng = np.random.default_rng(11)
    from honeycombs.spectral import _haar_unitary
    u = _haar_unitary(rng, 2, 10_000)
    entry = (np.abs(u[:, 0, 0]) ** 2).mean()
    assert abs(entry - 0.5) < 0.02


def test_batch_matches_single():
    rng = np.random.default_rng(13)
    z = rng.standard_normal((6, 3, 3)) + 1j * rng.standard_normal((6, 3, 3))
    hs = (z + np.conj(np.transpose(z, (0, 2, 1)))) / 2
    batch = eigenvalues_batch(hs)
    for k in range(6):
        single = eigenvalues(hs[k])
        assert max(abs(a - b) for a, b in zip(single, batch[k])) < 1e-11


def test_monte_carlo_n2_closed_form():
    samples = sample_sum_spectra([1, 0], [1, 0], 2000, seed=21)
    sums = samples.sum(axis=1)
    gaps = samples[:, 0] - samples[:, 1]
    assert np.max(np.abs(sums - 2)) < 1e-9
    assert gaps.min() >= 0 and gaps.max() <= 2 + 1e-12
    report = monte_carlo_check([1, 0], [1, 0], 400, seed=22)
    assert report.ok
    assert report.max_infeasibility_margin == 0.0


def test_monte_carlo_violation_detection():
    # Corrupt the decision by asking about a different mu: samples of
    # (2,1,0)+(2,1,0) are almost never feasible for mu = (40, 0, -40).
    samples = sample_sum_spectra([2, 1, 0], [2, 1, 0], 5, seed=5)
    from honeycombs.fibers import spectrum, decide_triple_nu_slack
    from honeycombs.spectral import _round_spectrum
    lam = spectrum([40, 0, -40])
    mu = spectrum([2, 1, 0])
    bad = 0
    for row in samples:
        nu = _round_spectrum(row).negate()
        if not decide_triple_nu_slack(lam, mu, nu, Fraction(1, 10 ** 5)):
            bad += 1
    assert bad == 5


def test_fiber_volume_examples():
    assert fiber_volume([1, 0], [1, 0], [-1, -1]) == 1
    assert fiber_volume([2, 1, 0], [2, 1, 0], [-1, -2, -3]) == 1
    assert fiber_volume([4, 2, 0], [4, 2, 0], [-2, -4, -6]) == 2
    with pytest.raises(InfeasibleTripleError):
        fiber_volume([1], [2], [-2])
    with pytest.raises(TooLargeError):
        fiber_volume([0] * 5, [0] * 5, [0] * 5)


def test_fiber_volume_on_facet_degenerates():
    # lam_1 + mu_1 + nu_n = 0 pins the fiber to a point (volume 0 in its
    # 1-dimensional ambient parameter space for n=3).
    lam = [2, 1, 0]
    mu = [2, 1, 0]
    nu = [-1, -1, -4]  # trace zero and l1 + m1 + n3 = 0
    assert sum(lam) + sum(mu) + sum(nu) == 0
    assert lam[0] + mu[0] + nu[2] == 0
    assert decide_triple(lam, mu, nu)
    assert fiber_volume(lam, mu, nu) == 0


def test_fiber_volume_n3_equals_segment_width():
    rng = random.Random(6)
    from honeycombs import lp as lpmod
    from honeycombs.fibers import _reduced_lp, reduced_fiber
    for _ in range(5):
        lam, mu, nu = random_feasible_triple(3, rng)
        lo, hi = lpmod.bounding_box(_reduced_lp(reduced_fiber(lam, mu, nu)),
                                    0)
        assert fiber_volume(lam, mu, nu) == hi - lo


def test_fiber_volume_n4_ehrhart_consistency():
    rng = random.Random(19)
    lam, mu, nu = random_feasible_triple(4, rng, scale=8)
    vol = fiber_volume(lam, mu, nu)
    assert vol > 0
    counts = {}
    for N in (1, 2, 3):
        counts[N] = count_integral_triple(
            [v * N for v in lam.values], [v * N for v in mu.values],
            [v * N for v in nu.values])
    # Leading Ehrhart behavior: count(N)/N^3 decreases toward the volume.
    ratios = [counts[N] / N ** 3 for N in (1, 2, 3)]
    assert ratios[0] >= ratios[1] >= ratios[2] >= float(vol)
    assert ratios[2] < ratios[0]
    assert abs(ratios[2] - float(vol)) / float(vol) < 0.35
