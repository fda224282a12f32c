"""Seeded generators for honeycombs and boundary triples.

Used by the verification suites and the CLI demos: random integral
honeycombs come from the regular quadratic potential plus bounded integer
noise (plus a linear twist, which changes no edge length), so feasibility
is guaranteed by construction with an explicit margin.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .fibers import Spectrum, spectrum
from .graph import build_graph, interior_tri_vertices, tri_vertices
from .honeycomb import (Honeycomb, boundary, honeycomb_from_potential,
                        standard_potential, validate)


def random_integral_honeycomb(n: int, rng: random.Random,
                              scale: int = 16) -> Honeycomb:
    """A random integral honeycomb with all edge lengths in [scale/2, ~2*scale].

    Noise of magnitude <= scale//8 changes each length by at most
    4 * (scale//8) <= scale/2, keeping every length positive."""
    if scale < 8:
        raise ValueError("scale must be >= 8 for a positive margin")
    g = build_graph(n)
    H = standard_potential(n, Fraction(scale))
    bound = scale // 8
    a, b, c = (rng.randint(-2 * scale, 2 * scale) for _ in range(3))
    for (i, j) in tri_vertices(n):
        H[(i, j)] += a * i + b * j + c
    for p in interior_tri_vertices(n):
        H[p] += rng.randint(-bound, bound)
    h = honeycomb_from_potential(g, H)
    validate(h)
    return h


def random_feasible_triple(n: int, rng: random.Random,
                           scale: int = 16) -> tuple[Spectrum, Spectrum,
                                                     Spectrum]:
    """Boundary of a random integral honeycomb: always triple-feasible."""
    bt = boundary(random_integral_honeycomb(n, rng, scale))
    return spectrum(bt.lam), spectrum(bt.mu), spectrum(bt.nu)


def random_spectrum(n: int, rng: random.Random, lo: int = -8, hi: int = 8,
                    denominators=(1, 2, 4)) -> Spectrum:
    vals = sorted((Fraction(rng.randint(lo, hi), rng.choice(denominators))
                   for _ in range(n)), reverse=True)
    return Spectrum(tuple(vals))


def random_trace_zero_triple(n: int, rng: random.Random,
                             lo: int = -8, hi: int = 8
                             ) -> tuple[Spectrum, Spectrum, Spectrum]:
    """Random sorted rational triple with exact trace zero (often
    infeasible); the common shift keeps each spectrum sorted."""
    lam = random_spectrum(n, rng, lo, hi)
    mu = random_spectrum(n, rng, lo, hi)
    nu = random_spectrum(n, rng, lo, hi)
    shift = -(lam.trace + mu.trace + nu.trace) / n
    nu = nu.shift(shift)
    return lam, mu, nu
