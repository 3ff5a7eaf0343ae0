"""Seeded random instances for sweeps and tests.

Every sampler takes an explicit ``random.Random`` so that a seed fixes the
whole stream of instances.
"""

import itertools

from .skew_multi import MultiSkewPoly
from .skew_uni import SigmaAlgebraicSet


def random_exponent(rng, nvars, degree):
    """A uniformly chosen exponent vector of the given total degree."""
    if nvars == 0:
        return ()
    # stars and bars
    cuts = sorted(rng.randint(0, degree) for _ in range(nvars - 1))
    bounds = [0] + cuts + [degree]
    return tuple(bounds[i + 1] - bounds[i] for i in range(nvars))


def random_poly(ring, nvars, rng, max_terms=6, max_degree=3, nonzero=False):
    """Up to max_terms terms with total degree <= max_degree and random coefficients."""
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exp = random_exponent(rng, nvars, rng.randint(0, max_degree))
            terms[exp] = ring.random_element(rng)
        f = MultiSkewPoly(ring, nvars, terms)
        if f or not nonzero:
            return f


def random_nonzero(ring, rng):
    while True:
        c = ring.random_element(rng)
        if c:
            return c


def random_cn_instance(idx, rng, max_degree=3):
    """A polynomial and grid satisfying every hypothesis of the CN check.

    Returns (p, sets, exponent).  For n = 2 the grid is either two subsets of
    one line omega*K, or {0} times an arbitrary subset; both are affine.
    """
    ring, n = idx.ring, idx.n
    elements = ring.enumerate_elements()
    while True:
        if n == 1:
            sets = [rng.sample(elements, rng.randint(1, len(elements)))]
        elif rng.random() < 0.25:
            other = rng.sample(elements, rng.randint(1, len(elements)))
            sets = [[ring.zero], other]
            if rng.random() < 0.5:
                sets.reverse()
        else:
            line = idx.line(rng.choice(idx.lambdas))
            sets = [rng.sample(line, rng.randint(1, len(line))) for _ in range(n)]
        sets = [SigmaAlgebraicSet(ring, A) for A in sets]
        caps = [A.rank - 1 for A in sets]
        if sum(caps) == 0 and rng.random() < 0.8:
            continue
        exponent = tuple(rng.randint(0, c) for c in caps)
        degree = sum(exponent)
        if degree > max_degree:
            continue
        terms = {}
        for _ in range(rng.randint(0, 4)):
            exp = random_exponent(rng, n, rng.randint(0, degree))
            terms[exp] = ring.random_element(rng)
        terms[exponent] = random_nonzero(ring, rng)
        return MultiSkewPoly(ring, n, terms), sets, exponent


def all_monomials(nvars, max_degree):
    for d in range(max_degree + 1):
        for exp in itertools.product(range(d + 1), repeat=nvars):
            if sum(exp) == d:
                yield exp
