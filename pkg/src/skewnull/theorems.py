"""Executable checks of the zero-set theorems for skew polynomials.

Every check returns a :class:`VerificationReport`.  A report whose
hypothesis holds but whose observation contradicts the theorem is a
falsification (``passed`` is False); a report whose hypothesis fails is
negative-control data and never counts as a failure.
"""

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (ConsistencyFault, HypothesisViolation, NonEmptyVariety,
                     NotEnumerable, ZeroIdeal)
from .skew_multi import AffinePoint, MultiSkewPoly, conjugate_point, multi_eval
from .skew_uni import SigmaAlgebraicSet, field_annihilator, gcrd, uni_eval


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    hypothesis_satisfied: bool
    observed: object
    expected: object
    passed: bool

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "params": self.params,
            "hypothesis": self.hypothesis_satisfied,
            "observed": self.observed,
            "expected": self.expected,
            "pass": self.passed,
        }

    @property
    def falsified(self):
        return self.hypothesis_satisfied and not self.passed


def field_params(ring, n=None):
    out = {"p": ring.p, "m": ring.m, "k": ring.k}
    if n is not None:
        out["n"] = n
    return out


def field_exponents(ring):
    """(P, M) = (p^theta, (m/theta)(p^theta - 1))."""
    theta, fixed = ring.fixed_field_params()
    return fixed, (ring.m // theta) * (fixed - 1)


class LeftIdealMulti:
    """A left ideal given by a finite list of nonzero generators."""

    def __init__(self, generators):
        generators = list(generators)
        if not generators:
            raise ValueError("an ideal needs at least one generator")
        first = generators[0]
        for g in generators:
            if not g:
                raise ValueError("generators must be nonzero")
            if g.ring != first.ring or g.nvars != first.nvars:
                raise ValueError("generators live in different rings")
        self.ring = first.ring
        self.nvars = first.nvars
        self.generators = generators

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


# ---------------------------------------------------------------------------
# point evaluation, optionally spread over worker processes


def _evaluate_chunk(polys, points):
    return [[multi_eval(f, a) for f in polys] for a in points]


def evaluate_on_points(polys, points, jobs=1):
    """Values [[f(a) for f in polys] for a in points], in point order."""
    points = list(points)
    if jobs <= 1 or len(points) < 2 * jobs:
        return _evaluate_chunk(polys, points)
    size = -(-len(points) // jobs)
    chunks = [points[i:i + size] for i in range(0, len(points), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_evaluate_chunk, [polys] * len(chunks), chunks)
        return [row for part in parts for row in part]


def variety(J, idx, jobs=1):
    """The affine points where every generator of J vanishes."""
    gens = list(J)
    values = evaluate_on_points(gens, idx.points(), jobs)
    return [a for a, row in zip(idx.points(), values) if not any(row)]


# ---------------------------------------------------------------------------
# combinatorial Nullstellensatz


def _grid_is_affine(sets):
    ring = sets[0].ring
    for i, j in itertools.combinations(range(len(sets)), 2):
        for a in sets[i]:
            sa = ring.sigma(a)
            for b in sets[j]:
                if ring.sigma(b) * a != sa * b:
                    return False, (i + 1, j + 1, a, b)
    return True, None


def cn_check(p, sets, exponent=None):
    """Find a grid point of A_1 x ... x A_n where p does not vanish.

    All hypotheses are checked first and a violation raises
    HypothesisViolation.  When ``exponent`` is None, the first top-degree
    monomial (grlex order) meeting the rank condition is used.
    Returns (witness, report); witness is None only on falsification.
    """
    sets = list(sets)
    if not p:
        raise HypothesisViolation("nonzero", "p is the zero polynomial")
    if len(sets) != p.nvars:
        raise HypothesisViolation("arity", f"{len(sets)} sets for {p.nvars} variables")
    if any(len(A) == 0 for A in sets):
        raise HypothesisViolation("rank", "an empty set has rank 0")
    ranks = [A.rank for A in sets]
    deg = p.total_degree
    if exponent is not None:
        exponent = tuple(exponent)
        if sum(exponent) != deg:
            raise HypothesisViolation("degree", f"sum {exponent} != deg p = {deg}")
        if not p.coefficient(exponent):
            raise HypothesisViolation("coefficient", f"coefficient of x^{exponent} is zero")
        if any(r <= k for r, k in zip(ranks, exponent)):
            raise HypothesisViolation("rank", f"ranks {ranks} not > {exponent}")
    else:
        candidates = [e for e, _ in p.sorted_terms() if sum(e) == deg]
        exponent = next((e for e in candidates if all(r > k for r, k in zip(ranks, e))), None)
        if exponent is None:
            raise HypothesisViolation("rank", f"no top-degree monomial fits under ranks {ranks}")
    ok, bad = _grid_is_affine(sets)
    if not ok:
        i, j, a, b = bad
        raise HypothesisViolation("affine", f"pair ({a}, {b}) from sets {i}, {j} is not sigma-affine")

    witness, value = None, None
    for coords in itertools.product(*[A.elements for A in sets]):
        point = AffinePoint(p.ring, coords, check=False)
        v = multi_eval(p, point)
        if v:
            witness, value = point, v
            break
    report = VerificationReport(
        theorem="combinatorial_nullstellensatz",
        params={"exponent": list(exponent), "ranks": ranks,
                "grid_size": _product(len(A) for A in sets)},
        hypothesis_satisfied=True,
        observed=None if witness is None else {"witness": [str(c) for c in witness],
                                               "value": str(value)},
        expected="nonvanishing grid point",
        passed=witness is not None,
    )
    return witness, report


def _product(values):
    out = 1
    for v in values:
        out *= v
    return out


# ---------------------------------------------------------------------------
# Chevalley-Warning and Ax


def _degree_or_zero(f):
    # the zero polynomial vanishes everywhere, so it does not constrain V
    d = f.total_degree
    return 0 if d is None else d


def chevalley_warning_bound(ring, n):
    """n (q^(1/o) - 1) / (q - 1), exactly."""
    fixed, _ = field_exponents(ring)
    return Fraction(n * (fixed - 1), ring.q - 1)


def chevalley_warning_check(polys, idx, jobs=1):
    polys = list(polys)
    ring, n = idx.ring, idx.n
    degree_sum = sum(_degree_or_zero(f) for f in polys)
    bound = chevalley_warning_bound(ring, n)
    hyp = degree_sum < bound
    zeros = sum(1 for row in evaluate_on_points(polys, idx.points(), jobs) if not any(row))
    # the lower bound needs the origin in V, so nonzero constants are excluded
    homogeneous = all(f.is_homogeneous() and not f.coefficient((0,) * n) for f in polys)
    divisible = zeros % ring.p == 0
    passed = divisible and (zeros >= ring.p if homogeneous else True)
    expected = "count = 0 mod p" + (" and count >= p" if homogeneous else "")
    return VerificationReport(
        theorem="chevalley_warning",
        params={**field_params(ring, n), "degree_sum": degree_sum, "bound": str(bound),
                "homogeneous": homogeneous},
        hypothesis_satisfied=hyp,
        observed={"count": zeros, "count_mod_p": zeros % ring.p,
                  "points": len(idx.points())},
        expected=expected,
        passed=passed if hyp else True,
    )


def skew_ax_bound(ring, n):
    fixed, _ = field_exponents(ring)
    return n * (fixed - 1)


def affine_sum(f, idx, jobs=1):
    total = f.ring.zero
    for (v,) in evaluate_on_points([f], idx.points(), jobs):
        total = total + v
    return total


def skew_ax_check(f, idx, jobs=1):
    ring, n = idx.ring, idx.n
    deg = _degree_or_zero(f)
    bound = skew_ax_bound(ring, n)
    hyp = deg < bound
    total = affine_sum(f, idx, jobs)
    return VerificationReport(
        theorem="skew_ax",
        params={**field_params(ring, n), "degree": deg, "bound": bound},
        hypothesis_satisfied=hyp,
        observed=str(total),
        expected="0",
        passed=(not total) if hyp else True,
    )


# ---------------------------------------------------------------------------
# the vanishing ideal of F^(n, sigma)


def vanishing_ideal_generators(ring, n):
    """x_i x_j^P - x_i^P x_j (i != j) and x_i^(M+1) - x_i."""
    big_p, big_m = field_exponents(ring)
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            a = [0] * n
            a[i] += 1
            a[j] += big_p
            b = [0] * n
            b[i] += big_p
            b[j] += 1
            gens.append(MultiSkewPoly(ring, n, {tuple(a): 1, tuple(b): -1}))
    for i in range(n):
        a = [0] * n
        a[i] = big_m + 1
        b = [0] * n
        b[i] = 1
        gens.append(MultiSkewPoly(ring, n, {tuple(a): 1, tuple(b): -1}))
    return gens


def normal_exponent(exp, big_p, big_m):
    """Rewrite one monomial to normal form; coefficients are untouched by both rules.

    (a) x_i^(M+1) -> x_i lowers any exponent above M to ((e - 1) mod M) + 1.
    (b) x_i x_j^P -> x_i^P x_j for j < i moves P - 1 from x_j to x_i.
    """
    e = list(exp)
    n = len(e)
    while True:
        for i in range(n):
            if e[i] > big_m:
                e[i] = (e[i] - 1) % big_m + 1
        moved = False
        for i in range(n - 1, 0, -1):
            if e[i] >= 1:
                for j in range(i):
                    if e[j] >= big_p:
                        e[j] -= big_p - 1
                        e[i] += big_p - 1
                        moved = True
                        break
            if moved:
                break
        if not moved:
            return tuple(e)


def vanishing_ideal_normal_form(f, idx):
    big_p, big_m = field_exponents(idx.ring)
    terms = {}
    for exp, c in f.terms.items():
        e = normal_exponent(exp, big_p, big_m)
        terms[e] = terms[e] + c if e in terms else c
    return MultiSkewPoly(f.ring, f.nvars, terms)


def is_normal(f, idx):
    big_p, big_m = field_exponents(idx.ring)
    for e in f.terms:
        if any(k > big_m for k in e):
            return False
        if any(e[j] >= big_p and e[i] >= 1 for i in range(len(e)) for j in range(i)):
            return False
    return True


def vanishes_everywhere(f, idx, jobs=1):
    """Decided twice, by enumeration and by normal form; disagreement is a fault."""
    by_points = not any(row[0] for row in evaluate_on_points([f], idx.points(), jobs))
    by_normal_form = not vanishing_ideal_normal_form(f, idx)
    if by_points != by_normal_form:
        raise ConsistencyFault(
            f"enumeration says {by_points}, normal form says {by_normal_form} for {f}")
    return by_points


# ---------------------------------------------------------------------------
# weak Finitesatz


@dataclass
class FinitesatzCertificate:
    generators: list
    cofactors: list
    vanisher: MultiSkewPoly
    iterations: int
    cofactor_degrees: list = field(default_factory=list)

    def combination(self):
        ring, n = self.vanisher.ring, self.vanisher.nvars
        total = MultiSkewPoly(ring, n)
        for u, f in zip(self.cofactors, self.generators):
            total = total + u * f
        return total

    def verify(self, idx):
        """Sum u_i f_i + e == 1 structurally and e vanishes on F^(n, sigma)."""
        one = MultiSkewPoly.constant(self.vanisher.ring, self.vanisher.nvars, 1)
        return self.combination() + self.vanisher == one and vanishes_everywhere(self.vanisher, idx)


def weak_finitesatz_certificate(J, idx, max_iterations=None):
    """Cofactors u_i and an everywhere-vanishing e with sum u_i f_i + e = 1.

    Grows A = {a : g(a) = 1} for some g in J one point at a time.  When no
    point b outside A has b^(1 - g(b)) outside A, (1 - g)^2 vanishes
    everywhere and 1 = (2g - g^2) + (1 - g)^2 finishes the job.
    """
    ring, n = J.ring, J.nvars
    gens = list(J)
    points = idx.points()
    empty = variety(J, idx)
    if empty:
        raise NonEmptyVariety(empty[0])
    one = MultiSkewPoly.constant(ring, n, 1)
    zero = MultiSkewPoly(ring, n)
    limit = len(points) if max_iterations is None else max_iterations

    def pick(point):
        for j, f in enumerate(gens):
            v = multi_eval(f, point)
            if v:
                return j, v
        raise ConsistencyFault(f"no generator is nonzero at {point}, yet the variety is empty")

    j, v = pick(points[0])
    c = v.inv()
    cofactors = [zero] * len(gens)
    cofactors[j] = MultiSkewPoly.constant(ring, n, c)
    g = c * gens[j]
    iterations = 0
    while True:
        values = {a: multi_eval(g, a) for a in points}
        in_a = {a for a, val in values.items() if val == ring.one}
        if len(in_a) == len(points):
            vanisher = one - g
            break
        step = None
        for b in points:
            if b in in_a:
                continue
            b2 = conjugate_point(b, ring.one - values[b])
            if b2 not in in_a:
                step = b2
                break
        if step is None:
            # 2g - g^2 = (2 - g) g, so every cofactor is multiplied on the left by 2 - g
            two_minus_g = 2 - g
            cofactors = [two_minus_g * u for u in cofactors]
            vanisher = (one - g) * (one - g)
            break
        iterations += 1
        if iterations > limit:
            raise ConsistencyFault("certificate loop exceeded |F^(n, sigma)| iterations")
        j, v = pick(step)
        c = v.inv()
        h = c * gens[j]
        # g + h - h g: cofactors u_i - h u_i, plus c on generator j
        cofactors = [u - h * u for u in cofactors]
        cofactors[j] = cofactors[j] + c
        g = g + h - h * g
    cert = FinitesatzCertificate(
        generators=gens, cofactors=cofactors, vanisher=vanisher, iterations=iterations,
        cofactor_degrees=[u.total_degree for u in cofactors])
    if cert.combination() + vanisher != one:
        raise ConsistencyFault("certificate identity sum u_i f_i + e = 1 fails")
    return cert


def finitesatz_report(J, idx):
    cert = weak_finitesatz_certificate(J, idx)
    identity = cert.combination() + cert.vanisher == MultiSkewPoly.constant(J.ring, J.nvars, 1)
    nf_zero = not vanishing_ideal_normal_form(cert.vanisher, idx)
    vanishes = vanishes_everywhere(cert.vanisher, idx)
    return cert, VerificationReport(
        theorem="weak_finitesatz",
        params={**field_params(J.ring, J.nvars), "generators": len(J)},
        hypothesis_satisfied=True,
        observed={"identity": identity, "vanisher_normal_form_zero": nf_zero,
                  "vanisher_vanishes": vanishes, "iterations": cert.iterations,
                  "cofactor_degrees": cert.cofactor_degrees},
        expected={"identity": True, "vanisher_normal_form_zero": True,
                  "iterations_at_most": len(idx.points())},
        passed=identity and nf_zero and vanishes and cert.iterations <= len(idx.points()),
    )


# ---------------------------------------------------------------------------
# one-variable Finitesatz


def one_var_finitesatz_check(f, ring):
    """gcrd(f, x^(M+1) - x) must equal the sigma-minimal polynomial of the zeros of f."""
    if not ring.is_finite:
        raise NotEnumerable("the one-variable Finitesatz check needs a finite field")
    if not f:
        raise ZeroIdeal("the zero polynomial generates the zero ideal")
    zeros = [a for a in ring.enumerate_elements() if not uni_eval(f, a)]
    p_j = SigmaAlgebraicSet(ring, zeros).minpoly
    h, _, _ = gcrd(f, field_annihilator(ring))
    return VerificationReport(
        theorem="one_variable_finitesatz",
        params={**field_params(ring), "f": str(f)},
        hypothesis_satisfied=True,
        observed={"gcrd": str(h), "zeros": len(zeros)},
        expected=str(p_j),
        passed=h == p_j,
    )
