"""The one-variable skew polynomial ring D[x; sigma].

Polynomials are dense tuples of left coefficients, lowest degree first, so
``UniSkewPoly(R, [c0, c1, c2])`` is c0 + c1 x + c2 x^2.  Multiplication
follows x a = sigma(a) x.  All division is right division: f = q g + r.
"""

import itertools
import math
import random

from .errors import ConsistencyFault, ContextMismatch, DivisionByZero, UndefinedGcrd
from .ring_core import Scalar


class UniSkewPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=()):
        coeffs = [ring(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls, ring):
        return cls(ring, [ring.zero, ring.one])

    @classmethod
    def constant(cls, ring, c):
        return cls(ring, [c])

    @classmethod
    def monomial(cls, ring, c, k):
        return cls(ring, [ring.zero] * k + [c])

    @property
    def degree(self):
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def lc(self):
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def monic(self):
        """lc^-1 * self; left scaling keeps every right divisor."""
        return self.lc().inv() * self

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.zero

    def _check(self, other):
        if isinstance(other, UniSkewPoly):
            if other.ring != self.ring:
                raise ContextMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (Scalar, int)):
            return UniSkewPoly(self.ring, [other])
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniSkewPoly(self.ring, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniSkewPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return uni_mul(self, other)

    def __rmul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return uni_mul(other, self)

    def __pow__(self, e):
        result = UniSkewPoly(self.ring, [self.ring.one])
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, a):
        return uni_eval(self, a)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniSkewPoly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        if isinstance(other, (Scalar, int)):
            return self == UniSkewPoly(self.ring, [other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        from .textio import format_uni
        return format_uni(self)

    def __repr__(self):
        return f"UniSkewPoly({self})"


def uni_mul(f, g):
    """(a x^i)(b x^j) = a sigma^i(b) x^(i+j)."""
    ring = f.ring
    if not f or not g:
        return UniSkewPoly(ring)
    out = [ring.zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = out[i + j] + a * ring.sigma_pow(b, i)
    return UniSkewPoly(ring, out)


def right_divmod(f, g):
    """Return (q, r) with f = q g + r and deg r < deg g."""
    if not g:
        raise DivisionByZero("right division by the zero polynomial")
    ring = f.ring
    e = g.degree
    lead = g.lc()
    r = list(f.coeffs)
    quot = [ring.zero] * max(len(r) - e, 0)
    while len(r) - 1 >= e:
        d = len(r) - 1
        s = d - e
        c = r[d] * ring.sigma_pow(lead, s).inv()
        quot[s] = c
        for j, gj in enumerate(g.coeffs):
            if gj:
                r[s + j] = r[s + j] - c * ring.sigma_pow(gj, s)
        while r and not r[-1]:
            r.pop()
    return UniSkewPoly(ring, quot), UniSkewPoly(ring, r)


def uni_eval(f, a):
    """f(a) = sum c_k N_k(a); equals the remainder of f on right division by x - a."""
    ring = f.ring
    a = ring(a)
    total = ring.zero
    norm = ring.one
    power = a
    for c in f.coeffs:
        if c:
            total = total + c * norm
        norm = power * norm
        power = ring.sigma(power)
    return total


def product_formula_eval(f, g, a):
    """(f g)(a) computed as f(a^{g(a)}) g(a), or 0 when g(a) = 0."""
    ga = uni_eval(g, a)
    if not ga:
        return f.ring.zero
    return uni_eval(f, f.ring.sigma_conjugate(a, ga)) * ga


def _euclid(f, g):
    """Extended right Euclid; returns the last two (r, u, v) rows with r = u f + v g."""
    ring = f.ring
    one = UniSkewPoly(ring, [ring.one])
    zero = UniSkewPoly(ring)
    r0, u0, v0 = f, one, zero
    r1, u1, v1 = g, zero, one
    while r1:
        q, r = right_divmod(r0, r1)
        r0, u0, v0, r1, u1, v1 = r1, u1, v1, r, u0 - q * u1, v0 - q * v1
    return (r0, u0, v0), (u1, v1)


def gcrd(f, g):
    """Monic h generating R f + R g, with Bezout cofactors u f + v g = h."""
    if not f and not g:
        raise UndefinedGcrd("gcrd(0, 0) is undefined")
    (r, u, v), _ = _euclid(f, g)
    c = r.lc().inv()
    return c * r, c * u, c * v


def lclm(f, g):
    """Least left common multiple: monic, right-divisible by f and by g."""
    if not f or not g:
        raise DivisionByZero("lclm of the zero polynomial")
    (r, _, _), (s, _) = _euclid(f, g)
    m = (s * f).monic()
    if m.degree + r.degree != f.degree + g.degree:
        raise ConsistencyFault(
            f"deg lclm {m.degree} + deg gcrd {r.degree} != {f.degree} + {g.degree}")
    return m


def field_annihilator(ring):
    """x^(M+1) - x with M = (m/theta)(p^theta - 1): the lclm of all x - a, a in F."""
    theta, fixed = ring.fixed_field_params()
    big_m = (ring.m // theta) * (fixed - 1)
    x = UniSkewPoly.x(ring)
    return UniSkewPoly.monomial(ring, ring.one, big_m + 1) - x


class SigmaAlgebraicSet:
    """A finite subset of D, kept in insertion order, with its sigma-minimal polynomial."""

    def __init__(self, ring, elements):
        elements = [ring(a) for a in elements]
        if len(set(elements)) != len(elements):
            raise ValueError("elements of a sigma-algebraic set must be distinct")
        self.ring = ring
        self.elements = tuple(elements)
        self._minpoly = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def minpoly(self):
        if self._minpoly is None:
            self._minpoly = _incremental_minpoly(self.ring, self.elements)
        return self._minpoly

    @property
    def rank(self):
        return self.minpoly.degree

    def __repr__(self):
        return "SigmaAlgebraicSet({" + ", ".join(map(str, self.elements)) + "})"


def _incremental_minpoly(ring, elements):
    f = UniSkewPoly(ring, [ring.one])
    x = UniSkewPoly.x(ring)
    for a in elements:
        v = uni_eval(f, a)
        if v:
            # (x - a^v) f vanishes at a by the product formula
            f = (x - ring.sigma_conjugate(a, v)) * f
    return f


def minpoly_of_set(A):
    if not isinstance(A, SigmaAlgebraicSet):
        raise TypeError("expected a SigmaAlgebraicSet")
    return A.minpoly


def sigma_rank(A):
    return A.minpoly.degree


def minpoly_order_invariance_check(A, max_orders=100, rng=None):
    """True iff every tried ordering of A builds the same minimal polynomial."""
    reference = _incremental_minpoly(A.ring, A.elements)
    n = len(A.elements)
    if math.factorial(n) <= max_orders:
        orders = itertools.permutations(A.elements)
    else:
        rng = rng or random.Random(0)
        orders = (rng.sample(A.elements, n) for _ in range(max_orders))
    return all(_incremental_minpoly(A.ring, order) == reference for order in orders)
