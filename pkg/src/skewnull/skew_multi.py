"""Multivariate skew polynomials D[x1, ..., xn; sigma] and sigma-affine points.

The variables commute with each other and each one twists scalars the same
way, x_i a = sigma(a) x_i, so a monomial x^alpha moves a scalar past itself
as sigma^|alpha|.  Polynomials are sparse: a dict from exponent tuples to
nonzero left coefficients.
"""

from .errors import ConsistencyFault, ContextMismatch, DivisionByZero, NotAffine
from .ring_core import Scalar
from .skew_uni import UniSkewPoly, right_divmod


def grlex_key(exponent):
    """Graded lex with x1 < x2 < ... < xn: total degree, then x_n, x_(n-1), ..."""
    return (sum(exponent),) + tuple(reversed(exponent))


class MultiSkewPoly:
    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring, nvars, terms=None):
        self.ring = ring
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for {nvars} variables")
            c = ring(c)
            if c:
                clean[exp] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring, nvars, terms):
        # terms already canonical: tuple keys, nonzero Scalars of this ring
        obj = cls.__new__(cls)
        obj.ring, obj.nvars, obj.terms = ring, nvars, terms
        return obj

    @classmethod
    def constant(cls, ring, nvars, c):
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, ring, nvars, i):
        """The variable x_i, 1-based."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable x{i} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(ring, nvars, {tuple(exp): ring.one})

    @classmethod
    def monomial(cls, ring, exponent, c=None):
        return cls(ring, len(exponent), {tuple(exponent): ring.one if c is None else c})

    @property
    def total_degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return None
        return max(e[i - 1] for e in self.terms)

    def coefficient(self, exponent):
        return self.terms.get(tuple(exponent), self.ring.zero)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def constant_value(self):
        """The value of a polynomial with no variable part."""
        if any(any(e) for e in self.terms):
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, self.ring.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def _check(self, other):
        if isinstance(other, MultiSkewPoly):
            if other.ring != self.ring or other.nvars != self.nvars:
                raise ContextMismatch("polynomials live in different rings")
            return other
        if isinstance(other, (Scalar, int)):
            return MultiSkewPoly.constant(self.ring, self.nvars, other)
        return None

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms[e] + c if e in terms else c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return MultiSkewPoly._raw(self.ring, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiSkewPoly._raw(self.ring, self.nvars, {e: -c for e, c in self.terms.items()})

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
        return multi_mul(self, other)

    def __rmul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return multi_mul(other, self)

    def __pow__(self, e):
        result = MultiSkewPoly.constant(self.ring, self.nvars, self.ring.one)
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, point):
        return multi_eval(self, point)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiSkewPoly):
            return (self.ring == other.ring and self.nvars == other.nvars
                    and self.terms == other.terms)
        if isinstance(other, (Scalar, int)):
            return self == MultiSkewPoly.constant(self.ring, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        from .textio import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"MultiSkewPoly({self})"


def multi_mul(f, g):
    """(a x^alpha)(b x^beta) = a sigma^|alpha|(b) x^(alpha+beta)."""
    ring = f.ring
    out = {}
    twisted = {}
    for ea, a in f.terms.items():
        s = sum(ea)
        if s not in twisted:
            twisted[s] = {eb: ring.sigma_pow(b, s) for eb, b in g.terms.items()}
        for eb, tb in twisted[s].items():
            e = tuple(x + y for x, y in zip(ea, eb))
            c = a * tb
            if e in out:
                c = out[e] + c
            out[e] = c
    return MultiSkewPoly._raw(ring, f.nvars, {e: c for e, c in out.items() if c})


def is_affine(coords):
    """sigma(a_j) a_i == sigma(a_i) a_j for every pair i != j."""
    return unit_witness(coords) is None


class UnitWitness:
    """A pair (i, j), 1-based, with the nonzero scalar sigma(a_j) a_i - sigma(a_i) a_j."""

    __slots__ = ("i", "j", "value")

    def __init__(self, i, j, value):
        self.i, self.j, self.value = i, j, value

    def __repr__(self):
        return f"UnitWitness(i={self.i}, j={self.j}, value={self.value})"


def unit_witness(coords):
    coords = list(coords)
    if not coords:
        return None
    ring = coords[0].ring
    sig = [ring.sigma(a) for a in coords]
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            v = sig[j] * coords[i] - sig[i] * coords[j]
            if v:
                return UnitWitness(i + 1, j + 1, v)
    return None


def witness_combination(ring, nvars, coords, i, j):
    """(x_j - sigma(a_j))(x_i - a_i) - (x_i - sigma(a_i))(x_j - a_j); a constant in m_a."""
    xi = MultiSkewPoly.var(ring, nvars, i)
    xj = MultiSkewPoly.var(ring, nvars, j)
    ai, aj = coords[i - 1], coords[j - 1]
    return (xj - ring.sigma(aj)) * (xi - ai) - (xi - ring.sigma(ai)) * (xj - aj)


class AffinePoint:
    """A validated point of the sigma-affine space D^(n, sigma)."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords, check=True):
        coords = tuple(ring(c) for c in coords)
        if check:
            w = unit_witness(coords)
            if w is not None:
                raise NotAffine(f"point {tuple(map(str, coords))} fails at {w}")
        self.ring = ring
        self.coords = coords

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if isinstance(other, AffinePoint):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"AffinePoint{self}"


def _as_point(ring, point):
    if isinstance(point, AffinePoint):
        return point
    return AffinePoint(ring, point)


def multi_eval(f, point):
    """sigma-evaluation: x^k at a is sigma^(k1+..+k_(n-1))(N_kn(a_n)) ... sigma^k1(N_k2(a_2)) N_k1(a_1)."""
    ring = f.ring
    a = _as_point(ring, point).coords
    if len(a) != f.nvars:
        raise ValueError(f"point has {len(a)} coordinates, polynomial has {f.nvars} variables")
    norms = {}
    total = ring.zero
    for exp, c in f.terms.items():
        v = ring.one
        s = 0
        for i, k in enumerate(exp):
            if k:
                key = (i, k, s)
                t = norms.get(key)
                if t is None:
                    t = norms[key] = ring.sigma_pow(ring.norm(a[i], k), s)
                v = t * v
                s += k
        total = total + c * v
    return total


def _drop(exp, i):
    return exp[:i - 1] + exp[i:]


def _insert(exp, i, k):
    return exp[:i - 1] + (k,) + exp[i - 1:]


def lift(f, i):
    """View f as a polynomial in one more variable, inserting x_i with exponent 0."""
    return MultiSkewPoly._raw(f.ring, f.nvars + 1, {_insert(e, i, 0): c for e, c in f.terms.items()})


def substitute(f, i, b):
    """Remainder of f on right division by x_i - b, as a polynomial without x_i.

    c x^alpha maps to c sigma^d(N_(alpha_i)(b)) x^(alpha without i), where d
    is the degree of the monomial in the other variables.
    """
    if not 1 <= i <= f.nvars:
        raise IndexError(f"variable x{i} out of range 1..{f.nvars}")
    ring = f.ring
    b = ring(b)
    out = MultiSkewPoly(ring, f.nvars - 1)
    terms = {}
    for exp, c in f.terms.items():
        k = exp[i - 1]
        rest = _drop(exp, i)
        v = c * ring.sigma_pow(ring.norm(b, k), sum(rest))
        if rest in terms:
            v = terms[rest] + v
        terms[rest] = v
    out.terms = {e: c for e, c in terms.items() if c}
    return out


def divmod_linear(f, i, b):
    """(q, r) with f = q (x_i - b) + r exactly and r free of x_i."""
    if not 1 <= i <= f.nvars:
        raise IndexError(f"variable x{i} out of range 1..{f.nvars}")
    ring = f.ring
    b = ring(b)
    x_minus_b = UniSkewPoly(ring, [-b, ring.one])
    uni_quot = {}
    q = {}
    for exp, c in f.terms.items():
        k = exp[i - 1]
        if k == 0:
            continue
        if k not in uni_quot:
            uni_quot[k] = right_divmod(UniSkewPoly.monomial(ring, ring.one, k), x_minus_b)[0]
        rest = exp[:i - 1] + (0,) + exp[i:]
        s = sum(rest)
        # c x^rest * (d x_i^t) = c sigma^s(d) x^(rest + t e_i)
        for t, d in enumerate(uni_quot[k].coeffs):
            if d:
                e = rest[:i - 1] + (t,) + rest[i:]
                v = c * ring.sigma_pow(d, s)
                q[e] = q[e] + v if e in q else v
    quotient = MultiSkewPoly._raw(ring, f.nvars, {e: c for e, c in q.items() if c})
    return quotient, lift(substitute(f, i, b), i)


def substitution_chain(f, point, order=None):
    """Substitute coordinates one at a time (default x_n first) down to a scalar."""
    ring = f.ring
    coords = list(_as_point(ring, point).coords)
    order = list(order) if order is not None else list(range(f.nvars, 0, -1))
    if sorted(order) != list(range(1, f.nvars + 1)):
        raise ValueError("order must be a permutation of the variable indices")
    remaining = list(range(1, f.nvars + 1))
    g = f
    for var in order:
        pos = remaining.index(var) + 1
        g = substitute(g, pos, coords[var - 1])
        remaining.remove(var)
    return g.constant_value()


def ma_decomposition(f, point):
    """Write f = sum q_i (x_i - a_i) + ell by successive linear divisions.

    Returns (quotients, ell); ell is the residue of f modulo m_a, so it must
    equal f(a).  The identity is re-expanded and checked.
    """
    ring = f.ring
    a = _as_point(ring, point)
    quotients = [None] * f.nvars
    r = f
    for i in range(f.nvars, 0, -1):
        quotients[i - 1], r = divmod_linear(r, i, a[i - 1])
    ell = r.constant_value()
    rebuilt = MultiSkewPoly.constant(ring, f.nvars, ell)
    for i, qi in enumerate(quotients, start=1):
        rebuilt = rebuilt + qi * (MultiSkewPoly.var(ring, f.nvars, i) - a[i - 1])
    if rebuilt != f:
        raise ConsistencyFault("linear decomposition does not re-expand to f")
    if ell != multi_eval(f, a):
        raise ConsistencyFault("residue modulo m_a differs from the evaluation formula")
    return quotients, ell


def in_ma(f, point):
    """f lies in the left ideal m_a iff it vanishes at the affine point a."""
    _, ell = ma_decomposition(f, point)
    return not ell


def conjugate_point(point, c):
    """a^c = (sigma(c) a_1 c^-1, ..., sigma(c) a_n c^-1), re-validated as affine."""
    ring = point.ring
    c = ring(c)
    if not c:
        raise DivisionByZero("sigma-conjugate by zero")
    left, right = ring.sigma(c), c.inv()
    return AffinePoint(ring, [left * a * right for a in point.coords])


def multi_product_formula_check(f, g, point):
    """(f g)(a) == f(a^{g(a)}) g(a), or 0 when g(a) = 0."""
    a = _as_point(f.ring, point)
    lhs = multi_eval(f * g, a)
    ga = multi_eval(g, a)
    if not ga:
        return not lhs
    return lhs == multi_eval(f, conjugate_point(a, ga)) * ga
