"""Structure of the sigma-affine space F^(n, sigma) over a finite field.

With sigma = Frob^k on F = F_q, write K for the fixed field (|K| = p^theta,
theta = gcd(k, m)) and W for the image of a -> sigma(a)/a on F*.  For each
lambda in W the "line" S_lambda = {a : sigma(a) = lambda a} equals
omega_lambda * K, and F^(n, sigma) is the union of the S_lambda^n.  These
pieces meet only at the origin, which is how points are enumerated here.
"""

import itertools

from .errors import ConsistencyFault, InvalidLambda, NotEnumerable
from .skew_multi import AffinePoint, MultiSkewPoly, multi_eval


class AffineSpaceIndex:
    def __init__(self, ring, n, lambdas, omega, fixed_field):
        self.ring = ring
        self.n = n
        self.lambdas = lambdas
        self.omega = omega
        self.fixed_field = fixed_field
        self._points = None

    @property
    def identity_ring(self):
        """The same field with sigma = id, where restricted polynomials live."""
        return self.ring.with_sigma_power(0)

    def line(self, lam):
        w = self.omega[lam]
        return [w * c for c in self.fixed_field]

    def points(self):
        if self._points is None:
            self._points = enumerate_affine_space(self)
        return self._points

    def formula_count(self):
        return affine_space_size(self.ring, self.n)

    def __repr__(self):
        return f"AffineSpaceIndex({self.ring!r}, n={self.n}, |W|={len(self.lambdas)})"


def affine_space_size(ring, n):
    """((q-1)(q^(n/o) - 1) + q^(1/o) - 1) / (q^(1/o) - 1), with q^(1/o) = p^theta."""
    _, fixed = ring.fixed_field_params()
    q = ring.q
    num = (q - 1) * (fixed ** n - 1) + fixed - 1
    count, rem = divmod(num, fixed - 1)
    assert rem == 0
    return count


def build_index(ring, n):
    if not ring.is_finite:
        raise NotEnumerable("the affine-space index needs a finite field")
    if n < 1:
        raise ValueError("dimension must be positive")
    theta, fixed = ring.fixed_field_params()
    shift = ring.p ** ring.k - 1
    lambdas, omega = [], {}
    for j in range(ring.q - 1):
        w = ring.gen_power(j)
        lam = w ** shift
        if lam not in omega:
            lambdas.append(lam)
            omega[lam] = w
    expected = (ring.q - 1) // (fixed - 1)
    if len(lambdas) != expected:
        raise ConsistencyFault(f"|W| = {len(lambdas)}, formula gives {expected}")
    for lam, w in omega.items():
        if ring.sigma(w) * w.inv() != lam:
            raise ConsistencyFault(f"sigma(omega)/omega != lambda for lambda = {lam}")
    fixed_field = [a for a in ring.enumerate_elements() if ring.sigma(a) == a]
    if len(fixed_field) != fixed:
        raise ConsistencyFault(f"|K| = {len(fixed_field)}, expected {fixed}")
    return AffineSpaceIndex(ring, n, lambdas, omega, fixed_field)


def sigma_line(ring, lam):
    """S_lambda by its definition, for checking against omega_lambda K."""
    return [a for a in ring.enumerate_elements() if ring.sigma(a) == lam * a]


def enumerate_affine_space(idx):
    """The origin, then omega_lambda * (K^n minus 0) for each lambda in turn."""
    ring, n = idx.ring, idx.n
    zero = ring.zero
    points = [AffinePoint(ring, [zero] * n, check=False)]
    for lam in idx.lambdas:
        w = idx.omega[lam]
        for coords in itertools.product(idx.fixed_field, repeat=n):
            if any(coords):
                points.append(AffinePoint(ring, [w * c for c in coords]))
    return points


def cardinality_mod_p_check(idx):
    return len(idx.points()) % idx.ring.p == 0


def restrict_f_lambda(f, lam, idx):
    """f^lambda: coefficient of x^alpha becomes a_alpha [x^alpha](omega, ..., omega).

    The result is an ordinary commutative polynomial, returned over the
    identity-twisted copy of the field.
    """
    if lam not in idx.omega:
        raise InvalidLambda(f"{lam} is not of the form sigma(a)/a")
    w = idx.omega[lam]
    diag = AffinePoint(idx.ring, [w] * f.nvars, check=False)
    target = idx.identity_ring
    terms = {}
    for exp, c in f.terms.items():
        scale = multi_eval(MultiSkewPoly.monomial(idx.ring, exp), diag)
        terms[exp] = target.coerce(c * scale)
    return MultiSkewPoly(target, f.nvars, terms)


def classical_eval(g, coords):
    """Commutative evaluation sum c prod a_i^k_i, ignoring any twist."""
    ring = g.ring
    coords = [ring(a) for a in coords]
    total = ring.zero
    for exp, c in g.terms.items():
        v = c
        for a, k in zip(coords, exp):
            if k:
                v = v * a ** k
        total = total + v
    return total


def classical_ax_sum(g, idx):
    """Sum of g over K^n, evaluated classically."""
    ring = g.ring
    fixed = [ring.coerce(a) for a in idx.fixed_field]
    total = ring.zero
    for coords in itertools.product(fixed, repeat=g.nvars):
        total = total + classical_eval(g, coords)
    return total
