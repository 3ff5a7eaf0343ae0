"""Exact division rings D together with a distinguished automorphism sigma.

Three kinds of coefficient ring are supported:

* ``FiniteField(p, m, k)``: F_q with q = p^m and sigma = Frob^k, i.e.
  sigma(a) = a^(p^k).
* ``GaussianRationals(conjugation)``: Q(i) with complex conjugation or the
  identity.
* ``Quaternions()``: the rational Hamilton quaternions with sigma = id.

A context owns the arithmetic on raw values; :class:`Scalar` is a thin
immutable wrapper that pairs a value with its context and gives operator
syntax.  Values are kept in a canonical form, so equality is structural.
"""

import math
from fractions import Fraction
from functools import lru_cache

from .errors import ContextMismatch, DivisionByZero, NotEnumerable


class Scalar:
    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = value

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ContextMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.ring, self.ring._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ring, self.ring._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.ring, self.ring._add(self.value, self.ring._neg(other.value)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.ring, self.ring._mul(self.value, other.value))

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.ring, self.ring._mul(other.value, self.value))

    def inv(self):
        if self.value == self.ring._zero:
            raise DivisionByZero("inverse of zero")
        return Scalar(self.ring, self.ring._inv(self.value))

    def __pow__(self, e):
        if e < 0:
            return self.inv() ** (-e)
        result, base = self.ring.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return self.value != self.ring._zero

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.value == other.value and (
                other.ring is self.ring or other.ring == self.ring)
        if isinstance(other, (int, Fraction)):
            return self.value == self.ring(other).value
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self):
        return self.ring.format_value(self.value)

    def __repr__(self):
        return f"Scalar({self})"


class RingContext:
    """A division ring with an automorphism sigma.

    Subclasses implement ``_add``, ``_neg``, ``_mul``, ``_inv`` and
    ``_sigma`` on raw values and set ``_zero``/``_one``.
    """

    is_finite = False
    letters = ()

    def __call__(self, x):
        if isinstance(x, Scalar):
            if x.ring is self or x.ring == self:
                return x
            return self.coerce(x)
        return Scalar(self, self._from_rational(Fraction(x)))

    @property
    def zero(self):
        return Scalar(self, self._zero)

    @property
    def one(self):
        return Scalar(self, self._one)

    def coerce(self, x):
        raise ContextMismatch(f"cannot move {x!r} into {self!r}")

    # spec-level operations on Scalars

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inv()

    def sigma(self, a):
        return Scalar(self, self._sigma(a.value))

    def sigma_pow(self, a, t):
        if t < 0:
            raise ValueError("sigma_pow needs t >= 0")
        t %= self.sigma_order()
        v = a.value
        for _ in range(t):
            v = self._sigma(v)
        return Scalar(self, v)

    def sigma_order(self):
        raise NotImplementedError

    def norm(self, a, k):
        """N_k(a) = sigma^(k-1)(a) ... sigma(a) a, with N_0(a) = 1."""
        if k < 0:
            raise ValueError("norm needs k >= 0")
        result = self.one
        term = a
        for _ in range(k):
            result = term * result
            term = self.sigma(term)
        return result

    def sigma_conjugate(self, a, b):
        """a^b = sigma(b) a b^-1."""
        if not b:
            raise DivisionByZero("sigma-conjugate by zero")
        return self.sigma(b) * a * b.inv()

    def enumerate_elements(self):
        raise NotEnumerable(f"{self!r} is infinite")

    def fixed_field_params(self):
        raise NotEnumerable(f"{self!r} has no finite fixed field")

    def format_value(self, value):
        raise NotImplementedError

    def format(self, a):
        return self.format_value(a.value)


# ---------------------------------------------------------------------------
# finite fields


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _digits(code, p, m):
    out = []
    for _ in range(m):
        code, r = divmod(code, p)
        out.append(r)
    return out


def _undigits(ds, p):
    code = 0
    for d in reversed(ds):
        code = code * p + d
    return code


def _poly_rem(a, b, p):
    """Remainder of a by b over F_p; lists are low-to-high, b nonzero and trimmed."""
    a = list(a)
    lead_inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    for top in range(len(a) - 1, db - 1, -1):
        c = a[top] * lead_inv % p
        if c:
            shift = top - db
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(poly, p):
    """Trial division of a monic poly (low-to-high list) by all monic polys of degree <= deg/2."""
    m = len(poly) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for code in range(p ** d):
            divisor = _digits(code, p, d) + [1]
            if not _poly_rem(poly, divisor, p):
                return False
    return True


def least_irreducible(p, m):
    """Least monic irreducible of degree m over F_p, coefficients compared from x^(m-1) down."""
    for code in range(p ** m):
        poly = _digits(code, p, m) + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError("no irreducible polynomial found")


def _mulmod_digits(a, b, modulus, p):
    m = len(modulus) - 1
    prod = [0] * (2 * m - 1) if m > 0 else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    rem = _poly_rem(prod, list(modulus), p)
    return rem + [0] * (m - len(rem))


TABLE_LIMIT = 1 << 16
ADD_TABLE_LIMIT = 729


@lru_cache(maxsize=None)
def _field_data(p, modulus):
    """Primitive element and (when small enough) log/antilog tables for F_p[x]/(modulus)."""
    m = len(modulus) - 1
    q = p ** m

    def mulmod(x, y):
        return _undigits(_mulmod_digits(_digits(x, p, m), _digits(y, p, m), modulus, p), p)

    def powmod(x, e):
        result = 1
        while e:
            if e & 1:
                result = mulmod(result, x)
            x = mulmod(x, x)
            e >>= 1
        return result

    factors = _prime_factors(q - 1)
    primitive = None
    for code in range(1, q):
        if all(powmod(code, (q - 1) // r) != 1 for r in factors):
            primitive = code
            break
    assert primitive is not None
    exp = log = None
    if q <= TABLE_LIMIT:
        exp = [1] * (q - 1)
        log = [None] * q
        x = 1
        for j in range(q - 1):
            exp[j] = x
            log[x] = j
            x = mulmod(x, primitive)
    return primitive, exp, log, mulmod, powmod


class FiniteField(RingContext):
    """F_q, q = p^m, with sigma = Frob^k.

    Elements are stored as integer codes sum(c_i p^i) of their coefficient
    vector in the basis 1, x, ..., x^(m-1) modulo ``modulus``.
    """

    is_finite = True
    letters = ("g",)

    def __init__(self, p, m=1, k=0, modulus=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1:
            raise ValueError("m must be positive")
        if not 0 <= k < m:
            raise ValueError(f"k must lie in [0, {m})")
        self.p, self.m, self.k = p, m, k
        self.q = p ** m
        if modulus is None:
            modulus = least_irreducible(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self.theta = math.gcd(k, m)
        self._order = m // self.theta
        self._zero, self._one = 0, 1
        prim, self._exp, self._log, self._mulmod, self._powmod = _field_data(p, modulus)
        self.primitive_code = prim
        q = self.q
        self._negtab = [_undigits([(-d) % p for d in _digits(c, p, m)], p) for c in range(q)] \
            if q <= TABLE_LIMIT else None
        self._addtab = None
        if p != 2 and q <= ADD_TABLE_LIMIT:
            dig = [_digits(c, p, m) for c in range(q)]
            self._addtab = [[_undigits([(x + y) % p for x, y in zip(dig[a], dig[b])], p)
                             for b in range(q)] for a in range(q)]
        self._frob = p ** k
        self._sigtab = [self._raw_pow(c, self._frob) for c in range(q)] if q <= TABLE_LIMIT else None

    def __repr__(self):
        return f"FiniteField(p={self.p}, m={self.m}, k={self.k})"

    def _key(self):
        return (self.p, self.m, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __reduce__(self):
        return (FiniteField, (self.p, self.m, self.k, self.modulus))

    def with_sigma_power(self, k):
        """The same field (same modulus and generator) with sigma = Frob^k."""
        return FiniteField(self.p, self.m, k, self.modulus)

    def coerce(self, x):
        if isinstance(x.ring, FiniteField) and (x.ring.p, x.ring.modulus) == (self.p, self.modulus):
            return Scalar(self, x.value)
        return super().coerce(x)

    # raw arithmetic

    def _raw_pow(self, a, e):
        if a == 0:
            return 0 if e else 1
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return self._powmod(a, e % (self.q - 1))

    def _add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._addtab is not None:
            return self._addtab[a][b]
        p, m = self.p, self.m
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, m), _digits(b, p, m))], p)

    def _neg(self, a):
        if self.p == 2:
            return a
        if self._negtab is not None:
            return self._negtab[a]
        return _undigits([(-d) % self.p for d in _digits(a, self.p, self.m)], self.p)

    def _mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mulmod(a, b)

    def _inv(self, a):
        if self._log is not None:
            return self._exp[-self._log[a] % (self.q - 1)]
        return self._powmod(a, self.q - 2)

    def _sigma(self, a):
        if self._sigtab is not None:
            return self._sigtab[a]
        return self._raw_pow(a, self._frob)

    def _from_rational(self, x):
        if x.denominator % self.p == 0:
            raise DivisionByZero(f"{x} has denominator divisible by {self.p}")
        return (x.numerator * pow(x.denominator, -1, self.p)) % self.p

    # spec-level operations

    def sigma_order(self):
        return self._order

    def fixed_field_params(self):
        return self.theta, self.p ** self.theta

    def sigma_pow(self, a, t):
        if t < 0:
            raise ValueError("sigma_pow needs t >= 0")
        e = self.p ** (self.k * t % self.m)
        return Scalar(self, self._raw_pow(a.value, e))

    def norm(self, a, k):
        if k < 0:
            raise ValueError("norm needs k >= 0")
        if k == 0:
            return self.one
        if a.value == 0:
            return self.zero
        # N_k(a) = a^(1 + p^k + p^2k + ...), exponent taken mod q - 1
        step = self._frob % (self.q - 1)
        e, term = 0, 1
        for _ in range(k):
            e += term
            term = term * step % (self.q - 1)
        return Scalar(self, self._raw_pow(a.value, e % (self.q - 1)))

    @property
    def primitive_element(self):
        return Scalar(self, self.primitive_code)

    def gen_power(self, j):
        return Scalar(self, self._raw_pow(self.primitive_code, j))

    def log(self, a):
        """Discrete log of a nonzero element to the base of the primitive element."""
        if not a:
            raise DivisionByZero("log of zero")
        if self._log is not None:
            return self._log[a.value]
        x = 1
        for j in range(self.q - 1):
            if x == a.value:
                return j
            x = self._mulmod(x, self.primitive_code)
        raise AssertionError("element not reached by the generator")

    def from_vector(self, coeffs):
        """Element from its coefficient vector written highest power first."""
        if len(coeffs) != self.m:
            raise ValueError(f"coefficient vector must have {self.m} entries")
        return Scalar(self, _undigits([int(c) % self.p for c in reversed(coeffs)], self.p))

    def to_vector(self, a):
        return list(reversed(_digits(a.value, self.p, self.m)))

    def enumerate_elements(self):
        """0 followed by g^0, g^1, ..., g^(q-2)."""
        out = [self.zero]
        x = self.one
        g = self.primitive_element
        for _ in range(self.q - 1):
            out.append(x)
            x = x * g
        return out

    def elements_by_code(self):
        return [Scalar(self, c) for c in range(self.q)]

    def random_element(self, rng):
        return Scalar(self, rng.randrange(self.q))

    def format_value(self, value):
        if value < self.p:
            return str(value)
        if self._log is not None:
            return f"g^{self._log[value]}"
        return "[" + ",".join(str(c) for c in reversed(_digits(value, self.p, self.m))) + "]"


# ---------------------------------------------------------------------------
# infinite division rings over Q


def _format_components(comps, units):
    parts = []
    for c, u in zip(comps, units):
        if c == 0:
            continue
        if not u:
            text = str(c)
        elif c == 1:
            text = u
        elif c == -1:
            text = "-" + u
        else:
            text = f"{c}*{u}"
        if parts and not text.startswith("-"):
            text = "+" + text
        parts.append(text)
    return "".join(parts) or "0"


class GaussianRationals(RingContext):
    """Q(i) with sigma = complex conjugation (or the identity)."""

    letters = ("i",)

    def __init__(self, conjugation=True):
        self.conjugation = bool(conjugation)
        self._zero = (Fraction(0), Fraction(0))
        self._one = (Fraction(1), Fraction(0))

    def __repr__(self):
        return f"GaussianRationals(conjugation={self.conjugation})"

    def __eq__(self, other):
        return isinstance(other, GaussianRationals) and other.conjugation == self.conjugation

    def __hash__(self):
        return hash(("gauss", self.conjugation))

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _neg(self, a):
        return (-a[0], -a[1])

    def _mul(self, a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def _inv(self, a):
        n = a[0] * a[0] + a[1] * a[1]
        return (a[0] / n, -a[1] / n)

    def _sigma(self, a):
        return (a[0], -a[1]) if self.conjugation else a

    def _from_rational(self, x):
        return (x, Fraction(0))

    def sigma_order(self):
        return 2 if self.conjugation else 1

    def unit(self, letter):
        if letter != "i":
            raise ValueError(f"unknown unit {letter!r}")
        return Scalar(self, (Fraction(0), Fraction(1)))

    def make(self, re, im=0):
        return Scalar(self, (Fraction(re), Fraction(im)))

    def random_element(self, rng):
        return self.make(Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                         Fraction(rng.randint(-3, 3), rng.randint(1, 3)))

    def format_value(self, value):
        return _format_components(value, ("", "i"))


class Quaternions(RingContext):
    """Rational Hamilton quaternions a + b i + c j + d k with sigma = id."""

    letters = ("i", "j", "k")

    def __init__(self):
        self._zero = (Fraction(0),) * 4
        self._one = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))

    def __repr__(self):
        return "Quaternions()"

    def __eq__(self, other):
        return isinstance(other, Quaternions)

    def __hash__(self):
        return hash("quaternions")

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        a1, b1, c1, d1 = a
        a2, b2, c2, d2 = b
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    def _inv(self, a):
        n = sum(x * x for x in a)
        return (a[0] / n, -a[1] / n, -a[2] / n, -a[3] / n)

    def _sigma(self, a):
        return a

    def _from_rational(self, x):
        return (x, Fraction(0), Fraction(0), Fraction(0))

    def sigma_order(self):
        return 1

    def unit(self, letter):
        idx = "ijk".find(letter)
        if idx < 0 or len(letter) != 1:
            raise ValueError(f"unknown unit {letter!r}")
        v = [Fraction(0)] * 4
        v[idx + 1] = Fraction(1)
        return Scalar(self, tuple(v))

    def make(self, a, b=0, c=0, d=0):
        return Scalar(self, (Fraction(a), Fraction(b), Fraction(c), Fraction(d)))

    def random_element(self, rng):
        return self.make(*(rng.randint(-2, 2) for _ in range(4)))

    def format_value(self, value):
        return _format_components(value, ("", "i", "j", "k"))
