"""Text syntax for scalars and polynomials.

Grammar (whitespace is ignored)::

    poly   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := coeff | var ['^' nat]
    coeff  := nat ['/' nat] | 'g' ['^' nat] | '[' nat (',' nat)* ']'
            | 'i' | 'j' | 'k' | '(' poly ')'
    var    := 'x' nat | 'x'

Within a term every coefficient factor must come before the first
variable, because coefficients act from the left.  Coefficient factors are
multiplied left to right, so ``i*j`` is k over the quaternions.  A
parenthesised coefficient may not contain variables.
"""

import re
from fractions import Fraction

from .errors import CoefficientParseError, PolySyntaxError, UnknownVariable
from .ring_core import FiniteField
from .skew_multi import MultiSkewPoly
from .skew_uni import UniSkewPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring, nvars):
        self.text = text
        self.ring = ring
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, cls=PolySyntaxError, tok=None):
        tok = tok or self.peek()
        return cls(message, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] not in ("op",):
            raise self.error(f"expected {value!r}", tok=tok)
        return tok

    def nat(self):
        tok = self.take()
        if tok[0] != "num":
            raise self.error("expected a natural number", tok=tok)
        return int(tok[1])

    def parse(self):
        terms = self.poly(allow_vars=True)
        if self.peek()[0] != "end":
            raise self.error("unexpected input")
        return terms

    def poly(self, allow_vars):
        terms = {}
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek()[:2] == ("op", "+"):
            self.take()
        while True:
            exp, c = self.term(allow_vars)
            if sign < 0:
                c = -c
            terms[exp] = terms[exp] + c if exp in terms else c
            tok = self.peek()
            if tok[:2] == ("op", "+"):
                sign = 1
            elif tok[:2] == ("op", "-"):
                sign = -1
            else:
                return terms
            self.take()

    def term(self, allow_vars):
        coeff = self.ring.one
        exp = [0] * self.nvars
        seen_var = False
        while True:
            tok = self.peek()
            var = self.variable_index(tok) if allow_vars else None
            if var is not None:
                self.take()
                power = 1
                if self.peek()[:2] == ("op", "^"):
                    self.take()
                    power = self.nat()
                exp[var - 1] += power
                seen_var = True
            else:
                if seen_var:
                    raise self.error("coefficients must precede the variables of a term")
                coeff = coeff * self.coefficient(allow_vars)
            if self.peek()[:2] != ("op", "*"):
                return tuple(exp), coeff
            self.take()

    def variable_index(self, tok):
        if tok[0] != "name" or not tok[1].startswith("x"):
            return None
        rest = tok[1][1:]
        if rest == "":
            if self.nvars == 1:
                return 1
            raise self.error("bare 'x' is only allowed with one variable", UnknownVariable, tok)
        if not rest.isdigit():
            raise self.error(f"unknown name {tok[1]!r}", UnknownVariable, tok)
        idx = int(rest)
        if not 1 <= idx <= self.nvars:
            raise self.error(f"variable {tok[1]} out of range 1..{self.nvars}", UnknownVariable, tok)
        return idx

    def coefficient(self, allow_vars):
        ring = self.ring
        tok = self.take()
        kind, value, _ = tok
        if kind == "num":
            num = int(value)
            den = 1
            if self.peek()[:2] == ("op", "/"):
                self.take()
                den = self.nat()
            if den == 0:
                raise self.error("zero denominator", CoefficientParseError, tok)
            try:
                return ring(Fraction(num, den))
            except ZeroDivisionError as exc:
                raise self.error(str(exc), CoefficientParseError, tok) from None
        if kind == "name" and value == "g":
            if not isinstance(ring, FiniteField):
                raise self.error("'g' is only defined over finite fields", CoefficientParseError, tok)
            power = 1
            if self.peek()[:2] == ("op", "^"):
                self.take()
                power = self.nat()
            return ring.gen_power(power)
        if kind == "name" and value in ring.letters and value != "g":
            return ring.unit(value)
        if kind == "op" and value == "[":
            if not isinstance(ring, FiniteField):
                raise self.error("coefficient vectors need a finite field", CoefficientParseError, tok)
            digits = [self.nat()]
            while self.peek()[:2] == ("op", ","):
                self.take()
                digits.append(self.nat())
            self.expect("]")
            if len(digits) != ring.m or any(d >= ring.p for d in digits):
                raise self.error(f"vector must have {ring.m} entries in [0, {ring.p})",
                                 CoefficientParseError, tok)
            return ring.from_vector(digits)
        if kind == "op" and value == "(":
            inner = self.poly(allow_vars=False)
            self.expect(")")
            total = ring.zero
            for c in inner.values():
                total = total + c
            return total
        if kind == "name":
            raise self.error(f"unknown name {value!r}", CoefficientParseError, tok)
        raise self.error("expected a coefficient or variable", tok=tok)


def parse_poly(text, ring, nvars):
    """Parse text into a MultiSkewPoly with nvars variables."""
    terms = _Parser(text, ring, nvars).parse()
    return MultiSkewPoly(ring, nvars, terms)


def parse_scalar(text, ring):
    terms = _Parser(text, ring, 0).parse()
    return terms.get((), ring.zero)


def parse_uni(text, ring):
    """One-variable polynomial; the variable may be written x or x1."""
    terms = _Parser(text, ring, 1).parse()
    if not terms:
        return UniSkewPoly(ring)
    deg = max(e[0] for e in terms)
    coeffs = [ring.zero] * (deg + 1)
    for (k,), c in terms.items():
        coeffs[k] = c
    return UniSkewPoly(ring, coeffs)


def format_scalar(a):
    return a.ring.format(a)


def _is_compound(text):
    return any(ch in "+-" for ch in text[1:])


def _format_terms(items, ring, var_names):
    """items: (exponent, coeff) in display order."""
    pieces = []
    for exp, c in items:
        mono = "*".join(
            name if k == 1 else f"{name}^{k}"
            for name, k in reversed(list(zip(var_names, exp))) if k)
        text = ring.format(c)
        negative = False
        if _is_compound(text):
            text = f"({text})"
        elif text.startswith("-"):
            negative, text = True, text[1:]
        if mono:
            text = mono if text == "1" else f"{text}*{mono}"
        if not pieces:
            pieces.append("-" + text if negative else text)
        else:
            pieces.append((" - " if negative else " + ") + text)
    return "".join(pieces) or "0"


def format_poly(f):
    names = [f"x{i}" for i in range(1, f.nvars + 1)]
    return _format_terms(f.sorted_terms(), f.ring, names)


def format_uni(f):
    items = [((k,), c) for k, c in reversed(list(enumerate(f.coeffs))) if c]
    return _format_terms(items, f.ring, ["x"])
