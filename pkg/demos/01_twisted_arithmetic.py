"""Arithmetic in F_4[x; Frob] and the quaternions, printed step by step."""

from skewnull.ring_core import FiniteField, Quaternions
from skewnull.skew_uni import SigmaAlgebraicSet, UniSkewPoly, gcrd, lclm, right_divmod, uni_eval

F = FiniteField(2, 2, 1)
g = F.primitive_element
x = UniSkewPoly.x(F)

print("field:", F, "elements:", [str(a) for a in F.enumerate_elements()])
print("x * g       =", x * g)          # the scalar is twisted when it moves left
print("g * x       =", g * x)
print("(x+g)(x+1)  =", (x + g) * (x + 1))
print("(x+1)(x+g)  =", (x + 1) * (x + g))  # not the same polynomial

# right division: f = q (x - a) + r, and r is the value f(a)
f = x ** 3 + g * x + 1
for a in F.enumerate_elements():
    q, r = right_divmod(f, x - a)
    print(f"f = ({q})(x - {a}) + {r}    f({a}) = {uni_eval(f, a)}")

# every element of F_4 is a root of x^3 - x
A = SigmaAlgebraicSet(F, F.enumerate_elements())
print("minimal polynomial of F_4:", A.minpoly, "rank", A.rank)

h, u, v = gcrd(x ** 3 - x, x ** 2 + g)
print("gcrd(x^3 - x, x^2 + g) =", h, "with u =", u, "v =", v)
print("lclm(x - g, x - 1)      =", lclm(x - g, x - 1))

# quaternions, sigma = id: i and j share the annihilator x^2 + 1
H = Quaternions()
y = UniSkewPoly.x(H)
i, j = H.unit("i"), H.unit("j")
print("i*j =", i * j, " j*i =", j * i)
print("lclm(x - i, x - j) =", lclm(y - i, y - j))
print("rank of {i, j, 1}  =", SigmaAlgebraicSet(H, [i, j, 1]).rank)
