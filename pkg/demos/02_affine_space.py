"""The sigma-affine space of F_9 with sigma = Frob, and evaluation on it."""

import itertools

from skewnull.ring_core import FiniteField
from skewnull.sigma_affine import build_index, restrict_f_lambda
from skewnull.skew_multi import is_affine, multi_eval, substitution_chain, unit_witness
from skewnull.textio import parse_poly

F = FiniteField(3, 2, 1)
idx = build_index(F, 2)
print("lambdas:", [str(l) for l in idx.lambdas])
print("omega:  ", {str(l): str(w) for l, w in idx.omega.items()})
print("K:      ", [str(c) for c in idx.fixed_field])

points = idx.points()
print("points of F^(2,sigma):", len(points), "formula:", idx.formula_count())

# the same set, found the slow way
brute = [c for c in itertools.product(F.enumerate_elements(), repeat=2) if is_affine(c)]
print("brute-force filter of all 81 pairs:", len(brute))

g = F.primitive_element
print("(g, g^2) affine?", is_affine([g, g ** 2]), unit_witness([g, g ** 2]))

f = parse_poly("x1*x2 + g*x2^2 + 1", F, 2)
for a in points[:6]:
    v = multi_eval(f, a)
    print(f"f{a} = {v}   by substitution x2 then x1: {substitution_chain(f, a)}"
          f"   x1 then x2: {substitution_chain(f, a, [1, 2])}")

lam = idx.lambdas[1]
print("f restricted to the line for lambda =", lam, ":", restrict_f_lambda(f, lam, idx))
