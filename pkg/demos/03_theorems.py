"""Running the theorem checks on small instances."""

import random

from skewnull.ring_core import FiniteField, Quaternions
from skewnull.sampling import random_cn_instance, random_poly
from skewnull.sigma_affine import build_index
from skewnull.skew_uni import SigmaAlgebraicSet, UniSkewPoly
from skewnull.textio import format_poly, parse_poly
from skewnull.theorems import (LeftIdealMulti, chevalley_warning_check, cn_check,
                               finitesatz_report, one_var_finitesatz_check, skew_ax_check,
                               vanishing_ideal_normal_form, variety)

rng = random.Random(2024)
F = FiniteField(3, 2, 1)
idx = build_index(F, 2)

# combinatorial Nullstellensatz
for _ in range(3):
    f, sets, exp = random_cn_instance(idx, rng)
    witness, report = cn_check(f, sets, exp)
    print("CN:", format_poly(f), "| ranks", report.params["ranks"], "| witness", witness)

H = Quaternions()
A = SigmaAlgebraicSet(H, [H.unit("i"), H.unit("j"), 1])
print("CN over H:", cn_check(parse_poly("x1^2 + 1", H, 1), [A])[1].observed)

# Chevalley-Warning on 969 points
idx5 = build_index(F, 5)
print("CW:", chevalley_warning_check([parse_poly("x1+x2+x3+x4+x5", F, 5)], idx5).to_dict())

# Ax: low degree sums vanish, a high degree one need not
print("Ax, x1*x2:", skew_ax_check(parse_poly("x1*x2", F, 2), idx).observed)
print("Ax, x1^4 (bound violated):", skew_ax_check(parse_poly("x1^4", F, 1), build_index(F, 1)).observed)

# normal forms modulo the vanishing ideal
for text in ["x2*x1^3", "x1^9 + x2^5", "x2*x1^3 - x2^3*x1"]:
    f = parse_poly(text, F, 2)
    print(f"nf({text}) = {vanishing_ideal_normal_form(f, idx)}")

# weak Finitesatz certificate for a zero-free ideal
while True:
    J = LeftIdealMulti([random_poly(F, 2, rng, max_degree=2, nonzero=True) for _ in range(2)])
    if not variety(J, idx):
        break
cert, report = finitesatz_report(J, idx)
print("ideal:", [format_poly(f) for f in J])
print("cofactor degrees:", cert.cofactor_degrees, "iterations:", cert.iterations)
print("certificate ok:", report.passed)

# one variable: gcrd with x^(M+1) - x recovers the zero set
x = UniSkewPoly.x(F)
g = F.primitive_element
print(one_var_finitesatz_check((x - g) * (x - 1), F).to_dict())
