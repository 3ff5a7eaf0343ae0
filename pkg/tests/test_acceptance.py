"""Acceptance criteria 1-11, each at its stated size and time limit.

Run ``pytest tests/test_acceptance.py`` (one PASS/FAIL line per criterion
appears in the terminal summary) or ``python tests/test_acceptance.py``.
"""

import itertools
import random
import sys
import time

import pytest

from skewnull.ring_core import FiniteField, GaussianRationals, Quaternions
from skewnull.sampling import all_monomials, random_cn_instance, random_poly
from skewnull.sigma_affine import affine_space_size, build_index
from skewnull.skew_multi import MultiSkewPoly, multi_eval, multi_product_formula_check, substitution_chain
from skewnull.skew_uni import (SigmaAlgebraicSet, UniSkewPoly, field_annihilator, gcrd,
                               product_formula_eval, uni_eval)
from skewnull.textio import format_poly, parse_poly
from skewnull.theorems import (LeftIdealMulti, chevalley_warning_check, cn_check,
                               finitesatz_report, skew_ax_bound, skew_ax_check,
                               vanishes_everywhere, vanishing_ideal_generators,
                               vanishing_ideal_normal_form, variety)

TRIPLES = [(2, 2, 1), (3, 2, 1), (2, 4, 1), (2, 4, 2), (5, 2, 1)]
RESULTS = {}


def record(number, ok, started, limit, detail):
    elapsed = time.perf_counter() - started
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = "" if limit is None else f" (limit {limit} s)"
    RESULTS[number] = f"criterion {number:>2}: {status}  {elapsed:6.2f} s{budget}  {detail}"
    assert ok, detail
    assert within, f"took {elapsed:.2f} s, limit {limit} s"


def test_criterion_01_cardinality():
    t = time.perf_counter()
    bad = []
    for (p, m, k), n in itertools.product(TRIPLES, [1, 2, 3]):
        F = FiniteField(p, m, k)
        count = len(build_index(F, n).points())
        if count != affine_space_size(F, n) or count % p:
            bad.append((p, m, k, n, count))
    record(1, not bad, t, 5, f"15 (p,m,k,n) cases, mismatches {bad}")


def test_criterion_02_residue_uniqueness():
    t = time.perf_counter()
    checked = 0
    ok = True
    for F in (FiniteField(2, 2, 1), FiniteField(3, 2, 1)):
        points = build_index(F, 2).points()
        for exp in all_monomials(2, 4):
            f = MultiSkewPoly.monomial(F, exp)
            for a in points:
                v = multi_eval(f, a)
                ok &= substitution_chain(f, a, [2, 1]) == v == substitution_chain(f, a, [1, 2])
                checked += 1
    record(2, ok, t, 10, f"{checked} (monomial, point) pairs agree")


def test_criterion_03_product_formula():
    t = time.perf_counter()
    rng = random.Random(3)
    F8 = FiniteField(2, 3, 1)
    uni_ok = True
    for _ in range(1000):
        f, g = (UniSkewPoly(F8, [F8.random_element(rng) for _ in range(rng.randint(0, 5))])
                for _ in range(2))
        fg = f * g
        uni_ok &= all(product_formula_eval(f, g, a) == uni_eval(fg, a)
                      for a in F8.enumerate_elements())
    F4 = FiniteField(2, 2, 1)
    points = build_index(F4, 2).points()
    multi_ok = True
    for _ in range(200):
        f, g = (random_poly(F4, 2, rng, max_terms=4) for _ in range(2))
        multi_ok &= all(multi_product_formula_check(f, g, a) for a in points)
    record(3, uni_ok and multi_ok, t, 10,
           f"uni: 1000 pairs x 8 points {uni_ok}; multi: 200 pairs x 10 points {multi_ok}")


def test_criterion_04_lclm_over_field():
    t = time.perf_counter()
    bad = []
    for p, m, k in TRIPLES:
        F = FiniteField(p, m, k)
        if SigmaAlgebraicSet(F, F.enumerate_elements()).minpoly != field_annihilator(F):
            bad.append((p, m, k))
    record(4, not bad, t, None, f"minpoly(F) = x^(M+1) - x for 5 triples, mismatches {bad}")


def test_criterion_05_combinatorial_nullstellensatz():
    t = time.perf_counter()
    rng = random.Random(5)
    configs = [(FiniteField(2, 2, 1), 1), (FiniteField(2, 2, 1), 2), (FiniteField(2, 3, 1), 1),
               (FiniteField(2, 3, 1), 2), (FiniteField(3, 2, 1), 1), (FiniteField(3, 2, 1), 2)]
    indexes = [build_index(F, n) for F, n in configs]
    found = 0
    for i in range(200):
        idx = indexes[i % len(indexes)]
        f, sets, exp = random_cn_instance(idx, rng)
        witness, report = cn_check(f, sets, exp)
        if not report.passed:
            pytest.fail(f"falsification: no witness for {format_poly(f)} on {sets}")
        found += multi_eval(f, witness) != 0
    H = Quaternions()
    A = SigmaAlgebraicSet(H, [H.unit("i"), H.unit("j"), 1])
    witness, report = cn_check(parse_poly("x1^2 + 1", H, 1), [A])
    found += report.passed
    record(5, found == 201, t, 60, f"witnesses found {found}/201")


def test_criterion_06_chevalley_warning():
    t = time.perf_counter()
    F9 = FiniteField(3, 2, 1)
    report = chevalley_warning_check([parse_poly("x1+x2+x3+x4+x5", F9, 5)], build_index(F9, 5))
    skew_ok = report.hypothesis_satisfied and report.passed and report.observed["points"] == 969
    rng = random.Random(6)
    satisfied = failed = 0
    for i in range(100):
        F = FiniteField((2, 3)[i % 2])
        n = rng.randint(2, 4)
        idx = build_index(F, n)
        polys = []
        budget = n - 1
        for _ in range(rng.randint(1, 3)):
            d = rng.randint(0, budget)
            polys.append(random_poly(F, n, rng, max_degree=d, nonzero=True))
            budget -= max(polys[-1].total_degree, 0)
            if budget < 0:
                break
        r = chevalley_warning_check(polys, idx)
        satisfied += r.hypothesis_satisfied
        failed += r.falsified
    record(6, skew_ok and failed == 0, t, 30,
           f"skew count {report.observed['count']} of 969 points; classical {satisfied} "
           f"hypothesis-satisfying instances, {failed} failures")


def test_criterion_07_skew_ax():
    t = time.perf_counter()
    rng = random.Random(7)
    sums = failed = 0
    for F in (FiniteField(3, 2, 1), FiniteField(2, 4, 2)):
        idx = build_index(F, 2)
        cap = skew_ax_bound(F, 2) - 1
        for _ in range(200):
            report = skew_ax_check(random_poly(F, 2, rng, max_degree=cap), idx)
            sums += report.hypothesis_satisfied
            failed += not report.passed
    record(7, failed == 0 and sums == 400, t, None, f"{sums} sums over F^(2,sigma), {failed} nonzero")


def test_criterion_08_vanishing_ideal():
    t = time.perf_counter()
    rng = random.Random(8)
    agree = vanishing = 0
    gens_ok = True
    for F in (FiniteField(2, 2, 1), FiniteField(3, 2, 1)):
        idx = build_index(F, 2)
        gens = vanishing_ideal_generators(F, 2)
        for g in gens:
            gens_ok &= not vanishing_ideal_normal_form(g, idx) and vanishes_everywhere(g, idx)
        for i in range(500):
            # kinds: plain random, f - nf(f), a combination of generators, random plus combination
            kind = i % 4
            combo = MultiSkewPoly(F, 2)
            for g in rng.sample(gens, 2):
                combo = combo + random_poly(F, 2, rng, max_degree=3) * g
            f = random_poly(F, 2, rng, max_degree=10)
            if kind == 1:
                f = f - vanishing_ideal_normal_form(f, idx)
            elif kind == 2:
                f = combo
            elif kind == 3:
                f = f + combo
            nf = vanishing_ideal_normal_form(f, idx)
            by_points = not any(multi_eval(f, a) for a in idx.points())
            agree += by_points == (not nf)
            vanishing += by_points
            assert vanishes_everywhere(f - nf, idx)
    record(8, agree == 1000 and gens_ok, t, 60,
           f"1000 samples, {vanishing} vanishing, nf agreement {agree}/1000, generators {gens_ok}")


def test_criterion_09_weak_finitesatz():
    t = time.perf_counter()
    rng = random.Random(9)
    good = 0
    max_iter = 0
    for F in (FiniteField(2, 2, 1), FiniteField(3, 2, 1)):
        idx = build_index(F, 2)
        made = 0
        while made < 20:
            J = LeftIdealMulti([random_poly(F, 2, rng, max_degree=3, nonzero=True)
                                for _ in range(rng.randint(1, 3))])
            if variety(J, idx):
                continue
            made += 1
            cert, report = finitesatz_report(J, idx)
            good += report.passed
            max_iter = max(max_iter, cert.iterations)
    record(9, good == 40, t, None, f"{good}/40 certificates exact, max iterations {max_iter}")


def test_criterion_10_one_variable_finitesatz():
    t = time.perf_counter()
    F4 = FiniteField(2, 2, 1)
    elems = F4.enumerate_elements()
    annihilator = field_annihilator(F4)
    total = good = 0
    for d in range(5):
        for coeffs in itertools.product(elems, repeat=d):
            f = UniSkewPoly(F4, list(coeffs) + [F4.one])
            zeros = [a for a in elems if not uni_eval(f, a)]
            good += gcrd(f, annihilator)[0] == SigmaAlgebraicSet(F4, zeros).minpoly
            total += 1
    record(10, good == total == 341, t, 10, f"{good}/{total} monic f of degree <= 4")


def test_criterion_11_parser_round_trip():
    t = time.perf_counter()
    rng = random.Random(11)
    rings = [(FiniteField(3, 2, 1), 3), (FiniteField(2, 4, 2), 2), (GaussianRationals(), 2),
             (Quaternions(), 2)]
    fixed = 0
    for i in range(1000):
        ring, n = rings[i % len(rings)]
        text = format_poly(random_poly(ring, n, rng, max_degree=5))
        fixed += format_poly(parse_poly(text, ring, n)) == text
    record(11, fixed == 1000, t, None, f"{fixed}/1000 byte-identical")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except (AssertionError, pytest.fail.Exception):
                failures += 1
    for number in sorted(RESULTS):
        print(RESULTS[number])
    sys.exit(1 if failures else 0)
