import itertools
import random

import pytest

from conftest import TRIPLES
from skewnull.errors import InvalidLambda, NotEnumerable
from skewnull.ring_core import FiniteField, Quaternions
from skewnull.sampling import random_poly
from skewnull.sigma_affine import (affine_space_size, build_index, cardinality_mod_p_check,
                                   classical_ax_sum, classical_eval, enumerate_affine_space,
                                   restrict_f_lambda, sigma_line)
from skewnull.skew_multi import AffinePoint, MultiSkewPoly, is_affine, multi_eval


@pytest.mark.parametrize("p,m,k,size", [(3, 2, 1, 4), (2, 4, 1, 15), (2, 4, 2, 5), (2, 2, 0, 1)])
def test_w_size(p, m, k, size):
    F = FiniteField(p, m, k)
    idx = build_index(F, 1)
    assert len(idx.lambdas) == size
    brute = {F.sigma(a) * a.inv() for a in F.enumerate_elements()[1:]}
    assert set(idx.lambdas) == brute


def test_identity_sigma_gives_whole_field():
    F = FiniteField(3, 2, 0)
    idx = build_index(F, 2)
    assert idx.lambdas == [F.one]
    assert set(idx.fixed_field) == set(F.enumerate_elements())
    assert len(idx.points()) == 81


@pytest.mark.parametrize("p,m,k", TRIPLES)
def test_lines_and_omega(p, m, k):
    F = FiniteField(p, m, k)
    idx = build_index(F, 1)
    for lam in idx.lambdas:
        w = idx.omega[lam]
        assert F.sigma(w) * w.inv() == lam
        assert set(idx.line(lam)) == set(sigma_line(F, lam))
        for a in F.enumerate_elements():
            in_line = F.sigma(a) == lam * a
            assert in_line == (not a or a ** (p ** k - 1) == lam)
    for l1, l2 in itertools.combinations(idx.lambdas, 2):
        assert set(idx.line(l1)) & set(idx.line(l2)) == {F.zero}


@pytest.mark.parametrize("p,m,k", [(2, 2, 1), (3, 2, 1), (2, 4, 1), (2, 4, 2)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_partition_matches_affine_filter(p, m, k, n):
    F = FiniteField(p, m, k)
    if F.q ** n > 5000:
        pytest.skip("brute-force filter too large")
    points = build_index(F, n).points()
    assert len(points) == len(set(points))
    brute = {c for c in itertools.product(F.enumerate_elements(), repeat=n) if is_affine(c)}
    assert {a.coords for a in points} == brute


@pytest.mark.parametrize("p,m,k,n,count", [
    (3, 2, 1, 2, 33), (2, 2, 1, 2, 10), (3, 2, 1, 5, 969), (2, 2, 1, 1, 4)])
def test_counts(p, m, k, n, count):
    idx = build_index(FiniteField(p, m, k), n)
    assert len(idx.points()) == count == affine_space_size(idx.ring, n)
    assert cardinality_mod_p_check(idx)


def test_identity_count_is_q_to_n():
    for q_p, q_m, n in [(2, 2, 3), (3, 1, 4), (5, 1, 2)]:
        F = FiniteField(q_p, q_m, 0)
        assert affine_space_size(F, n) == F.q ** n
        assert cardinality_mod_p_check(build_index(F, n))


def test_needs_finite_field():
    with pytest.raises(NotEnumerable):
        build_index(Quaternions(), 2)


def test_enumeration_starts_at_origin(F9):
    idx = build_index(F9, 2)
    assert enumerate_affine_space(idx)[0] == AffinePoint(F9, [0, 0])


def test_restriction_examples(F9):
    idx = build_index(F9, 2)
    f = MultiSkewPoly.var(F9, 2, 1) * MultiSkewPoly.var(F9, 2, 2)
    for lam in idx.lambdas:
        fl = restrict_f_lambda(f, lam, idx)
        w = idx.omega[lam]
        for a in itertools.product(idx.fixed_field, repeat=2):
            assert multi_eval(f, [w * a[0], w * a[1]]) == F9.coerce(classical_eval(fl, a))
    c = MultiSkewPoly.constant(F9, 2, F9.primitive_element)
    expected = idx.identity_ring.coerce(F9.primitive_element)
    assert restrict_f_lambda(c, idx.lambdas[0], idx).terms == {(0, 0): expected}
    with pytest.raises(InvalidLambda):
        restrict_f_lambda(f, F9.zero, idx)


def test_restriction_trivial_for_identity():
    F = FiniteField(3, 2, 0)
    idx = build_index(F, 2)
    rng = random.Random(0)
    f = random_poly(F, 2, rng, max_degree=4)
    fl = restrict_f_lambda(f, F.one, idx)
    assert {e: c.value for e, c in fl.terms.items()} == {e: c.value for e, c in f.terms.items()}


@pytest.mark.parametrize("p,m,k", [(3, 2, 1), (2, 4, 1), (2, 4, 2)])
def test_restriction_commutes_with_evaluation(p, m, k):
    F = FiniteField(p, m, k)
    idx = build_index(F, 2)
    rng = random.Random(p + m + k)
    for _ in range(15):
        f = random_poly(F, 2, rng, max_degree=5)
        for lam in idx.lambdas:
            fl = restrict_f_lambda(f, lam, idx)
            assert set(fl.terms) <= set(f.terms)
            w = idx.omega[lam]
            for a in itertools.product(idx.fixed_field, repeat=2):
                lhs = multi_eval(f, [w * a[0], w * a[1]])
                assert lhs == F.coerce(classical_eval(fl, [fl.ring.coerce(c) for c in a]))


def test_classical_ax(F9):
    G = F9.with_sigma_power(0)
    idx1 = build_index(F9, 1)
    assert not classical_ax_sum(MultiSkewPoly.constant(G, 1, 1), idx1)
    neg = classical_ax_sum(MultiSkewPoly.monomial(G, (2,)), idx1)
    assert neg == G(2)
    idx2 = build_index(F9, 2)
    assert not classical_ax_sum(MultiSkewPoly.monomial(G, (1, 1)), idx2)
