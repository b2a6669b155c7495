from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dvsigma import linalg
from dvsigma.grouprep import R_PERM, rho_R, lambda2
from dvsigma.trivector import (Trivector, act, build_sigma, contract, pair_form, pfaffian,
                               restrict_vanishes, sigma, sigma1, sigma2, skew_rank)

vec10 = st.lists(st.integers(-3, 3), min_size=10, max_size=10)


def test_sigma_has_ten_components():
    s = sigma()
    assert len(s.coeffs) == 10
    assert s == sigma1() + sigma2()
    # [308] = -[038]
    assert s[(3, 0, 8)] == 1 and s[(0, 3, 8)] == -1


def test_build_sigma_rejects_bad_triples():
    with pytest.raises(ValueError):
        build_sigma([(0, 0, 1)])
    with pytest.raises(ValueError):
        build_sigma([(0, 1, 10)])


@given(vec10, vec10, vec10)
def test_trivector_is_alternating(u, v, w):
    s = sigma()
    assert s(u, v, w) == -s(v, u, w) == s(v, w, u)
    assert s(u, u, w) == 0


@given(vec10, vec10)
def test_contract_and_pair_form(u, v):
    s = sigma()
    m = contract(s, u)
    assert all(m[i][j] == -m[j][i] for i in range(10) for j in range(10))
    assert all(m[i][j] == s(u, [int(k == i) for k in range(10)], [int(k == j) for k in range(10)])
               for i in range(10) for j in range(10))
    form = pair_form(s, u, v)
    w = [1, -2, 0, 3, 1, 0, 0, 2, -1, 1]
    assert sum(a * b for a, b in zip(form, w)) == s(u, v, w)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=15, max_size=15))
def test_pfaffian_squared_is_det(entries):
    n = 6
    a = [[0] * n for _ in range(n)]
    for (i, j), x in zip(combinations(range(n), 2), entries):
        a[i][j], a[j][i] = x, -x
    assert pfaffian(a) ** 2 == sympy.Matrix(a).det()


@given(vec10)
def test_generic_rank_is_8(u):
    m = contract(sigma(), u)
    r = skew_rank(m)
    assert r % 2 == 0 and r <= 8


def test_rank_at_a_random_point_is_8():
    assert skew_rank(contract(sigma(), [1, 2, 3, 5, 7, 11, 13, 17, 19, 23])) == 8


def test_restrict_vanishes_basis_independent():
    basis = [[int(j == i) for j in range(10)] for i in (2, 3, 4, 5, 8, 9)]
    assert restrict_vanishes(sigma(), basis)
    mixed = [list(r) for r in basis]
    mixed[0] = [a + 3 * b for a, b in zip(mixed[0], mixed[1])]
    mixed[5] = [a - b for a, b in zip(mixed[5], mixed[2])]
    assert restrict_vanishes(sigma(), mixed)
    with pytest.raises(ValueError):
        restrict_vanishes(sigma(), [basis[0], basis[0], basis[1]])


def test_R_permutes_sigma():
    m = lambda2(rho_R())
    assert act(m, sigma()) == sigma()
    perm = [[int(R_PERM[j] == i) for j in range(10)] for i in range(10)]
    assert act(perm, sigma()) == sigma()


@given(st.permutations(list(range(10))))
def test_act_is_a_homomorphism(p):
    g = [[int(p[j] == i) for j in range(10)] for i in range(10)]
    h = [[int((j + 1) % 10 == i) for j in range(10)] for i in range(10)]
    t = Trivector({(0, 1, 2): 1, (3, 5, 9): -2})
    assert act(linalg.matmul(g, h), t) == act(g, act(h, t))
