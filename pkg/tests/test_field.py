from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dvsigma.field import (ONE, ZERO, CycloNum, ReductionMap, gauss_sum, lift_residues, rational_reconstruct,
                           reduce_int, roots_of_unity_11, zeta)

small = st.integers(-6, 6)
cyclo = st.builds(lambda cs, d: CycloNum(cs, d), st.lists(small, min_size=0, max_size=10), st.integers(1, 4))
nonzero = cyclo.filter(lambda x: not x.is_zero())


def test_zeta_has_order_11():
    z = zeta()
    assert z**11 == ONE
    assert z != ONE
    assert sum((zeta(k) for k in range(11)), ZERO) == ZERO


def test_gauss_sum_squares_to_minus_11():
    g = gauss_sum()
    assert g * g == CycloNum([-11])
    assert g.galois(2) == -g  # 2 is a non-residue mod 11


def test_seed_ratio_is_real():
    r = zeta(7) + zeta(6) + zeta(5) + zeta(4)
    assert r.is_real()
    assert abs(r.complex().imag) < 1e-12


@given(cyclo, cyclo, cyclo)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


@settings(max_examples=40, deadline=None)
@given(nonzero)
def test_inverse(a):
    assert a * a.inverse() == ONE


@given(cyclo, cyclo, st.integers(1, 10))
def test_galois_is_a_ring_map(a, b, k):
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)
    assert (a + b).galois(k) == a.galois(k) + b.galois(k)


@given(cyclo)
def test_complex_embedding_matches(a):
    b = a * a
    assert abs(b.complex() - a.complex() ** 2) < 1e-6 * (1 + abs(a.complex()) ** 2)


@given(st.lists(small, min_size=10, max_size=10))
def test_lift_residues_roundtrip(coeffs):
    p = 23
    x = CycloNum(coeffs)
    res = [reduce_int(x, ReductionMap(p, g)) for g in roots_of_unity_11(p)]
    lifted = lift_residues(res, p)
    expected = [c % p for c in x.numerators[:10]] + [0] * (10 - len(x.numerators))
    assert lifted == expected[:10]


@given(st.integers(-30, 30), st.integers(1, 30))
def test_rational_reconstruction(n, d):
    m = 10007 * 10009
    f = Fraction(n, d)
    a = f.numerator * pow(f.denominator, -1, m) % m
    assert rational_reconstruct(a, m) == f


def test_roots_of_unity_needs_p_1_mod_11():
    assert roots_of_unity_11(23) == [2, 3, 4, 6, 8, 9, 12, 13, 16, 18]
    with pytest.raises(ValueError):
        roots_of_unity_11(29)


def test_json_roundtrip():
    x = CycloNum([Fraction(1, 2), -3, 0, 5])
    assert CycloNum.from_json(x.to_json()) == x
