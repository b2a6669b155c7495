from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dvsigma import linalg

mat = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n))


@given(mat)
def test_rank_and_det_match_sympy(a):
    m = sympy.Matrix(a)
    assert linalg.rank(a) == m.rank()
    assert linalg.det([[Fraction(v) for v in r] for r in a]) == m.det()


@settings(deadline=None)
@given(mat)
def test_nullspace(a):
    n = len(a)
    null = linalg.nullspace([[Fraction(v) for v in r] for r in a], n, one=Fraction(1), zero=Fraction(0))
    assert len(null) == n - linalg.rank(a)
    for v in null:
        assert all(sum(x * y for x, y in zip(r, v)) == 0 for r in a)


@given(mat)
def test_rank_mod_p_bounds(a):
    p = 23
    r = linalg.rank(a, p)
    assert r <= linalg.rank(a)
    full = r == len(a)
    assert full == (sympy.Matrix(a).det() % p != 0)


def test_plain_ints_stay_exact():
    # 1/3 as a float would leave residues that look nonzero
    a = [[3, 1, 2], [1, 3, 1], [2, 1, 3]]
    assert linalg.rank(a) == 3
    assert linalg.det(a) == sympy.Matrix(a).det()
    skew = [[0, 3, 1], [-3, 0, 7], [-1, -7, 0]]
    assert linalg.rank(skew) == 2
