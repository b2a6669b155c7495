from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from dvsigma.field import CycloNum
from dvsigma.polysys import (GF, QQ, MPoly, QZeta, ResourceLimit, TermOrder, affine_dim_degree, buchberger, dim_degree,
                             eliminate, format_poly, hilbert_numerator, is_member, normal_form, parse_poly,
                             poly_rem_mod_p, solve_zero_dim, variables)

X = sympy.symbols("x0:3")


def to_sympy(f: MPoly):
    return sum(sympy.Integer(int(c)) * sympy.prod(x**e for x, e in zip(X, exps)) for exps, c in f.terms.items())


def from_sympy(expr, F):
    poly = sympy.Poly(expr, *X)
    return MPoly(3, {m: int(c) for m, c in poly.terms()}, F)


term = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
poly_terms = st.dictionaries(term, st.integers(1, 12), min_size=1, max_size=4)


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(poly_terms, min_size=1, max_size=3))
def test_groebner_matches_sympy_mod_p(systems):
    p = 13
    F = GF(p)
    gens = [MPoly(3, t, F) for t in systems]
    gb = buchberger(gens, TermOrder.grevlex(3), budget=10**5)
    ref = sympy.groebner([to_sympy(g) for g in gens], *X, modulus=p, order="grevlex")
    ours = {frozenset(g.terms.items()) for g in gb.generators}
    theirs = {frozenset(from_sympy(h.as_expr(), F).terms.items()) for h in ref.exprs}
    # both are reduced bases for the same order, hence equal after making them monic
    assert ours == {frozenset(_monic(t, p).items()) for t in theirs}


def _monic(items, p):
    d = dict(items)
    order = TermOrder.grevlex(3)
    lead = max(d, key=order.key)
    inv = pow(d[lead], -1, p)
    return {e: c * inv % p for e, c in d.items()}


@settings(max_examples=25, deadline=None)
@given(st.lists(poly_terms, min_size=1, max_size=2), poly_terms, poly_terms)
def test_ideal_combinations_reduce_to_zero(systems, t1, t2):
    F = GF(13)
    gens = [MPoly(3, t, F) for t in systems]
    gb = buchberger(gens, TermOrder.grevlex(3), budget=10**5)
    combo = gens[0] * MPoly(3, t1, F) + gens[-1] * MPoly(3, t2, F)
    assert is_member(combo, gb)
    assert normal_form(combo, gb).is_zero()


def test_twisted_cubic_dim_degree():
    F = GF(101)
    x = variables(4, F)
    gens = [x[0] * x[2] - x[1] ** 2, x[1] * x[3] - x[2] ** 2, x[0] * x[3] - x[1] * x[2]]
    gb = buchberger(gens, TermOrder.grevlex(4))
    assert dim_degree(gb) == (1, 3)


def test_points_and_units():
    F = GF(31)
    x = variables(2, F)
    gb = buchberger([x[0] ** 2 - 1, x[1] - x[0]], TermOrder.grevlex(2))
    assert affine_dim_degree(gb) == (0, 2)
    sols = solve_zero_dim(gb)
    assert sorted(sols.points) == [(1, 1), (30, 30)]
    unit = buchberger([x[0], x[0] - 1], TermOrder.grevlex(2))
    assert unit.is_unit()


def test_rational_and_cyclotomic_coefficients():
    x = variables(2, QQ())
    gb = buchberger([x[0] * 2 - 1, x[1] - x[0] * x[0]], TermOrder.lex(2))
    assert solve_zero_dim(gb).points == [(Fraction(1, 2), Fraction(1, 4))]
    F = QZeta()
    f = parse_poly("(z^2 + 1)*x0^2 - 3/2*x1", 2, F)
    assert f.terms[(2, 0)] == CycloNum([1, 0, 1])
    assert parse_poly(format_poly(f), 2, F) == f


def test_elimination():
    F = GF(101)
    x = variables(3, F)
    # x0 = t^2, x1 = t^3 with t = x2
    elim = eliminate([x[0] - x[2] ** 2, x[1] - x[2] ** 3], drop=[2])
    assert elim and all(2 not in g.variables() for g in elim)
    assert is_member(x[0] ** 3 - x[1] ** 2, buchberger(elim, TermOrder.grevlex(3)))


def test_budget_is_enforced():
    F = GF(101)
    x = variables(4, F)
    gens = [sum(x, MPoly(4, {}, F)) ** 3 - 1, x[0] * x[1] * x[2] - x[3] ** 2, x[1] ** 4 - x[0] * x[2]]
    with pytest.raises(ResourceLimit):
        buchberger(gens, TermOrder.grevlex(4), budget=5)


def test_hilbert_numerator_of_a_monomial():
    # k[x, y]/(x^2): numerator 1 - t^2
    assert hilbert_numerator([(2, 0)]) == [1, 0, -1]


def test_poly_rem_mod_p():
    # (X - 1)(X - 2) = X^2 - 3X + 2 is divisible by X - 2
    assert poly_rem_mod_p([2, -3, 1], [-2, 1], 7) == []
    assert poly_rem_mod_p([1, 0, 1], [0, 1], 7) == [1]


def test_diff():
    x = variables(2, GF(7))
    f = x[0] ** 3 * x[1] + x[1] ** 2
    assert f.diff(0) == x[0] ** 2 * x[1] * 3
    assert f.diff(1) == x[0] ** 3 + x[1] * 2
