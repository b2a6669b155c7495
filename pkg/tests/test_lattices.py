from itertools import product

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dvsigma.lattices import (E8_CARTAN, HPERP_GRAM_REFERENCE, GramLattice, LatticeCatalog as C, MatrixGroup,
                              automorphism_group, det_int, direct_sum, discriminant_data,
                              discriminant_form, divisor_pairing, enumerate_even_lattices, find_isometry,
                              fujiki_degree, nikulin_conditions, orthogonal_complement, picard_report,
                              qform_isomorphic, short_vectors, signature)

D4 = [[2, 0, -1, 0], [0, 2, -1, 0], [-1, -1, 2, -1], [0, 0, -1, 2]]


def unimodular(ops, n):
    """Product of elementary matrices e_i += k e_j."""
    u = sympy.eye(n)
    for i, j, k in ops:
        if i % n != j % n:
            e = sympy.eye(n)
            e[i % n, j % n] = k
            u = u * e
    return u


sym3 = st.lists(st.integers(-4, 4), min_size=6, max_size=6).map(
    lambda v: [[v[0], v[1], v[2]], [v[1], v[3], v[4]], [v[2], v[4], v[5]]])
ops = st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(-2, 2)), max_size=6)


@given(sym3)
def test_signature_and_det_match_sympy(g):
    m = sympy.Matrix(g)
    assert det_int(g) == m.det()
    p, q, z = signature(g)
    ev = m.eigenvals()
    assert z == ev.get(0, 0)
    assert p + q + z == 3
    if m.det() != 0:
        pos = sum(mult for val, mult in ev.items() if sympy.re(sympy.N(val, 30)) > 0)
        assert p == pos


@settings(max_examples=25, deadline=None)
@given(ops)
def test_discriminant_form_is_basis_independent(o):
    L = C.M3
    u = unimodular(o, 3)
    g2 = (u.T * sympy.Matrix(L.gram) * u).tolist()
    L2 = GramLattice([[int(v) for v in r] for r in g2])
    f1, f2 = discriminant_form(L), discriminant_form(L2)
    assert f1.orders == f2.orders
    assert qform_isomorphic(f1, f2)
    assert find_isometry(L, L2) is not None


def test_discriminant_forms():
    assert discriminant_form(C.U).orders == ()
    ref = GramLattice(HPERP_GRAM_REFERENCE)
    D = discriminant_form(ref)
    assert D.orders == (11, 11) and D.min_generators() == 2
    assert D.check_polarization()
    data = discriminant_data(ref)
    assert len(data.dual_gens) == 2
    assert ref.det() == 121 and ref.gram[0][0] == -6 and ref.is_even()
    assert discriminant_form(C.TWENTY_TWO).orders == (22,)


def test_short_vectors_against_brute_force():
    g = [[2, 1, 0], [1, 4, 1], [0, 1, 6]]
    found = set(short_vectors(g, 6))
    G = np.array(g)
    brute = {v for v in product(range(-4, 5), repeat=3) if any(v) and np.array(v) @ G @ np.array(v) <= 6}
    assert found == brute


def test_small_automorphism_groups():
    assert automorphism_group(C.A2).order == 12
    assert automorphism_group(GramLattice(D4)).order == 1152
    assert automorphism_group(C.TWO).order == 2
    aut = automorphism_group(C.L11)
    for g in aut.elements:
        m = np.array(g)
        assert (m.T @ np.array(C.L11.gram) @ m == np.array(C.L11.gram)).all()


def test_automorphism_group_needs_definite():
    with pytest.raises(ValueError):
        automorphism_group(C.U)


def test_matrix_group_simplicity():
    a2 = automorphism_group(C.A2)  # dihedral of order 12, not simple
    G = MatrixGroup(a2.elements)
    assert not G.is_simple()
    assert len(G.conjugacy_classes()) == 6


def test_find_isometry():
    assert find_isometry(C.L11, GramLattice([[2, -1], [-1, 6]])) is not None
    assert find_isometry(C.M3, direct_sum(C.L11, C.TWO)) is None
    assert find_isometry(C.A2, C.L11) is None


def test_enumerate_even_lattices():
    e = enumerate_even_lattices(2, 11)
    assert len(e) == 1 and find_isometry(e[0], C.L11)
    e = enumerate_even_lattices(3, 22)
    assert len(e) == 2
    assert all(any(find_isometry(x, y) for x in e) for y in (C.M3, direct_sum(C.L11, C.TWO)))
    e = enumerate_even_lattices(2, 3)
    assert len(e) == 1 and find_isometry(e[0], C.A2)
    with pytest.raises(ValueError):
        enumerate_even_lattices(4, 3)


def test_catalog():
    assert C.L11.det() == 11 and C.M3.det() == 22
    assert C.T.det() == 242
    assert abs(C.K3_2.det()) == 2 and C.K3_2.signature() == (3, 20)
    assert GramLattice(E8_CARTAN).det() == 1
    for model in C.pic_models().values():
        assert model.signature() == (1, 20) and abs(model.det()) == 22


def test_nikulin_examples():
    assert not nikulin_conditions(C.TWENTY_TWO, "split_U")
    assert nikulin_conditions(C.U, "unique")
    for model in C.pic_models().values():
        assert all(nikulin_conditions(model, m) for m in ("unique", "split_U", "split_E8"))
    with pytest.raises(ValueError):
        nikulin_conditions(GramLattice([[1]]), "unique")


def test_fujiki_degree():
    assert fujiki_degree(1) == 30
    assert fujiki_degree(0) == 8
    assert fujiki_degree(-2) == -36


def test_divisor_pairing(points):
    p = points.points
    assert divisor_pairing(p[(0, 0)], p[(0, 1)]) == 1
    assert divisor_pairing(p[(0, 0)], p[(0, 2)]) == 0
    with pytest.raises(ValueError):
        divisor_pairing(p[(0, 0)], p[(0, 0)])


def test_picard(picard_artifacts):
    pic = picard_artifacts["picard"]
    rep = picard_report(pic)
    assert abs(rep.det) == 22 and rep.qHH == 22 and rep.qHD_all_2
    assert tuple(rep.signature) == (1, 20) and rep.classes_consistent
    comp = picard_artifacts["complement"]
    assert comp.lattice.rank == 20 and abs(comp.lattice.det()) == 121
    assert qform_isomorphic(discriminant_form(comp.lattice), discriminant_form(GramLattice(HPERP_GRAM_REFERENCE)))


def test_complement_of_h_in_its_own_span():
    L = GramLattice([[22]])
    assert orthogonal_complement(L, [1]).lattice.rank == 0


def test_picard_action(picard_artifacts):
    act = picard_artifacts["action"]
    assert act.preserves_gram and act.fixes_h
    assert act.character_hperp == [20, -2, -2, 4, 2, -2, 0, 0]
    assert act.character_pic[1] == -1
    ident = tuple(tuple(int(i == j) for j in range(20)) for i in range(20))
    assert ident in set(act.hperp_mats.values())
