import pytest

from dvsigma.grouprep import (A2, B2, CHARACTER_TABLE, CLASS_ORDERS, CLASS_REPS, CLASS_SIZES, GROUP_ORDER,
                              LAMBDA3_ROW, PSL_ID, CharacterTable, QuadNum, build_borel, character_of,
                              check_presentation_2, check_presentation_5, decompose, invariant_trivectors,
                              klein_cubic, lambda3_character, power_map, psl_mul, psl_order, same_span,
                              transform_form)
from dvsigma.trivector import act, sigma, sigma1, sigma2


def test_presentation_in_the_2x2_model():
    assert all(check_presentation_2().values())
    assert psl_order(A2) == 2 and psl_order(B2) == 3


def test_borel_orders():
    P, R = build_borel()
    assert P.order() == 11 and R.order() == 5


def test_generator_solution(generators):
    sol = generators
    assert sol.solutions_found >= 1
    assert all(check_presentation_5(sol.a.mat5, sol.b.mat5).values())
    assert sol.conjugation_ok and sol.klein_invariant
    assert transform_form(klein_cubic(), sol.a.mat5) == klein_cubic()


def test_group_enumeration(group):
    assert len(group) == GROUP_ORDER
    assert tuple(len(c) for c in group.classes) == CLASS_SIZES
    assert group.homomorphism_checked
    for rep, order in zip(CLASS_REPS, CLASS_ORDERS):
        assert psl_order(rep) == order


def test_power_maps():
    assert power_map(2) == [0, 2, 1, 0, 4, 4, 7, 6]
    assert power_map(3) == [0, 1, 2, 3, 0, 3, 7, 6]


def test_character_table_orthonormal():
    table = CharacterTable()
    assert table.is_orthonormal()
    assert sum(d * d for d in table.dimensions()) == GROUP_ORDER


def test_characters_of_the_models(group):
    chi10 = [QuadNum.of(x) for x in character_of(group, 10)]
    chi5 = [QuadNum.of(x) for x in character_of(group, 5)]
    assert chi10 == CHARACTER_TABLE["V10"]
    assert decompose(chi5)["V5"] + decompose(chi5)["V5dual"] == 1


def test_lambda3_character():
    chi = lambda3_character(CHARACTER_TABLE["V10"])
    assert chi == LAMBDA3_ROW
    dec = decompose(chi)
    assert dec["C"] == 1
    assert sum(m * d for m, d in zip(dec.values(), CharacterTable().dimensions())) == 120
    assert decompose(lambda3_character(CHARACTER_TABLE["V10'"]))["C"] == 0


def test_decompose_rejects_non_characters():
    with pytest.raises(ValueError):
        decompose([QuadNum(1)] + [QuadNum(0)] * 7)


def test_invariant_trivectors(generators):
    P, R = build_borel()
    fixed_b = invariant_trivectors([P.mat10, R.mat10])
    assert len(fixed_b) == 2 and same_span(fixed_b, [sigma1(), sigma2()])
    fixed_g = invariant_trivectors([generators.a.mat10], start=fixed_b)
    assert len(fixed_g) == 1 and same_span(fixed_g, [sigma()])
    assert act(generators.a.mat10, sigma()) == sigma()


def test_group_closed_under_products(group):
    mats = set(group.index)
    for g in list(mats)[:20]:
        for h in list(mats)[:20]:
            assert psl_mul(g, h) in mats
    assert PSL_ID in mats
