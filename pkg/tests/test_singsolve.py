from dvsigma import linalg
from dvsigma.field import ZERO, zeta
from dvsigma.singsolve import (QUINTIC, ProjPoint, apply_P, apply_R, check_orbit, full_group_closure,
                               point_permutation, rank_loci, seed_point, seed_ratio, verify_seed)
from dvsigma.trivector import contract, sigma


def test_rank_loci_mod_23():
    loci = rank_loci(23)
    assert loci[2]["dim_degree"] == (-1, 11)
    assert loci[4]["dim_degree"] == (0, 55)
    assert loci[6]["dim_degree"] == (6, 15)


def test_seed_ratio_is_a_quintic_root():
    r = seed_ratio()
    assert sum((r**k * c for k, c in enumerate(QUINTIC)), ZERO) == ZERO
    assert r == zeta(7) + zeta(6) + zeta(5) + zeta(4)


def test_projective_normalisation():
    p = ProjPoint((ZERO, zeta(3), zeta(4)))
    q = ProjPoint((ZERO, zeta(5), zeta(6)))
    assert p == q and p[1] == 1


def test_seed_point_modular_path(points):
    seed = seed_point(primes=(23, 67))
    assert seed.method == "modular"
    checks = verify_seed(seed.point)
    assert checks["hyperplane"] and checks["cubics_vanish"] and checks["rank_is_4"] and checks["real"]
    assert seed.point in set(points.points.values())


def test_orbit(points, generators):
    rep = check_orbit(points)
    assert rep.count == 55 and rep.distinct and rep.all_rank_4
    assert rep.rank2_fails_everywhere
    assert rep.real_pattern_ok and rep.distinct_mod_23
    assert rep.P_cycles_rows and rep.R_permutes_rows
    assert full_group_closure(points, generators.a.mat10)


def test_borel_moves_points(points):
    pts = set(points.points.values())
    for pt in list(pts)[:10]:
        assert apply_R(pt) in pts and apply_P(pt, 3) in pts
        assert linalg.rank(contract(sigma(), pt.coords, ZERO)) == 4


def test_point_permutation_is_a_permutation(points, generators):
    perm = point_permutation(points, generators.a.mat10)
    assert sorted(perm) == list(range(55))
    # a is an involution
    assert [perm[perm[k]] for k in range(55)] == list(range(55))
