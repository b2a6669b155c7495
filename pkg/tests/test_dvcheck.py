import pytest

from dvsigma.dvcheck import (Chart, certify_chart, chart_cubic, coordinate_basis, fixed_points_of_P,
                             degeneracy_consistency, membership_x6, smoothness_certificate_mod_p)
from dvsigma.grouprep import R_PERM
from dvsigma.trivector import build_sigma


def test_fixed_points():
    rep = fixed_points_of_P()
    assert rep.candidates == 210
    assert rep.count == 5
    assert rep.p_diagonal
    assert len(rep.r_orbits) == 1
    assert (2, 3, 4, 5, 8, 9) in rep.subsets
    for s in rep.subsets:
        assert membership_x6(coordinate_basis(s))
        assert tuple(sorted(R_PERM[i] for i in s)) in rep.subsets


def test_membership():
    assert not membership_x6(coordinate_basis(range(6)))
    basis = coordinate_basis((2, 3, 4, 5, 8, 9))
    basis[1] = [a + 2 * b for a, b in zip(basis[1], basis[4])]
    assert membership_x6(basis)
    with pytest.raises(ValueError):
        membership_x6(basis[:5])


def test_chart_layout():
    ch = Chart.of((0, 4, 7))
    assert ch.free == (1, 2, 3, 5, 6, 8, 9)
    f = chart_cubic(ch, 23)
    assert f.n == 21 and f.total_degree() <= 3


def test_unit_cubic_certificate_format():
    # on the chart (0,1,2) the trivector x0^x1^x2 is identically 1
    res = certify_chart((0, 1, 2), 23, t=build_sigma([(0, 1, 2)]))
    assert res.to_json()["status"] == "empty"
    assert set(res.to_json()) == {"chart", "status", "pairs_processed", "time_ms"}


def test_singular_control_is_detected():
    res = certify_chart((6, 7, 8), 23, t=build_sigma([(0, 1, 2)]))
    assert res.status == "singular"


def test_some_charts_of_sigma_are_smooth():
    rep = smoothness_certificate_mod_p(23, charts=[(0, 1, 2), (2, 3, 4)])
    assert all(c.status == "empty" for c in rep.charts)
    assert rep.verdict == "inconclusive"  # only 2 of 120 charts
    assert degeneracy_consistency(rep, 55) == "inconclusive"


def test_budget_gives_inconclusive():
    res = certify_chart((0, 1, 2), 23, budget=3)
    assert res.status == "inconclusive"


def test_small_primes_rejected():
    with pytest.raises(ValueError):
        smoothness_certificate_mod_p(3, charts=[(0, 1, 2)])
