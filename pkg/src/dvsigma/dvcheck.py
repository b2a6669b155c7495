"""Checks on the 6-plane side: membership in X6, fixed points of P, smoothness mod p."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .grouprep import R_PERM, lambda2, rho_P
from .polysys import GF, MPoly, ResourceLimit, TermOrder, buchberger
from .trivector import DIM, Trivector, restrict_vanishes, sigma


def coordinate_basis(subset: Sequence[int], dim: int = DIM) -> list[list[int]]:
    return [[int(j == i) for j in range(dim)] for i in sorted(subset)]


def membership_x6(basis: Sequence[Sequence], t: Trivector | None = None) -> bool:
    """True iff the trivector vanishes on the 6-space spanned by the basis."""
    if len(basis) != 6:
        raise ValueError("need a basis of 6 vectors")
    return restrict_vanishes(sigma() if t is None else t, basis)


@dataclass
class FixedPointReport:
    candidates: int
    subsets: list  # sorted 6-subsets lying in X6
    r_orbits: list  # the subsets grouped into orbits of the R permutation
    p_diagonal: bool  # P acts diagonally with distinct eigenvalues

    @property
    def count(self) -> int:
        return len(self.subsets)

    def to_json(self):
        return {"candidates": self.candidates, "count": self.count,
                "subsets": [list(s) for s in self.subsets],
                "r_orbits": [[list(s) for s in o] for o in self.r_orbits],
                "p_diagonal": self.p_diagonal}


def _permute(subset, perm):
    return tuple(sorted(perm[i] for i in subset))


def fixed_points_of_P(t: Trivector | None = None) -> FixedPointReport:
    """Coordinate 6-spaces in X6; these are all the P-invariant 6-spaces.

    P is diagonal on the coordinates with 10 distinct eigenvalues, so its
    invariant subspaces are exactly the coordinate subspaces.
    """
    t = sigma() if t is None else t
    m = lambda2(rho_P())
    diag = [m[i][i] for i in range(DIM)]
    p_diag = (all(m[i][j] == 0 for i in range(DIM) for j in range(DIM) if i != j)
              and len(set(diag)) == DIM)
    cands = list(combinations(range(DIM), 6))
    found = [s for s in cands if membership_x6(coordinate_basis(s), t)]
    orbits, seen = [], set()
    for s in found:
        if s in seen:
            continue
        orb, x = [], s
        while x not in orb:
            orb.append(x)
            x = _permute(x, R_PERM)
        seen |= set(orb)
        orbits.append(sorted(orb))
    return FixedPointReport(len(cands), found, orbits, p_diag)


# ---------------------------------------------------------------------------
# smoothness of X3 on the charts of Gr(3, 10)


@dataclass
class Chart:
    pivots: tuple  # the 3 columns carrying the identity
    free: tuple  # the 7 remaining columns

    @classmethod
    def of(cls, pivots):
        pivots = tuple(sorted(pivots))
        return cls(pivots, tuple(c for c in range(DIM) if c not in pivots))

    def rows(self, F):
        """Three rows of a 3 x 10 matrix, x_{7r+k} in column free[k] of row r."""
        out = []
        for r in range(3):
            row = [MPoly(21, {}, F) for _ in range(DIM)]
            row[self.pivots[r]] = MPoly.const(1, 21, F)
            for k, c in enumerate(self.free):
                row[c] = MPoly.var(7 * r + k, 21, F)
            out.append(row)
        return out


def chart_cubic(chart: Chart, p: int, t: Trivector | None = None) -> MPoly:
    """The equation t(row_1, row_2, row_3) of X3 on the chart, over F_p."""
    t = sigma() if t is None else t
    F = GF(p)
    u, v, w = chart.rows(F)
    return t(u, v, w) + MPoly(21, {}, F)


@dataclass
class ChartResult:
    chart: tuple
    status: str  # empty | singular | inconclusive
    pairs_processed: int
    time_ms: int

    def to_json(self):
        return {"chart": list(self.chart), "status": self.status,
                "pairs_processed": self.pairs_processed, "time_ms": self.time_ms}


def certify_chart(pivots, p: int, budget: int | None = None, t: Trivector | None = None) -> ChartResult:
    """Decide whether 1 lies in (f, df/dx_1, ..., df/dx_21) over F_p."""
    chart = Chart.of(pivots)
    start = time.perf_counter()
    f = chart_cubic(chart, p, t)
    gens = [f] + [f.diff(i) for i in range(21)]
    try:
        gb = buchberger(gens, TermOrder.grevlex(21), budget)
        status = "empty" if gb.is_unit() else "singular"
        pairs = gb.stats.pairs_processed
    except ResourceLimit:
        status, pairs = "inconclusive", -1
    ms = int(1000 * (time.perf_counter() - start))
    return ChartResult(chart.pivots, status, pairs, ms)


def _certify_job(args):
    return certify_chart(*args)


@dataclass
class SmoothnessReport:
    prime: int
    charts: list = field(default_factory=list)
    statement: str = ("no 3-space V3 in a 6-space V6 of X6 with t(V3, V3, V10) = 0; "
                      "equivalently X3 is smooth")

    @property
    def verdict(self) -> str:
        st = {c.status for c in self.charts}
        if "singular" in st:
            return "singular"
        if "inconclusive" in st or len(self.charts) < 120:
            return "inconclusive"
        return "empty"

    def to_json(self):
        return {"prime": self.prime, "verdict": self.verdict, "statement": self.statement,
                "charts": [c.to_json() for c in self.charts]}


def smoothness_certificate_mod_p(p: int = 23, budget: int | None = 10**6, jobs: int = 1,
                                 charts: Sequence | None = None) -> SmoothnessReport:
    """Singular-locus emptiness of X3 over F_p, chart by chart.

    An empty singular locus mod p implies smoothness over Q: a singular
    point over an algebraic closure of Q spreads out over the integers and
    would meet the fibre at p.
    """
    if p < 5:
        raise ValueError("p must be at least 5")
    todo = [tuple(c) for c in (charts if charts is not None else combinations(range(DIM), 3))]
    args = [(c, p, budget) for c in todo]
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            results = pool.map(_certify_job, args)
    else:
        results = [_certify_job(a) for a in args]
    return SmoothnessReport(p, sorted(results, key=lambda r: r.chart))


def degeneracy_consistency(report: SmoothnessReport, n_points: int) -> str:
    """pass if no singular point comes from a 3-space degeneracy, i.e. X3 is certified smooth."""
    if report.verdict == "empty":
        return "pass"
    if report.verdict == "singular":
        return "fail"
    return "inconclusive"
