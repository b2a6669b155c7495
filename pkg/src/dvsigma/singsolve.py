"""The 55 points of P^9 where the 2-form sigma(v, -, -) has rank 4.

One seed point is solved on the hyperplane x0 + x1 + x2 + x3 + x4 = 0; the
Borel subgroup then produces the rest: R permutes coordinates and P scales
them by powers of zeta.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .field import CycloNum, ONE, ZERO, roots_of_unity_11, lift_residues, rational_reconstruct, zeta
from .grouprep import P_EXPONENTS_10, R_PERM
from .polysys import (GF, MPoly, QZeta, ResourceLimit, TermOrder, buchberger, dim_degree,
                      poly_rem_mod_p, solve_zero_dim, variables)
from .trivector import contract, pfaffian, rank_locus_ideal, sigma

log = logging.getLogger(__name__)

QUINTIC = (1, -4, 2, 5, -2, -1)  # 1 - 4X + 2X^2 + 5X^3 - 2X^4 - X^5
LIFT_PRIMES = (23, 67, 89, 199, 331, 353, 397, 419, 463, 617)


def seed_ratio() -> CycloNum:
    """x1/x0 at the seed point: zeta^7 + zeta^6 + zeta^5 + zeta^4."""
    return zeta(7) + zeta(6) + zeta(5) + zeta(4)


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple

    def __post_init__(self):
        coords = tuple(c if isinstance(c, CycloNum) else CycloNum([c]) for c in self.coords)
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        if lead != ONE:
            inv = lead.inverse()
            coords = tuple(c * inv for c in coords)
        object.__setattr__(self, "coords", coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coords)

    def reduce(self, p: int, root: int) -> tuple[int, ...]:
        """Normalized image in P^9(F_p) under zeta -> root."""
        vals = [_reduce(c, p, root) for c in self.coords]
        lead = next(v for v in vals if v)
        inv = pow(lead, -1, p)
        return tuple(v * inv % p for v in vals)

    def to_json(self):
        return [c.to_json() for c in self.coords]


def _reduce(c: CycloNum, p: int, root: int) -> int:
    if c.denominator % p == 0:
        raise ZeroDivisionError(f"denominator divisible by {p}")
    s = sum(n * pow(root, k, p) for k, n in enumerate(c.numerators))
    return s * pow(c.denominator, -1, p) % p


# ---------------------------------------------------------------------------
# seed point


@dataclass
class SeedResult:
    point: ProjPoint
    method: str  # "exact" or "modular"
    primes: tuple = ()
    checks: dict = field(default_factory=dict)


def hyperplane_system(field_=None, ratio=None) -> list[MPoly]:
    """Rank<=4 cubics with x0 = 1 and x1 = ratio, plus the hyperplane and the two fixings."""
    field_ = field_ or QZeta()
    ratio = seed_ratio() if ratio is None else ratio
    n = 10
    cubics = rank_locus_ideal(sigma(), 4, field_)
    x = variables(n, field_)
    one = field_.convert(1)
    subs = [f.substitute({0: one, 1: ratio}) for f in cubics]
    gens = [f for f in subs if not f.is_zero()]
    gens.append(x[2] + x[3] + x[4] + (ratio + one))
    gens.append(x[0] - one)
    gens.append(x[1] - ratio)
    return gens


def solve_seed_exact(budget: int | None) -> ProjPoint:
    gb = buchberger(hyperplane_system(), TermOrder.grevlex(10), budget)
    sols = solve_zero_dim(gb, budget)
    if len(sols.points) != 1:
        raise ArithmeticError(f"expected one solution, got {len(sols.points)}")
    return ProjPoint(sols.points[0])


def solve_seed_mod_p(p: int, budget: int | None = None) -> list[tuple[int, ...]]:
    """The seed point reduced by each of the ten maps zeta -> g, in roots_of_unity_11 order."""
    F = GF(p)
    cubics = rank_locus_ideal(sigma(), 4, F)
    x = variables(10, F)
    out = []
    for g in roots_of_unity_11(p):
        r = (g**7 + g**6 + g**5 + g**4) % p
        subs = [f.substitute({0: 1, 1: r}) for f in cubics]
        gens = [f for f in subs if not f.is_zero()] + [x[2] + x[3] + x[4] + (1 + r), x[0] - 1, x[1] - r]
        gb = buchberger(gens, TermOrder.grevlex(10), budget)
        sols = solve_zero_dim(gb, budget)
        if len(sols.points) != 1:
            raise ArithmeticError(f"mod {p}, root {g}: {len(sols.points)} solutions")
        out.append(tuple(sols.points[0]))
    return out


def _crt(res: Sequence[int], mods: Sequence[int]) -> tuple[int, int]:
    x, m = 0, 1
    for r, q in zip(res, mods):
        t = (r - x) * pow(m, -1, q) % q
        x, m = x + m * t, m * q
    return x % m, m


def lift_seed(primes: Sequence[int], budget: int | None = None) -> ProjPoint | None:
    """CRT-lift of the modular seed solutions; None when reconstruction fails."""
    per_prime = {p: solve_seed_mod_p(p, budget) for p in primes}
    coords = []
    for k in range(10):
        coeff_res = {p: lift_residues([pt[k] for pt in per_prime[p]], p) for p in primes}
        coeffs = []
        for i in range(10):
            a, m = _crt([coeff_res[p][i] for p in primes], primes)
            q = rational_reconstruct(a, m)
            if q is None:
                return None
            coeffs.append(q)
        coords.append(CycloNum(coeffs))
    return ProjPoint(coords)


def verify_seed(pt: ProjPoint) -> dict:
    """Exact checks on a candidate seed point."""
    s = sigma()
    m = contract(s, pt.coords, ZERO)
    rank = linalg.rank(m)
    cubics = rank_locus_ideal(s, 4, QZeta())
    vanish = all(f.evaluate(pt.coords) == ZERO for f in cubics)
    return {
        "x0": pt[0] == ONE,
        "ratio": pt[1] == seed_ratio(),
        "hyperplane": sum(pt.coords[:5], ZERO) == ZERO,
        "cubics_vanish": vanish,
        "rank": rank,
        "rank_is_4": rank == 4,
        "real": pt.is_real(),
    }


def seed_point(exact_budget: int | None = 500, primes: Sequence[int] = (23, 67),
               budget: int | None = None) -> SeedResult:
    """The seed p_{0,0}.

    Tries Buchberger over Q(zeta) within ``exact_budget`` reduction steps,
    then falls back to modular solves and a CRT lift, adding primes until
    the lift passes every exact check.
    """
    if exact_budget is not None and exact_budget > 0:
        try:
            pt = solve_seed_exact(exact_budget)
            checks = verify_seed(pt)
            if _seed_ok(checks):
                return SeedResult(pt, "exact", (), checks)
        except ResourceLimit:
            log.info("exact seed solve exceeded %s steps; using the modular path", exact_budget)
    used = list(primes)
    extra = [p for p in LIFT_PRIMES if p not in used]
    while True:
        pt = lift_seed(used, budget)
        if pt is not None:
            checks = verify_seed(pt)
            if _seed_ok(checks):
                return SeedResult(pt, "modular", tuple(used), checks)
        if not extra:
            raise ArithmeticError("modular lift did not stabilise")
        used.append(extra.pop(0))


def rank_loci(p: int = 23, budget: int | None = 10**6, bounds=(2, 4, 6)) -> dict:
    """Projective (dim, degree) of the rank <= 2, 4, 6 loci over F_p.

    The empty locus shows up as dimension -1 with the degree of the
    irrelevant ideal's Hilbert numerator, as in the usual convention.
    """
    out = {}
    for b in bounds:
        gb = buchberger(rank_locus_ideal(sigma(), b, GF(p)), TermOrder.grevlex(10), budget)
        out[b] = {"dim_degree": dim_degree(gb), "generators": len(gb),
                  "reductions": gb.stats.reductions}
    return out


def _seed_ok(checks: dict) -> bool:
    return all(v for k, v in checks.items() if k != "rank")


def quintic_check(p: int = 23, budget: int | None = None) -> dict:
    """Evidence that the quintic in X = x1/x0 divides the eliminant.

    Exactly: the quintic vanishes at zeta^7 + zeta^6 + zeta^5 + zeta^4.
    Mod p: each root of the quintic in F_p has a nonempty fiber (Groebner
    basis different from 1), so the eliminant vanishes at all of them; with
    distinct roots this is divisibility in F_p[X].
    """
    r = seed_ratio()
    val = ZERO
    for k, c in enumerate(QUINTIC):
        val = val + r**k * c
    roots = [X for X in range(p) if sum(c * pow(X, k, p) for k, c in enumerate(QUINTIC)) % p == 0]
    F = GF(p)
    cubics = rank_locus_ideal(sigma(), 4, F)
    x = variables(10, F)
    fibers = {}
    for X in range(p):
        subs = [f.substitute({0: 1, 1: X}) for f in cubics]
        gens = [f for f in subs if not f.is_zero()] + [x[2] + x[3] + x[4] + (1 + X), x[0] - 1, x[1] - X]
        gb = buchberger(gens, TermOrder.grevlex(10), budget)
        fibers[X] = not gb.is_unit()
    eliminant_roots = [X for X, nonempty in fibers.items() if nonempty]
    product_poly = [1]
    for X in eliminant_roots:
        product_poly = _mul_lin(product_poly, X, p)
    return {
        "exact_root": val == ZERO,
        "prime": p,
        "quintic_roots_mod_p": roots,
        "distinct_roots": len(roots) == 5,
        "fiber_nonempty_at_roots": all(fibers[X] for X in roots),
        "nonempty_fibers": eliminant_roots,
        "divides": len(roots) == 5 and all(fibers[X] for X in roots)
        and not poly_rem_mod_p(product_poly, QUINTIC, p),
    }


def _mul_lin(poly, root, p):
    out = [0] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i + 1] = (out[i + 1] + c) % p
        out[i] = (out[i] - root * c) % p
    return out


# ---------------------------------------------------------------------------
# the orbit


def apply_R(pt: ProjPoint) -> ProjPoint:
    """Coordinate permutation (01234)(56789)."""
    return ProjPoint(tuple(pt[R_PERM[i]] for i in range(10)))


def apply_P(pt: ProjPoint, j: int = 1) -> ProjPoint:
    """Scale x_i by zeta^(j t_i)."""
    return ProjPoint(tuple(c * zeta(j * t) if c else c for c, t in zip(pt.coords, P_EXPONENTS_10)))


def apply_matrix(m10, pt: ProjPoint) -> ProjPoint:
    """Point action p -> m10^T p.

    Forms transform by m10, so this is the action of g^-1 on points; the
    set of singular points is preserved by either.
    """
    out = []
    for i in range(10):
        s = ZERO
        for k in range(10):
            if m10[k][i] and pt[k]:
                s = s + m10[k][i] * pt[k]
        out.append(s)
    return ProjPoint(tuple(out))


@dataclass
class SingularSet:
    points: dict  # (i, j) -> ProjPoint

    def __len__(self):
        return len(self.points)

    def ordered(self) -> list[tuple[tuple[int, int], ProjPoint]]:
        return sorted(self.points.items())

    def index(self) -> dict:
        return {pt: key for key, pt in self.points.items()}

    def to_json(self):
        return [{"i": i, "j": j, "coords": pt.to_json()} for (i, j), pt in self.ordered()]


def generate_orbit(seed: ProjPoint) -> SingularSet:
    pts = {}
    row = seed
    for i in range(5):
        for j in range(11):
            pts[(i, j)] = apply_P(row, j)
        row = apply_R(row)
    if len(set(pts.values())) != 55:
        raise ArithmeticError("duplicate points in the orbit")
    return SingularSet(pts)


def pf4_nonzero(m) -> bool:
    """Some 4x4 principal sub-Pfaffian is nonzero, i.e. rank > 2."""
    from itertools import combinations
    for rows in combinations(range(len(m)), 4):
        if pfaffian(m, rows):
            return True
    return False


@dataclass
class OrbitReport:
    count: int
    distinct: bool
    ranks: list
    all_rank_4: bool
    rank2_fails_everywhere: bool
    real_points: list
    real_pattern_ok: bool
    distinct_mod_23: bool
    P_cycles_rows: bool
    R_permutes_rows: bool


def check_orbit(S: SingularSet) -> OrbitReport:
    s = sigma()
    ranks, rank2_fail = [], True
    for key, pt in S.ordered():
        m = contract(s, pt.coords, ZERO)
        ranks.append(linalg.rank(m))
        if not pf4_nonzero(m):
            rank2_fail = False
    real = [key for key, pt in S.ordered() if pt.is_real()]
    mod23 = {pt.reduce(23, 2) for pt in S.points.values()}
    idx = S.index()
    p_ok = all(idx.get(apply_P(S.points[(i, j)])) == (i, (j + 1) % 11) for i in range(5) for j in range(11))
    r_rows = [idx.get(apply_R(S.points[(i, 0)])) for i in range(5)]
    return OrbitReport(
        count=len(S),
        distinct=len(set(S.points.values())) == len(S),
        ranks=ranks,
        all_rank_4=all(r == 4 for r in ranks),
        rank2_fails_everywhere=rank2_fail,
        real_points=real,
        real_pattern_ok=sorted(real) == [(i, 0) for i in range(5)],
        distinct_mod_23=len(mod23) == 55,
        P_cycles_rows=p_ok,
        R_permutes_rows=r_rows == [((i + 1) % 5, 0) for i in range(5)],
    )


def full_group_closure(S: SingularSet, m10) -> bool:
    """True iff the point action of m10 maps the 55-point set to itself."""
    pts = set(S.points.values())
    return all(apply_matrix(m10, pt) in pts for pt in pts)


def point_permutation(S: SingularSet, m10) -> list[int]:
    """Permutation of the ordered points induced by m10 (as positions)."""
    order = [key for key, _ in S.ordered()]
    pos = {S.points[k]: n for n, k in enumerate(order)}
    return [pos[apply_matrix(m10, S.points[k])] for k in order]


def stabilizer_order(S: SingularSet, group, key=(0, 0)) -> int:
    pt = S.points[key]
    return sum(1 for g in group.elements if apply_matrix(g.mat10, pt) == pt)
