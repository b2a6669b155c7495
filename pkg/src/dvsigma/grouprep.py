"""The group PSL(2, F_11), its 5-dimensional representation rho, the
10-dimensional representation Lambda^2 rho, conjugacy classes and characters.

The 2x2 model is exact arithmetic mod 11 with matrices identified up to sign.
The 5x5 and 10x10 images are matrices of CycloNums.  rho(P) and rho(R) are
fixed in the eigenbasis of P; rho(a) is solved from its defining relations.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .field import CycloNum, ONE, ZERO, gauss_sum, zeta
from .polysys import MPoly, QZeta, TermOrder, buchberger, solve_zero_dim, variables
from .trivector import Trivector, act

log = logging.getLogger(__name__)

GROUP_ORDER = 660
MOD = 11

# eigenvalue exponents of rho(P) on y_0..y_4
P_EXPONENTS_5 = (1, 9, 4, 3, 5)
# the basis x_0..x_9 of Lambda^2 V_5^dual, written as pairs y_i ^ y_j
PAIRS = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3), (2, 4), (3, 0), (4, 1))
# eigenvalue exponents of Lambda^2 rho(P) on x_0..x_9
P_EXPONENTS_10 = (10, 2, 7, 8, 6, 5, 1, 9, 4, 3)
# Lambda^2 rho(R) sends x_i to x_{R_PERM[i]}
R_PERM = (1, 2, 3, 4, 0, 6, 7, 8, 9, 5)

WORD_P = "ab"
WORD_R = "bbabababbabababb"


# ---------------------------------------------------------------------------
# 2x2 model


def psl(a, b, c, d) -> tuple[int, int, int, int]:
    """Normalize a matrix of SL(2, F_11) modulo +-1."""
    m = (a % MOD, b % MOD, c % MOD, d % MOD)
    if (m[0] * m[3] - m[1] * m[2]) % MOD != 1:
        raise ValueError(f"{m} is not in SL(2, F_11)")
    lead = next(v for v in m if v)
    if lead > MOD // 2:
        m = tuple((-v) % MOD for v in m)
    return m


def psl_mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return psl(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def psl_inv(x):
    a, b, c, d = x
    return psl(d, -b, -c, a)


PSL_ID = psl(1, 0, 0, 1)
A2 = psl(0, -1, 1, 0)
B2 = psl(0, 1, -1, -1)
P2 = psl(1, 1, 0, 1)
R2 = psl(4, 0, 0, 3)
GENS2 = {"a": A2, "b": B2}


def word_to_mat2(word: str):
    m = PSL_ID
    for ch in word:
        m = psl_mul(m, GENS2[ch])
    return m


def psl_order(x) -> int:
    k, y = 1, x
    while y != PSL_ID:
        y = psl_mul(y, x)
        k += 1
    return k


def psl_pow(x, k):
    out = PSL_ID
    for _ in range(k % psl_order(x)):
        out = psl_mul(out, x)
    return out


def commutator(x, y):
    return psl_mul(psl_mul(psl_inv(x), psl_inv(y)), psl_mul(x, y))


# ---------------------------------------------------------------------------
# matrices over Q(zeta)


def mat_mul(x, y):
    return linalg.matmul(x, y)


def mat_eye(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_pow(x, k):
    out = mat_eye(len(x))
    for _ in range(k):
        out = mat_mul(out, x)
    return out


def mat_eq(x, y):
    return all(a == b for ra, rb in zip(x, y) for a, b in zip(ra, rb))


def mat_inv(x):
    return linalg.inverse(x, one=ONE, zero=ZERO)


def lambda2(m5):
    """Matrix of Lambda^2 of m5 in the basis x_k = y_i ^ y_j of PAIRS."""
    out = [[ZERO] * 10 for _ in range(10)]
    for col, (i, j) in enumerate(PAIRS):
        for row, (k, l) in enumerate(PAIRS):
            v = m5[k][i] * m5[l][j] - m5[l][i] * m5[k][j]
            out[row][col] = v
    return out


def trace(m):
    t = ZERO
    for i in range(len(m)):
        t = t + m[i][i]
    return t


def rho_P():
    return [[zeta(P_EXPONENTS_5[i]) if i == j else ZERO for j in range(5)] for i in range(5)]


def rho_R():
    # R y_j = y_{j+1}
    return [[ONE if i == (j + 1) % 5 else ZERO for j in range(5)] for i in range(5)]


@dataclass
class GroupElem:
    word: str
    mat2: tuple
    mat5: list = None
    _mat10: list = field(default=None, repr=False)

    @property
    def mat10(self):
        if self._mat10 is None and self.mat5 is not None:
            self._mat10 = lambda2(self.mat5)
        return self._mat10

    def order(self) -> int:
        return psl_order(self.mat2)


def build_borel() -> tuple[GroupElem, GroupElem]:
    """P (order 11) and R (order 5) with the matrices of the eigenbasis of P."""
    P = GroupElem(WORD_P, word_to_mat2(WORD_P), rho_P())
    R = GroupElem(WORD_R, word_to_mat2(WORD_R), rho_R())
    if P.mat2 != P2 or R.mat2 != R2:
        raise AssertionError("words for P and R do not match the 2x2 model")
    return P, R


# ---------------------------------------------------------------------------
# solving for rho(a)


def hankel(c):
    return [[c[(j + k) % 5] for k in range(5)] for j in range(5)]


def _relation_ideal():
    """Polynomial system in c_0..c_4 for A = hankel(c): A^2 = 1 and (A rho(P))^3 = 1."""
    F = QZeta()
    c = variables(5, F)
    zero = MPoly(5, {}, F)
    A = hankel(c)
    P = [[MPoly.const(v, 5, F) for v in row] for row in rho_P()]

    def mm(X, Y):
        return [[sum((X[i][k] * Y[k][j] for k in range(5)), zero) for j in range(5)] for i in range(5)]

    eye = [[MPoly.const(1 if i == j else 0, 5, F) for j in range(5)] for i in range(5)]
    A2m = mm(A, A)
    AP = mm(A, P)
    B3 = mm(mm(AP, AP), AP)
    gens = [A2m[i][j] - eye[i][j] for i in range(5) for j in range(5)]
    gens += [B3[i][j] - eye[i][j] for i in range(5) for j in range(5)]
    return [g for g in gens if not g.is_zero()]


def check_presentation_5(A, B) -> dict:
    """The four defining relations in the 5x5 model."""
    I = mat_eye(5)
    AB = mat_mul(A, B)
    babab = mat_mul(mat_mul(mat_mul(mat_mul(B, A), B), A), B)
    Ai, Xi = mat_inv(A), mat_inv(babab)
    comm = mat_mul(mat_mul(Ai, Xi), mat_mul(A, babab))
    return {
        "a^2": mat_eq(mat_mul(A, A), I),
        "b^3": mat_eq(mat_pow(B, 3), I),
        "(ab)^11": mat_eq(mat_pow(AB, 11), I),
        "[a,babab]^2": mat_eq(mat_mul(comm, comm), I),
    }


def check_presentation_2() -> dict:
    a, b = A2, B2
    babab = word_to_mat2("babab")
    c = commutator(a, babab)
    return {
        "a^2": psl_mul(a, a) == PSL_ID,
        "b^3": psl_pow(b, 3) == PSL_ID,
        "(ab)^11": psl_pow(psl_mul(a, b), 11) == PSL_ID,
        "[a,babab]^2": psl_mul(c, c) == PSL_ID,
    }


def klein_cubic():
    F = QZeta()
    y = variables(5, F)
    return sum((y[i] * y[i] * y[(i + 1) % 5] for i in range(5)), MPoly(5, {}, F))


def transform_form(f: MPoly, m5) -> MPoly:
    """Substitute y_j -> sum_i m5[i][j] y_i."""
    F = f.field
    y = variables(5, F)
    images = [sum((y[i] * m5[i][j] for i in range(5) if m5[i][j]), MPoly(5, {}, F)) for j in range(5)]
    out = MPoly(5, {}, F)
    for e, c in f.terms.items():
        term = MPoly.const(c, 5, F)
        for j, k in enumerate(e):
            for _ in range(k):
                term = term * images[j]
        out = out + term
    return out


@dataclass
class GeneratorSolution:
    a: GroupElem
    b: GroupElem
    solutions_found: int
    relations_5x5: dict
    relations_2x2: dict
    conjugation_ok: bool
    klein_invariant: bool
    first_entry_real_part_positive: bool
    groebner_stats: dict


def solve_generator_a(budget: int | None = 10**6) -> GeneratorSolution:
    """Solve for rho(a) from A rho(R) = rho(R)^-1 A, A^2 = 1, (A rho(P))^3 = 1.

    The first condition forces A[j][k] = c[(j+k) % 5]; the remaining ones are
    solved with Buchberger over Q(zeta).
    """
    gens = _relation_ideal()
    gb = buchberger(gens, TermOrder.grevlex(5), budget)
    sols = solve_zero_dim(gb, budget)
    if not sols.points:
        raise RuntimeError("no solution for rho(a): check rho(P), rho(R)")
    survivors = []
    P, R = build_borel()
    for pt in sols.points:
        A = hankel(list(pt))
        B = mat_mul(mat_inv(A), P.mat5)
        rel = check_presentation_5(A, B)
        if all(rel.values()):
            survivors.append((A, B, rel))
    if not survivors:
        raise RuntimeError("no solution passes the presentation relations")
    if len(survivors) > 1:
        log.warning("%d inequivalent solutions for rho(a) survive", len(survivors))
    A, B, rel = survivors[0]
    Rm = R.mat5
    conj_ok = mat_eq(mat_mul(A, Rm), mat_mul(mat_inv(Rm), A))
    cubic = klein_cubic()
    klein_ok = transform_form(cubic, A) == cubic
    first = next(v for row in A for v in row if v)
    a = GroupElem("a", A2, A)
    b = GroupElem("b", B2, B)
    return GeneratorSolution(
        a=a,
        b=b,
        solutions_found=len(survivors),
        relations_5x5=rel,
        relations_2x2=check_presentation_2(),
        conjugation_ok=conj_ok,
        klein_invariant=klein_ok,
        first_entry_real_part_positive=first.complex().real > 0,
        groebner_stats={"pairs": gb.stats.pairs_processed, "reductions": gb.stats.reductions},
    )


# ---------------------------------------------------------------------------
# the whole group


@dataclass
class Group:
    elements: list  # GroupElem, in BFS order, identity first
    index: dict  # mat2 -> position
    classes: list  # list of lists of positions, in CLASS_REPS order
    homomorphism_checked: bool

    def __len__(self):
        return len(self.elements)

    def element(self, mat2) -> GroupElem:
        return self.elements[self.index[mat2]]

    def class_of(self, mat2) -> int:
        pos = self.index[mat2]
        for ci, members in enumerate(self.classes):
            if pos in members:
                return ci
        raise KeyError(mat2)

    def representatives(self) -> list[GroupElem]:
        return [self.element(rep) for rep in CLASS_REPS]


CLASS_REPS = (
    psl(1, 0, 0, 1),
    psl(1, 1, 0, 1),
    psl(1, 2, 0, 1),
    psl(0, -1, 1, 0),
    psl(0, 1, -1, -1),
    psl(2, -2, 2, 4),
    psl(4, 0, 0, 3),
    psl(5, 0, 0, 9),
)
CLASS_SIZES = (1, 60, 60, 55, 110, 110, 132, 132)
CLASS_ORDERS = (1, 11, 11, 2, 3, 6, 5, 5)


def enumerate_group(a: GroupElem | None = None, b: GroupElem | None = None,
                    with_matrices: bool = True, verify: bool = True) -> Group:
    """Breadth-first closure over {a, b}; words, 5x5 images and conjugacy classes."""
    if with_matrices and (a is None or b is None):
        sol = solve_generator_a()
        a, b = sol.a, sol.b
    gens = [("a", A2, a.mat5 if with_matrices else None), ("b", B2, b.mat5 if with_matrices else None)]
    ident = GroupElem("", PSL_ID, mat_eye(5) if with_matrices else None)
    elements = [ident]
    index = {PSL_ID: 0}
    queue = deque([0])
    checked = True
    while queue:
        g = elements[queue.popleft()]
        for name, m2, m5 in gens:
            h2 = psl_mul(g.mat2, m2)
            h5 = mat_mul(g.mat5, m5) if with_matrices else None
            if h2 in index:
                if verify and with_matrices and not mat_eq(elements[index[h2]].mat5, h5):
                    checked = False
                continue
            if len(elements) >= GROUP_ORDER:
                raise RuntimeError("closure exceeds 660 elements")
            index[h2] = len(elements)
            elements.append(GroupElem(g.word + name, h2, h5))
            queue.append(index[h2])
    classes = conjugacy_classes([e.mat2 for e in elements], index)
    return Group(elements, index, classes, checked and verify and with_matrices)


def conjugacy_classes(mats, index) -> list[list[int]]:
    seen = {}
    raw = []
    for x in mats:
        if x in seen:
            continue
        cls = {psl_mul(psl_mul(g, x), psl_inv(g)) for g in mats}
        for y in cls:
            seen[y] = len(raw)
        raw.append(sorted(index[y] for y in cls))
    ordered = []
    for rep in CLASS_REPS:
        ordered.append(raw[seen[rep]])
    if len(raw) != len(CLASS_REPS):
        raise AssertionError(f"found {len(raw)} classes, expected 8")
    return ordered


def power_map(k: int) -> list[int]:
    """Column index of the class of g^k for g in each class."""
    out = []
    for rep in CLASS_REPS:
        y = psl_pow(rep, k)
        out.append(_class_index_2x2(y))
    return out


_CLASS_CACHE: dict = {}


def _class_index_2x2(x) -> int:
    if not _CLASS_CACHE:
        grp = enumerate_group(with_matrices=False)
        for ci, members in enumerate(grp.classes):
            for pos in members:
                _CLASS_CACHE[grp.elements[pos].mat2] = ci
    return _CLASS_CACHE[x]


# ---------------------------------------------------------------------------
# invariant trivectors


def invariant_trivectors(mats10: Sequence, start: Sequence[Trivector] | None = None) -> list[Trivector]:
    """Exact basis of {t : act(g, t) = t for all g} inside Lambda^3 of the dual.

    Intersects fixed spaces generator by generator, so only the first
    generator sees the full 120-dimensional space.
    """
    triples = list(combinations(range(10), 3))
    if start is None:
        basis = [Trivector({t: ONE}) for t in triples]
    else:
        basis = list(start)
    for g in mats10:
        if not basis:
            break
        cols = []
        for t in basis:
            moved = act(g, t, check=False)
            cols.append([moved.coeffs.get(tr, ZERO) - t.coeffs.get(tr, ZERO) for tr in triples])
        rows = [list(r) for r in zip(*cols)]
        rows = [r for r in rows if any(r)]
        null = linalg.nullspace(rows, len(basis), one=ONE, zero=ZERO)
        new = []
        for vec in null:
            acc = {}
            for coef, t in zip(vec, basis):
                if coef:
                    for k, v in t.coeffs.items():
                        acc[k] = acc.get(k, ZERO) + coef * v
            new.append(Trivector({k: v for k, v in acc.items() if v}))
        basis = new
    return basis


def span_rank(trivectors: Sequence[Trivector]) -> int:
    triples = list(combinations(range(10), 3))
    rows = [[CycloNum([t.coeffs.get(tr, 0)]) if not isinstance(t.coeffs.get(tr, 0), CycloNum)
             else t.coeffs.get(tr) for tr in triples] for t in trivectors]
    return linalg.rank(rows)


def same_span(a: Sequence[Trivector], b: Sequence[Trivector]) -> bool:
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(list(a) + list(b))


# ---------------------------------------------------------------------------
# characters


class QuadNum:
    """Element of Q(sqrt(-11), sqrt(5)): a + b*s + c*t + d*s*t with s^2 = -11, t^2 = 5."""

    __slots__ = ("v",)

    def __init__(self, a=0, b=0, c=0, d=0):
        self.v = tuple(Fraction(x) for x in (a, b, c, d))

    @classmethod
    def of(cls, x) -> "QuadNum":
        if isinstance(x, QuadNum):
            return x
        if isinstance(x, CycloNum):
            return cls.from_cyclo(x)
        return cls(x)

    @classmethod
    def from_cyclo(cls, x: CycloNum) -> "QuadNum":
        """Write x in Q(sqrt(-11)) using sqrt(-11) = Gauss sum; x must lie there."""
        squares = {(t * t) % 11 for t in range(1, 11)}
        if any(x.galois(k) != x for k in squares):
            raise ValueError(f"{x} does not lie in Q(sqrt(-11))")
        g = gauss_sum()
        a = (x + x.galois(2)) / 2
        b = (x - a) / g
        return cls(a.rational(), b.rational())

    def __add__(self, o):
        o = QuadNum.of(o)
        return QuadNum(*(x + y for x, y in zip(self.v, o.v)))

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(*(-x for x in self.v))

    def __sub__(self, o):
        return self + (-QuadNum.of(o))

    def __rsub__(self, o):
        return QuadNum.of(o) - self

    def __mul__(self, o):
        o = QuadNum.of(o)
        a, b, c, d = self.v
        e, f, g, h = o.v
        # s^2 = -11, t^2 = 5, (st)^2 = -55
        return QuadNum(
            a * e - 11 * b * f + 5 * c * g - 55 * d * h,
            a * f + b * e + 5 * (c * h + d * g),
            a * g + c * e - 11 * (b * h + d * f),
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def __truediv__(self, o):
        if isinstance(o, (int, Fraction)):
            return QuadNum(*(x / o for x in self.v))
        raise TypeError("only division by rationals is supported")

    def conjugate(self):
        a, b, c, d = self.v
        return QuadNum(a, -b, c, -d)

    def __eq__(self, o):
        if isinstance(o, (int, Fraction, CycloNum, QuadNum)):
            return self.v == QuadNum.of(o).v
        return NotImplemented

    def __hash__(self):
        return hash(self.v)

    def is_rational(self):
        return not any(self.v[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.v[0]

    def __repr__(self):
        names = ("", "*sqrt(-11)", "*sqrt(5)", "*sqrt(-55)")
        parts = [f"{x}{n}" for x, n in zip(self.v, names) if x]
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return [str(x) for x in self.v]


def _q(a=0, b=0, c=0):
    return QuadNum(a, b, c)


HALF = Fraction(1, 2)
IRREDUCIBLE_NAMES = ("C", "V5", "V5dual", "V10", "V10'", "V11", "V12", "V12'")
# rows of the character table, columns in CLASS_REPS order
CHARACTER_TABLE = {
    "C": [_q(1)] * 8,
    "V5": [_q(5), _q(-HALF, HALF), _q(-HALF, -HALF), _q(1), _q(-1), _q(1), _q(0), _q(0)],
    "V5dual": [_q(5), _q(-HALF, -HALF), _q(-HALF, HALF), _q(1), _q(-1), _q(1), _q(0), _q(0)],
    "V10": [_q(10), _q(-1), _q(-1), _q(-2), _q(1), _q(1), _q(0), _q(0)],
    "V10'": [_q(10), _q(-1), _q(-1), _q(2), _q(1), _q(-1), _q(0), _q(0)],
    "V11": [_q(11), _q(0), _q(0), _q(-1), _q(-1), _q(-1), _q(1), _q(1)],
    "V12": [_q(12), _q(1), _q(1), _q(0), _q(0), _q(0), _q(-HALF, 0, HALF), _q(-HALF, 0, -HALF)],
    "V12'": [_q(12), _q(1), _q(1), _q(0), _q(0), _q(0), _q(-HALF, 0, -HALF), _q(-HALF, 0, HALF)],
}
LAMBDA3_ROW = [_q(120), _q(-1), _q(-1), _q(8), _q(3), _q(-1), _q(0), _q(0)]


@dataclass
class CharacterTable:
    reps: tuple = CLASS_REPS
    sizes: tuple = CLASS_SIZES
    orders: tuple = CLASS_ORDERS
    rows: dict = field(default_factory=lambda: dict(CHARACTER_TABLE))

    def inner(self, chi, psi) -> QuadNum:
        total = QuadNum()
        for size, x, y in zip(self.sizes, chi, psi):
            total = total + QuadNum.of(x) * QuadNum.of(y).conjugate() * size
        return total / GROUP_ORDER

    def orthogonality(self) -> dict:
        out = {}
        for n1 in IRREDUCIBLE_NAMES:
            for n2 in IRREDUCIBLE_NAMES:
                out[(n1, n2)] = self.inner(self.rows[n1], self.rows[n2])
        return out

    def is_orthonormal(self) -> bool:
        return all(v == (1 if n1 == n2 else 0) for (n1, n2), v in self.orthogonality().items())

    def dimensions(self):
        return tuple(int(self.rows[n][0].rational()) for n in IRREDUCIBLE_NAMES)


def lambda3_character(chi: Sequence, pm2: Sequence[int] | None = None, pm3: Sequence[int] | None = None):
    """(chi(g)^3 - 3 chi(g) chi(g^2) + 2 chi(g^3)) / 6 class by class."""
    pm2 = power_map(2) if pm2 is None else pm2
    pm3 = power_map(3) if pm3 is None else pm3
    chi = [QuadNum.of(x) for x in chi]
    out = []
    for c in range(len(chi)):
        x = chi[c]
        out.append((x * x * x - 3 * x * chi[pm2[c]] + 2 * chi[pm3[c]]) / 6)
    return out


def decompose(chi: Sequence, table: CharacterTable | None = None) -> dict:
    """Multiplicities of the irreducibles in chi; raises if not a genuine character."""
    table = table or CharacterTable()
    mult = {}
    for name in IRREDUCIBLE_NAMES:
        ip = table.inner(chi, table.rows[name])
        if not ip.is_rational() or ip.rational().denominator != 1 or ip.rational() < 0:
            raise ValueError(f"inner product with {name} is {ip}: not a character")
        mult[name] = int(ip.rational())
    recon = [QuadNum() for _ in range(8)]
    for name, m in mult.items():
        recon = [r + v * m for r, v in zip(recon, table.rows[name])]
    if any(r != QuadNum.of(x) for r, x in zip(recon, chi)):
        raise ValueError("reconstruction from multiplicities failed")
    return mult


def character_of(group: Group, dim: int = 10) -> list[CycloNum]:
    """Traces of the 5x5 or 10x10 images at the class representatives."""
    out = []
    for rep in group.representatives():
        out.append(trace(rep.mat5 if dim == 5 else rep.mat10))
    return out
