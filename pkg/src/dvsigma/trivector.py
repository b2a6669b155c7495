"""Alternating 3-forms on a 10-dimensional space.

A trivector stores coefficients on sorted index triples only; the sign of a
listed triple such as ``[308]`` is folded into the coefficient of ``(0,3,8)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import linalg
from .polysys import MPoly

DIM = 10

SIGMA_TRIPLES = (
    (0, 2, 5), (1, 3, 6), (2, 4, 7), (3, 0, 8), (4, 1, 9),
    (0, 9, 7), (1, 5, 8), (2, 6, 9), (3, 7, 5), (4, 8, 6),
)
# the two B-invariant pieces, in y_ij notation rewritten in the x basis
SIGMA1_TRIPLES = ((0, 2, 5), (1, 3, 6), (2, 4, 7), (3, 0, 8), (4, 1, 9))
SIGMA2_TRIPLES = ((0, 9, 7), (1, 5, 8), (2, 6, 9), (3, 7, 5), (4, 8, 6))


def perm_sign(seq: Sequence[int]) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True)
class Trivector:
    coeffs: dict  # sorted triple -> nonzero coefficient
    dim: int = DIM

    def __getitem__(self, triple):
        if len(set(triple)) < 3:
            return 0
        s = tuple(sorted(triple))
        c = self.coeffs.get(s, 0)
        return c if perm_sign(triple) > 0 else -c

    def support(self):
        return sorted(self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return Trivector({k: v for k, v in out.items() if v}, self.dim)

    def scale(self, c):
        return Trivector({k: c * v for k, v in self.coeffs.items() if c * v}, self.dim)

    def __eq__(self, other):
        if not isinstance(other, Trivector):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0) for k in keys)

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs)))

    def __call__(self, u, v, w):
        """t(u, v, w) for vectors given in the dual basis e_0..e_9."""
        total = 0
        for (i, j, k), c in self.coeffs.items():
            d = (u[i] * (v[j] * w[k] - v[k] * w[j])
                 - u[j] * (v[i] * w[k] - v[k] * w[i])
                 + u[k] * (v[i] * w[j] - v[j] * w[i]))
            if d:
                total = total + c * d
        return total

    def as_vector(self, index=None):
        index = index or triple_index()
        vec = [0] * len(index)
        for t, c in self.coeffs.items():
            vec[index[t]] = c
        return vec

    @classmethod
    def from_vector(cls, vec, dim=DIM):
        triples = list(combinations(range(dim), 3))
        return cls({t: c for t, c in zip(triples, vec) if c}, dim)

    def to_json(self):
        return [[list(t), _json_coeff(c)] for t, c in sorted(self.coeffs.items())]


def _json_coeff(c):
    if hasattr(c, "to_json"):
        return c.to_json()
    return str(c)


def triple_index(dim=DIM):
    return {t: i for i, t in enumerate(combinations(range(dim), 3))}


def build_sigma(components=SIGMA_TRIPLES, dim=DIM) -> Trivector:
    """Sum of the listed x_i ^ x_j ^ x_k with coefficient +1 in the listed order."""
    coeffs = {}
    for tri in components:
        if len(set(tri)) != 3:
            raise ValueError(f"repeated index in {tri}")
        if not all(0 <= i < dim for i in tri):
            raise ValueError(f"index out of range in {tri}")
        key = tuple(sorted(tri))
        coeffs[key] = coeffs.get(key, 0) + perm_sign(tri)
    return Trivector({k: v for k, v in coeffs.items() if v}, dim)


def sigma() -> Trivector:
    return build_sigma(SIGMA_TRIPLES)


def sigma1() -> Trivector:
    return build_sigma(SIGMA1_TRIPLES)


def sigma2() -> Trivector:
    return build_sigma(SIGMA2_TRIPLES)


# ---------------------------------------------------------------------------
# skew matrices


def contract(t: Trivector, v: Sequence, zero=0) -> list[list]:
    """Skew matrix M with M[i][j] = t(v, e_i, e_j)."""
    n = t.dim
    m = [[zero] * n for _ in range(n)]
    for (i, j, k), c in t.coeffs.items():
        # t(v, e_a, e_b) collects the coordinate of v on the third index
        for a, b, x in ((j, k, i), (k, i, j), (i, j, k)):
            if v[x]:
                val = c * v[x]
                m[a][b] = m[a][b] + val
                m[b][a] = m[b][a] - val
    return m


def pair_form(t: Trivector, u: Sequence, v: Sequence, zero=0) -> list:
    """The linear form t(u, v, -) as a coefficient vector."""
    m = contract(t, u, zero)
    n = t.dim
    out = []
    for k in range(n):
        s = zero
        for j in range(n):
            if v[j] and m[j][k]:
                s = s + v[j] * m[j][k]
        out.append(s)
    return out


def symbolic_skew(t: Trivector, field=None) -> list[list[MPoly]]:
    """The 10x10 skew matrix of linear forms f_ij = t(e_i, e_j, -)."""
    n = t.dim
    zero = MPoly(n, {}, field)
    m = [[zero] * n for _ in range(n)]
    for (i, j, k), c in t.coeffs.items():
        for a, b, x in ((i, j, k), (j, k, i), (k, i, j)):
            lin = MPoly.var(x, n, field) * c
            m[a][b] = m[a][b] + lin
            m[b][a] = m[b][a] - lin
    return m


def pfaffian(a, rows: Sequence[int] | None = None, memo: dict | None = None):
    """Pfaffian of the principal submatrix on ``rows``, by first-row expansion."""
    rows = tuple(range(len(a))) if rows is None else tuple(rows)
    if len(rows) % 2:
        raise ValueError("Pfaffian needs an even number of rows")
    memo = {} if memo is None else memo
    return _pf(a, rows, memo)


def _pf(a, rows, memo):
    if not rows:
        return 1
    hit = memo.get(rows)
    if hit is not None:
        return hit
    i = rows[0]
    total = None
    for pos in range(1, len(rows)):
        j = rows[pos]
        if not a[i][j]:
            continue
        rest = rows[1:pos] + rows[pos + 1:]
        sub = _pf(a, rest, memo)
        if isinstance(sub, int) and sub == 0:
            continue
        term = a[i][j] * sub
        if pos % 2 == 0:
            term = -term
        total = term if total is None else total + term
    if total is None:
        total = a[i][rows[1]] * 0
    memo[rows] = total
    return total


def skew_rank(a, p: int = 0) -> int:
    r = linalg.rank(a, p)
    if r % 2:
        raise ArithmeticError(f"skew matrix of odd rank {r}")
    return r


def rank_locus_ideal(t: Trivector, bound: int, field=None) -> list[MPoly]:
    """All (bound+2)x(bound+2) principal sub-Pfaffians of the symbolic skew matrix."""
    if bound not in (2, 4, 6):
        raise ValueError("bound must be 2, 4 or 6")
    m = symbolic_skew(t, field)
    memo = {}
    out = []
    for rows in combinations(range(t.dim), bound + 2):
        pf = pfaffian(m, rows, memo)
        if isinstance(pf, int):
            pf = MPoly(t.dim, {}, field)
        out.append(pf)
    return out


# ---------------------------------------------------------------------------
# subspaces and group action


def restrict_vanishes(t: Trivector, basis: Sequence[Sequence], p: int = 0) -> bool:
    """True iff t vanishes on every triple of vectors from the (independent) basis."""
    if len(basis) < 3:
        raise ValueError("need at least 3 basis vectors")
    if linalg.rank(basis, p) != len(basis):
        raise ValueError("basis vectors are linearly dependent")
    for u, v, w in combinations(basis, 3):
        val = t(u, v, w)
        if (val % p if p else val):
            return False
    return True


def minor3(g, rows, cols):
    (a, b, c), (x, y, z) = rows, cols
    return (g[a][x] * (g[b][y] * g[c][z] - g[b][z] * g[c][y])
            - g[a][y] * (g[b][x] * g[c][z] - g[b][z] * g[c][x])
            + g[a][z] * (g[b][x] * g[c][y] - g[b][y] * g[c][x]))


def act(g10, t: Trivector, check: bool = True, p: int = 0) -> Trivector:
    """Push t forward by the linear map whose matrix on the coordinates x_i is g10.

    x_a is sent to sum_i g10[i][a] x_i; the induced map on 3-forms is the third
    exterior power.  For forms on the dual space this is the pullback by g^-1.
    """
    if check and linalg.rank(g10, p) != len(g10):
        raise ValueError("singular matrix")
    out = {}
    for rows in combinations(range(t.dim), 3):
        s = 0
        for cols, c in t.coeffs.items():
            m = minor3(g10, rows, cols)
            if m:
                s = s + c * m
        if p:
            s %= p
        if s:
            out[rows] = s
    return Trivector(out, t.dim)


def lambda3_matrix(g10, p: int = 0):
    """Matrix of the third exterior power on the sorted-triple basis."""
    triples = list(combinations(range(len(g10)), 3))
    return [[(minor3(g10, r, c) % p if p else minor3(g10, r, c)) for c in triples] for r in triples]
