"""Integral lattices given by Gram matrices.

Covers the divisor Gram matrix of the 55 singular points, the Picard
lattice and the complement of the polarization, discriminant forms, the
isometry group of a definite lattice, small even lattices, and the
criteria that decide when an even indefinite lattice is determined by its
discriminant form.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp

from .field import ZERO
from .polysys import ResourceLimit
from .trivector import pair_form, sigma

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# exact integer matrix helpers


def det_int(a) -> int:
    """Bareiss fraction-free determinant."""
    m = [list(map(int, r)) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse_q(a) -> list[list[Fraction]]:
    n = len(a)
    aug = [[Fraction(v) for v in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [v * inv for v in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [r[n:] for r in aug]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(r, v)) for r in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(r, c)) for c in bt] for r in a]


def signature(gram) -> tuple[int, int, int]:
    """(positive, negative, zero) inertia, by exact symmetric elimination."""
    m = [[Fraction(v) for v in r] for r in gram]
    pos = neg = 0
    while m:
        n = len(m)
        piv = next((i for i in range(n) if m[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(n) for j in range(n) if m[i][j]), None)
            if pair is None:
                return pos, neg, n
            i, j = pair
            # replace e_i by e_i + e_j: the new diagonal entry is 2 m[i][j]
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            piv = i
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in range(n) if k != piv]
        m = [[m[a][b] - m[a][piv] * m[piv][b] / d for b in rest] for a in rest]
    return pos, neg, 0


def kernel_basis(w: Sequence[int]) -> tuple[list[list[int]], list[list[int]]]:
    """Basis of {x in Z^n : w.x = 0} and a left inverse.

    Column operations with extended gcd give a unimodular V with w V = (g, 0, .., 0);
    the last n-1 columns of V span the kernel and rows 1.. of V^-1 invert them.
    """
    n = len(w)
    row = list(map(int, w))
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_op(i, j, a, b, c, d):
        # (col_i, col_j) <- (a col_i + c col_j, b col_i + d col_j), det = ad - bc = +-1
        for r in range(n):
            x, y = V[r][i], V[r][j]
            V[r][i], V[r][j] = a * x + c * y, b * x + d * y
        det = a * d - b * c
        ia, ib, ic, id_ = d * det, -b * det, -c * det, a * det
        for cidx in range(n):
            x, y = Vinv[i][cidx], Vinv[j][cidx]
            Vinv[i][cidx], Vinv[j][cidx] = ia * x + ib * y, ic * x + id_ * y
        x, y = row[i], row[j]
        row[i], row[j] = a * x + c * y, b * x + d * y

    for j in range(1, n):
        if row[j] == 0:
            continue
        if row[0] == 0:
            col_op(0, j, 0, 1, 1, 0)
            continue
        g, s, t = _egcd(row[0], row[j])
        u, v = row[0] // g, row[j] // g
        col_op(0, j, s, -v, t, u)
    basis = [[V[r][c] for r in range(n)] for c in range(1, n)]
    left = [Vinv[r] for r in range(1, n)]
    return basis, left


def _egcd(a, b):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


# ---------------------------------------------------------------------------
# lattices and discriminant forms


@dataclass
class GramLattice:
    gram: list
    name: str = ""
    tags: list = field(default_factory=list)

    def __post_init__(self):
        self.gram = [[int(v) for v in r] for r in self.gram]
        n = len(self.gram)
        if any(len(r) != n for r in self.gram):
            raise ValueError("Gram matrix must be square")
        if any(self.gram[i][j] != self.gram[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return det_int(self.gram)

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def signature(self) -> tuple[int, int]:
        p, q, z = signature(self.gram)
        if z:
            raise ValueError("degenerate lattice")
        return p, q

    def scaled(self, k: int) -> "GramLattice":
        return GramLattice([[k * v for v in r] for r in self.gram], f"{self.name}({k})")

    def __add__(self, other: "GramLattice") -> "GramLattice":
        return direct_sum(self, other)

    def pair(self, u, v) -> int:
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def snf(self):
        """(invariant factors, S, T) with S G T = diag(factors)."""
        D, S, T = smith_normal_decomp(Matrix(self.gram), domain=ZZ)
        factors = [abs(int(D[i, i])) for i in range(self.rank)]
        return factors, [[int(x) for x in S.row(i)] for i in range(self.rank)], T

    def to_json(self):
        return self.gram


def direct_sum(*lats: GramLattice) -> GramLattice:
    n = sum(l.rank for l in lats)
    g = [[0] * n for _ in range(n)]
    off = 0
    for l in lats:
        for i in range(l.rank):
            for j in range(l.rank):
                g[off + i][off + j] = l.gram[i][j]
        off += l.rank
    return GramLattice(g, " + ".join(l.name for l in lats))


class FiniteQuadForm:
    """Discriminant form on Z/d_1 + ... + Z/d_k with values B[i][j] = b(g_i, g_j).

    B is held as integers over a common denominator: diagonal entries are
    q(g_i) mod 2, off-diagonal ones b(g_i, g_j) mod 1.
    """

    def __init__(self, orders, B):
        self.orders = tuple(int(d) for d in orders)
        B = [[Fraction(v) for v in r] for r in B]
        k = len(self.orders)
        den = 1
        for r in B:
            for v in r:
                den = den * v.denominator // math.gcd(den, v.denominator)
        self.den = den
        self.Bn = [[int(B[i][j] * den) % (2 * den if i == j else den) for j in range(k)] for i in range(k)]

    @property
    def B(self):
        return [[Fraction(v, self.den) for v in r] for r in self.Bn]

    def order(self) -> int:
        return math.prod(self.orders)

    def elements(self):
        return product(*(range(d) for d in self.orders))

    def q_int(self, x) -> int:
        """q(x) * den mod 2 den."""
        k, Bn = len(self.orders), self.Bn
        s = sum(x[i] * x[i] * Bn[i][i] for i in range(k))
        s += 2 * sum(x[i] * x[j] * Bn[i][j] for i in range(k) for j in range(i + 1, k))
        return s % (2 * self.den)

    def b_int(self, x, y) -> int:
        """b(x, y) * den mod den."""
        k, Bn = len(self.orders), self.Bn
        return sum(x[i] * y[j] * Bn[i][j] for i in range(k) for j in range(k)) % self.den

    def q(self, x) -> Fraction:
        return Fraction(self.q_int(x), self.den)

    def b(self, x, y) -> Fraction:
        return Fraction(self.b_int(x, y), self.den)

    def add(self, x, y):
        return tuple((a + c) % d for a, c, d in zip(x, y, self.orders))

    def elem_order(self, x) -> int:
        o = 1
        for a, d in zip(x, self.orders):
            e = d // math.gcd(a, d)
            o = o * e // math.gcd(o, e)
        return o

    def min_generators(self) -> int:
        """Minimal number of generators: the largest p-rank over primes p."""
        best = 0
        primes = {p for d in self.orders for p in _prime_factors(d)}
        for p in primes:
            best = max(best, sum(1 for d in self.orders if d % p == 0))
        return best

    def check_polarization(self) -> bool:
        """q(x+y) - q(x) - q(y) = 2 b(x, y) mod 2 on all pairs (small groups only)."""
        els = list(self.elements())
        qs = {x: self.q_int(x) for x in els}
        m = 2 * self.den
        return all((qs[self.add(x, y)] - qs[x] - qs[y] - 2 * self.b_int(x, y)) % m == 0
                   for x in els for y in els)

    def to_json(self):
        return {"orders": list(self.orders), "B": [[str(v) for v in r] for r in self.B]}


def _prime_factors(n):
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


@dataclass
class DiscriminantData:
    form: FiniteQuadForm
    gram: list
    S: list  # from S G T = D
    factors: list
    positions: list  # indices i with d_i > 1
    dual_gens: list  # dual vectors (coordinates in L tensor Q) of the generators

    def class_of(self, dual_vec) -> tuple:
        """Element of the form represented by a dual vector (coordinates in L tensor Q)."""
        w = mat_vec(self.gram, dual_vec)
        out = []
        for i in self.positions:
            v = sum(self.S[i][j] * w[j] for j in range(len(w)))
            if Fraction(v).denominator != 1:
                raise ValueError("not a dual vector")
            out.append(int(v) % self.factors[i])
        return tuple(out)


def discriminant_form(L: GramLattice) -> FiniteQuadForm:
    return discriminant_data(L).form


def discriminant_data(L: GramLattice) -> DiscriminantData:
    """S G T = D gives generators y_i = T e_i / d_i of L*/L, reduced mod L."""
    factors, S, T = L.snf()
    if 0 in factors:
        raise ValueError("degenerate lattice")
    n = L.rank
    pos = [i for i in range(n) if factors[i] > 1]
    ys = [[Fraction(int(T[r, i]) % factors[i], factors[i]) for r in range(n)] for i in pos]
    B = [[sum(a * b for a, b in zip(yi, mat_vec(L.gram, yj))) for yj in ys] for yi in ys]
    form = FiniteQuadForm(tuple(factors[i] for i in pos), B)
    return DiscriminantData(form, L.gram, S, factors, pos, ys)


def qform_isomorphic(f: FiniteQuadForm, g: FiniteQuadForm) -> bool:
    """Brute-force search for a group isomorphism matching the quadratic forms."""
    if f.order() != g.order():
        return False
    if f.order() > 10**4:
        raise ValueError("forms on groups of order > 10^4 are not supported")
    gels = list(g.elements())
    k = len(f.orders)
    gens = [tuple(int(i == j) for j in range(k)) for i in range(k)]
    cands = []
    gq = {y: g.q(y) for y in gels}
    for i, x in enumerate(gens):
        ox, qx = f.orders[i], f.q(x)
        cands.append([y for y in gels if gq[y] == qx and g.elem_order(y) == ox])

    def closure_size(imgs):
        seen = {tuple(0 for _ in g.orders)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for e in frontier:
                for y in imgs:
                    z = g.add(e, y)
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return len(seen)

    def rec(i, imgs):
        if i == k:
            return closure_size(imgs) == g.order()
        for y in cands[i]:
            if all(g.b(imgs[j], y) == f.B[j][i] % 1 for j in range(i)):
                if rec(i + 1, imgs + [y]):
                    return True
        return False

    return rec(0, [])


# ---------------------------------------------------------------------------
# definite lattices: reduction, short vectors, isometries


def lll_gram(gram, delta=Fraction(3, 4)):
    """LLL on a positive definite Gram matrix; returns (reduced Gram, T) with T^T G T reduced."""
    n = len(gram)
    G = [[Fraction(v) for v in r] for r in gram]
    T = [[int(i == j) for j in range(n)] for i in range(n)]  # columns are the new basis

    def ip(i, j):
        return G[i][j]

    def swap(i, j):
        for r in range(n):
            T[r][i], T[r][j] = T[r][j], T[r][i]
        G[i], G[j] = G[j], G[i]
        for r in range(n):
            G[r][i], G[r][j] = G[r][j], G[r][i]

    def add_mult(i, j, q):
        # b_i <- b_i - q b_j
        for r in range(n):
            T[r][i] -= q * T[r][j]
        for r in range(n):
            G[i][r] -= q * G[j][r]
        for r in range(n):
            G[r][i] -= q * G[r][j]

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        Bn = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                mu[i][j] = (ip(i, j) - sum(mu[j][k] * mu[i][k] * Bn[k] for k in range(j))) / Bn[j]
            Bn[i] = ip(i, i) - sum(mu[i][k] ** 2 * Bn[k] for k in range(i))
        return mu, Bn

    k = 1
    while k < n:
        mu, Bn = gso()
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                add_mult(k, j, q)
                mu, Bn = gso()
        if Bn[k] >= (delta - mu[k][k - 1] ** 2) * Bn[k - 1]:
            k += 1
        else:
            swap(k, k - 1)
            k = max(k - 1, 1)
    return [[int(v) for v in r] for r in G], T


def short_vectors(gram, bound: int, budget: int | None = None) -> list[tuple[int, ...]]:
    """All nonzero x with x^T G x <= bound (G positive definite), Fincke-Pohst."""
    n = len(gram)
    A = np.array(gram, dtype=float)
    # q_ii, q_ij from the Cholesky-like decomposition
    Q = A.copy()
    for i in range(n):
        for j in range(i + 1, n):
            Q[j][i] = Q[i][j]
            Q[i][j] = Q[i][j] / Q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                Q[k][l] -= Q[k][i] * Q[i][l]
    eps = 1e-9
    out = []
    x = [0] * n
    steps = [0]

    def rec(i, remaining):
        steps[0] += 1
        if budget is not None and steps[0] > budget:
            raise ResourceLimit("short vector enumeration budget exceeded")
        c = -sum(Q[i][j] * x[j] for j in range(i + 1, n))
        r = math.sqrt(max(remaining, 0) / Q[i][i]) if remaining > 0 else 0.0
        lo, hi = math.ceil(c - r - eps), math.floor(c + r + eps)
        for v in range(lo, hi + 1):
            x[i] = v
            rem = remaining - Q[i][i] * (v - c) ** 2
            if rem < -eps:
                continue
            if i == 0:
                if any(x):
                    out.append(tuple(x))
            else:
                rec(i - 1, rem)
        x[i] = 0

    rec(n - 1, bound + eps)
    G = np.array(gram, dtype=np.int64)
    X = np.array(out, dtype=np.int64).reshape(-1, n)
    norms = np.einsum("ij,jk,ik->i", X, G, X) if len(out) else np.zeros(0, dtype=np.int64)
    return [tuple(int(v) for v in X[i]) for i in range(len(out)) if 0 < norms[i] <= bound]


def reduced_basis(gram, budget: int | None = None):
    """(G', T) with G' = T^T G T: LLL, then longer basis vectors swapped for minimal ones.

    A vector v with coordinate +-1 on b_i can replace b_i without changing
    the lattice, so the search below can use the smallest possible norm bound.
    """
    R, T = lll_gram(gram)
    n = len(R)
    mu = min(R[i][i] for i in range(n))
    if any(R[i][i] > mu for i in range(n)):
        mins = [v for v in short_vectors(R, mu, budget)]
        for i in range(n):
            if R[i][i] == mu:
                continue
            v = next((v for v in mins if abs(v[i]) == 1), None)
            if v is None:
                continue
            C = [[int(r == c) for c in range(n)] for r in range(n)]
            for r in range(n):
                C[r][i] = v[r]
            R = matmul(transpose(C), matmul(R, C))
            T = matmul(T, C)
            Cinv = np.array(_int_inverse(C), dtype=np.int64)
            mins = [tuple(int(x) for x in row) for row in np.array(mins, dtype=np.int64) @ Cinv.T]
    return R, T


def _int_inverse(a):
    inv = inverse_q(a)
    if any(v.denominator != 1 for r in inv for v in r):
        raise ValueError("matrix is not unimodular")
    return [[int(v) for v in r] for r in inv]


@dataclass
class IsometryGroup:
    gram: list
    elements: list  # integer matrices as tuples of rows (column j = image of e_j)
    generators: list
    nodes: int = 0

    @property
    def order(self) -> int:
        return len(self.elements)

    def to_json(self):
        return {"order": self.order, "generators": [list(map(list, g)) for g in self.generators]}


def _fingerprints(V, VB, norms, bound):
    """Per vector: histogram of (norm of w, <v, w>) over all short vectors w."""
    width = 2 * bound + 1
    K = (bound + 1) * width
    codes_w = norms * width + bound
    out = np.zeros((len(V), K), dtype=np.int64)
    step = max(1, 4_000_000 // max(len(V), 1))
    for s in range(0, len(V), step):
        ip = VB[s:s + step] @ V.T
        code = ip + codes_w[None, :] + (np.arange(ip.shape[0]) * K)[:, None]
        out[s:s + step] = np.bincount(code.ravel(), minlength=ip.shape[0] * K).reshape(-1, K)
    return out


class _Searcher:
    """Backtracking search for X with X^T B X = A, columns taken from short vectors of B.

    Candidates for the image of e_i are restricted to vectors of B whose
    fingerprint matches that of e_i in A, and are pruned by forward checking
    of inner products with the images already chosen.
    """

    def __init__(self, A, B, budget):
        n = len(A)
        self.n, self.A, self.budget, self.nodes = n, A, budget, 0
        bound = max(A[i][i] for i in range(n))
        self.V, self.VB, norms = self._vectors(B, bound)
        fpB = _fingerprints(self.V, self.VB, norms, bound)
        if A == B:
            VA, fpA = self.V, fpB
        else:
            VA, VBA, normsA = self._vectors(A, bound)
            fpA = _fingerprints(VA, VBA, normsA, bound)
        self.index = {tuple(int(x) for x in v): i for i, v in enumerate(self.V)}
        rowsA = {tuple(int(x) for x in v): i for i, v in enumerate(VA)}
        self.init = []
        for i in range(n):
            e = tuple(int(j == i) for j in range(n))
            f = fpA[rowsA[e]]
            mask = (norms == A[i][i]) & (fpB == f).all(axis=1)
            self.init.append(np.nonzero(mask)[0])
        self.order = sorted(range(n), key=lambda i: (len(self.init[i]), i))
        # inner products of candidates with all short vectors, if they fit in memory
        self.rows = None
        U = np.unique(np.concatenate(self.init))
        if bound < 128 and len(U) * len(self.V) <= 4 * 10**8:
            self.pos = np.full(len(self.V), -1, dtype=np.int64)
            self.pos[U] = np.arange(len(U))
            self.rows = np.empty((len(U), len(self.V)), dtype=np.int8)
            step = max(1, 4_000_000 // len(self.V))
            for s in range(0, len(U), step):
                self.rows[s:s + step] = self.VB[U[s:s + step]] @ self.V.T

    def _row(self, idx):
        if self.rows is not None:
            return self.rows[self.pos[idx]]
        return self.V @ self.VB[idx]

    @staticmethod
    def _vectors(G, bound):
        n = len(G)
        V = np.array(short_vectors(G, bound), dtype=np.int64).reshape(-1, n)
        VB = V @ np.array(G, dtype=np.int64)
        return V, VB, np.einsum("ij,ij->i", VB, V)

    def search(self, forced=(), find_all=False):
        n, A, order, V = self.n, self.A, self.order, self.V
        results = []

        def rec(depth, chosen, cands):
            self.nodes += 1
            if self.budget is not None and self.nodes > self.budget:
                raise ResourceLimit("isometry search budget exceeded")
            if depth == n:
                X = np.zeros((n, n), dtype=np.int64)
                for pos, idx in zip(order, chosen):
                    X[:, pos] = V[idx]
                results.append(X)
                return not find_all
            cur = order[depth]
            pool = cands[cur]
            if depth < len(forced):
                pool = pool[pool == forced[depth]]
            for idx in pool:
                row = self._row(idx)
                new = dict(cands)
                ok = True
                for m in order[depth + 1:]:
                    c = new[m]
                    c = c[row[c] == A[cur][m]]
                    if len(c) == 0:
                        ok = False
                        break
                    new[m] = c
                if ok and rec(depth + 1, chosen + [int(idx)], new):
                    return True
            return False

        rec(0, [], {i: self.init[i] for i in range(n)})
        return results

    def _image(self, X, idx):
        return self.index[tuple(int(x) for x in X @ self.V[idx])]

    def _orbit(self, gens, start):
        seen = {start}
        todo = [start]
        while todo:
            i = todo.pop()
            for X in gens:
                j = self._image(X, i)
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        return seen

    def stabilizer_chain(self):
        """Generators and orbit lengths of the full isometry group, deepest level first."""
        n, A, order = self.n, self.A, self.order
        e_idx = [self.index[tuple(int(j == i) for j in range(n))] for i in range(n)]
        gens, lengths = [], []
        for level in reversed(range(n)):
            b = order[level]
            prefix = [e_idx[order[j]] for j in range(level)]
            cand = self.init[b]
            for j in range(level):
                cand = cand[self.VB[cand][:, order[j]] == A[order[j]][b]]
            orbit = self._orbit(gens, e_idx[b])
            dead = set()
            for c in cand:
                c = int(c)
                if c in orbit or c in dead:
                    continue
                found = self.search(tuple(prefix) + (c,))
                if found:
                    gens.append(found[0])
                    orbit = self._orbit(gens, e_idx[b])
                else:
                    dead |= self._orbit(gens, c)
            lengths.append(len(orbit))
        return gens, lengths[::-1]


def _closure(gens, n):
    one = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {one}
    todo = [np.eye(n, dtype=np.int64)]
    while todo:
        x = todo.pop()
        for g in gens:
            y = g @ x
            key = tuple(tuple(int(v) for v in r) for r in y)
            if key not in seen:
                seen.add(key)
                todo.append(y)
    return seen


def automorphism_group(L: GramLattice, budget: int | None = 10**7) -> IsometryGroup:
    """All isometries of a definite lattice (negated first if negative definite)."""
    G = L.gram
    p, q = L.signature()
    if p and q:
        raise ValueError("automorphism_group needs a definite lattice")
    if q:
        G = [[-v for v in r] for r in G]
    R, T = reduced_basis(G, budget)
    Tinv = np.array(_int_inverse(T), dtype=np.int64)
    Tm = np.array(T, dtype=np.int64)
    srch = _Searcher(R, R, budget)
    gens, lengths = srch.stabilizer_chain()
    order = math.prod(lengths)
    back = [Tm @ X @ Tinv for X in gens]
    els = sorted(_closure(back, len(G)))
    if len(els) != order:
        raise AssertionError("closure size disagrees with the stabilizer chain")
    for Y in els:
        if not _preserves(Y, G):
            raise AssertionError("search returned a non-isometry")
    gtuples = [tuple(tuple(int(v) for v in r) for r in X) for X in back]
    return IsometryGroup(L.gram, els, gtuples, srch.nodes)


def find_isometry(L1: GramLattice, L2: GramLattice, budget: int | None = 10**7):
    """X with X^T G2 X = G1 (columns: images of the basis of L1 in L2), or None."""
    if L1.rank != L2.rank or L1.det() != L2.det():
        return None
    p, q = L1.signature()
    if p and q:
        raise ValueError("definite lattices only")
    if L2.signature() != (p, q):
        return None
    A, B = L1.gram, L2.gram
    if q:
        A = [[-v for v in r] for r in A]
        B = [[-v for v in r] for r in B]
    A1, T1 = reduced_basis(A, budget)
    B1, T2 = reduced_basis(B, budget)
    found = _Searcher(A1, B1, budget).search()
    if not found:
        return None
    X = matmul(T2, matmul(found[0].tolist(), _int_inverse(T1)))
    if not _preserves_pair(X, L2.gram, L1.gram):
        raise AssertionError("isometry check failed")
    return tuple(tuple(r) for r in X)


def _preserves_pair(X, G2, G1) -> bool:
    Xm = np.array(X, dtype=object)
    return bool((Xm.T.dot(np.array(G2, dtype=object)).dot(Xm) == np.array(G1, dtype=object)).all())


def _preserves(X, G) -> bool:
    Xm = np.array(X, dtype=np.int64)
    Gm = np.array(G, dtype=np.int64)
    return bool((Xm.T @ Gm @ Xm == Gm).all())


# ---------------------------------------------------------------------------
# finite matrix groups


def _mul(x, y):
    return tuple(tuple(int(v) for v in r) for r in (np.array(x, dtype=np.int64) @ np.array(y, dtype=np.int64)))


class MatrixGroup:
    """A finite group of integer matrices held as its full element list."""

    def __init__(self, elements):
        self.elements = list(elements)
        self.n = len(self.elements[0])
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.identity = tuple(tuple(int(i == j) for j in range(self.n)) for i in range(self.n))
        arr = np.array(self.elements, dtype=np.int64)
        self._arr = arr
        self._table = None

    def __len__(self):
        return len(self.elements)

    def table(self):
        """Multiplication table as an int array: table[i, j] = index of e_i e_j."""
        if self._table is None:
            N = len(self.elements)
            t = np.empty((N, N), dtype=np.int32)
            keys = {self._arr[j].tobytes(): j for j in range(N)}
            for i in range(N):
                prods = np.einsum("ij,bjk->bik", self._arr[i], self._arr)
                for j in range(N):
                    t[i, j] = keys[prods[j].tobytes()]
            self._table = t
        return self._table

    def inverse_index(self):
        t = self.table()
        e = self.index[self.identity]
        return [int(np.nonzero(t[i] == e)[0][0]) for i in range(len(self))]

    def order_of(self, i) -> int:
        t = self.table()
        e = self.index[self.identity]
        k, x = 1, i
        while x != e:
            x = int(t[x, i])
            k += 1
        return k

    def closure(self, gens: Sequence[int]) -> set[int]:
        t = self.table()
        e = self.index[self.identity]
        seen = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(t[x, g])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def conjugacy_classes(self) -> list[list[int]]:
        t = self.table()
        inv = self.inverse_index()
        seen, classes = set(), []
        for x in range(len(self)):
            if x in seen:
                continue
            cls = {int(t[t[g, x], inv[g]]) for g in range(len(self))}
            seen |= cls
            classes.append(sorted(cls))
        return classes

    def is_simple(self) -> bool:
        """Every non-identity conjugacy class generates the whole group."""
        e = self.index[self.identity]
        for cls in self.conjugacy_classes():
            if e in cls:
                continue
            if len(self.closure(cls)) != len(self):
                return False
        return True

    def find_presentation_pair(self):
        """(a, b) generating the group with a^2 = b^3 = (ab)^11 = [a, babab]^2 = 1."""
        t = self.table()
        inv = self.inverse_index()
        e = self.index[self.identity]
        invols = [i for i in range(len(self)) if i != e and int(t[i, i]) == e]
        order3 = [i for i in range(len(self)) if self.order_of(i) == 3]
        for a in invols:
            for b in order3:
                ab = int(t[a, b])
                if self.order_of(ab) != 11:
                    continue
                x = b
                for g in (a, b, a, b):
                    x = int(t[x, g])
                c = int(t[t[t[inv[a], inv[x]], a], x])
                if int(t[c, c]) != e:
                    continue
                if len(self.closure([a, b])) == len(self):
                    return a, b
        return None


def small_generating_set(elements) -> list:
    """Greedy generating set; closure computed by products with the generators."""
    if not elements:
        return []
    n = len(elements[0])
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    gens, span = [], {ident}
    for x in elements:
        if x in span:
            continue
        gens.append(x)
        frontier = list(span)
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = _mul(y, g)
                    if z not in span:
                        span.add(z)
                        nxt.append(z)
            frontier = nxt
        if len(span) == len(elements):
            break
    return gens


def _discriminant_action(data: DiscriminantData):
    """Fast X -> images of the discriminant generators, in int64 arithmetic.

    With y = Y / d for an integer matrix Y, the class of X y is
    (S G X Y)_i / d mod d_i, so S G only matters modulo d * d_i.
    """
    n = len(data.gram)
    d = math.lcm(*(data.factors[i] for i in data.positions))
    Y = np.array([[int(v * d) for v in y] for y in data.dual_gens], dtype=np.int64).T
    mods = np.array([d * data.factors[i] for i in data.positions], dtype=np.int64)
    SG = [[sum(int(data.S[i][k]) * data.gram[k][j] for k in range(n)) for j in range(n)]
          for i in data.positions]
    M = np.array([[v % int(m) for v in row] for row, m in zip(SG, mods)], dtype=np.int64)
    small = np.array([data.factors[i] for i in data.positions], dtype=np.int64)

    def act(X):
        W = (M @ (np.array(X, dtype=np.int64) @ Y)) % mods[:, None]
        if (W % d).any():
            raise ValueError("not a dual vector")
        W = (W // d) % small[:, None]
        return tuple(tuple(int(v) for v in W[:, c]) for c in range(W.shape[1]))

    return act


def action_on_discriminant(X, data: DiscriminantData) -> tuple:
    """Images of the discriminant generators under the isometry X (columns = images of basis)."""
    return _discriminant_action(data)(X)


def discriminant_kernel(group: IsometryGroup, L: GramLattice) -> list:
    """Isometries acting trivially on D(L)."""
    data = discriminant_data(L)
    act = _discriminant_action(data)
    k = len(data.positions)
    trivial = tuple(tuple(int(i == j) for i in range(k)) for j in range(k))
    return [X for X in group.elements if act(X) == trivial]


# ---------------------------------------------------------------------------
# the Picard lattice of the 55 divisors


HPERP_GRAM_REFERENCE = [
    [-6, -2, -4, -2, -3, -3, -3, -4, -2, -4, -3, -3, -4, -2, -3, -3, -3, -3, -3, -4],
    [-2, -4, -2, -2, -1, -2, -2, -3, -2, -2, -1, -2, -3, -2, -1, -2, -2, -2, -2, -3],
    [-4, -2, -6, -2, -3, -2, -3, -4, -3, -4, -3, -2, -4, -3, -3, -2, -3, -3, -3, -4],
    [-2, -2, -2, -4, -1, -2, -1, -3, -2, -3, -2, -2, -2, -2, -2, -2, -1, -2, -2, -3],
    [-3, -1, -3, -1, -4, -1, -2, -2, -2, -3, -2, -2, -3, -1, -2, -2, -2, -1, -2, -3],
    [-3, -2, -2, -2, -1, -4, -1, -3, -1, -3, -2, -2, -3, -2, -1, -2, -2, -2, -1, -3],
    [-3, -2, -3, -1, -2, -1, -4, -2, -2, -2, -2, -2, -3, -2, -2, -1, -2, -2, -2, -2],
    [-4, -3, -4, -3, -2, -3, -2, -6, -2, -4, -3, -3, -4, -3, -3, -3, -2, -3, -3, -4],
    [-2, -2, -3, -2, -2, -1, -2, -2, -4, -2, -1, -2, -3, -2, -2, -2, -2, -1, -2, -3],
    [-4, -2, -4, -3, -3, -3, -2, -4, -2, -6, -3, -2, -4, -3, -3, -3, -3, -3, -2, -4],
    [-3, -1, -3, -2, -2, -2, -2, -3, -1, -3, -4, -2, -2, -2, -2, -1, -1, -2, -2, -2],
    [-3, -2, -2, -2, -2, -2, -2, -3, -2, -2, -2, -4, -3, -1, -2, -2, -1, -1, -2, -3],
    [-4, -3, -4, -2, -3, -3, -3, -4, -3, -4, -2, -3, -6, -3, -2, -3, -3, -2, -2, -4],
    [-2, -2, -3, -2, -1, -2, -2, -3, -2, -3, -2, -1, -3, -4, -2, -1, -2, -2, -1, -2],
    [-3, -1, -3, -2, -2, -1, -2, -3, -2, -3, -2, -2, -2, -2, -4, -2, -1, -2, -2, -2],
    [-3, -2, -2, -2, -2, -2, -1, -3, -2, -3, -1, -2, -3, -1, -2, -4, -2, -1, -2, -3],
    [-3, -2, -3, -1, -2, -2, -2, -2, -2, -3, -1, -1, -3, -2, -1, -2, -4, -2, -1, -3],
    [-3, -2, -3, -2, -1, -2, -2, -3, -1, -3, -2, -1, -2, -2, -2, -1, -2, -4, -2, -2],
    [-3, -2, -3, -2, -2, -1, -2, -3, -2, -2, -2, -2, -2, -1, -2, -2, -1, -2, -4, -3],
    [-4, -3, -4, -3, -3, -3, -2, -4, -3, -4, -2, -3, -4, -2, -2, -3, -3, -2, -3, -6],
]


def divisor_pairing(p, p2, t=None) -> int:
    """1 if t(p, p2, -) vanishes identically, else 0; p and p2 must differ."""
    if p == p2:
        raise ValueError("divisor_pairing needs two different points")
    t = sigma() if t is None else t
    form = pair_form(t, p.coords, p2.coords, ZERO)
    return 0 if any(form) else 1


def fujiki_degree(qDD: int) -> int:
    """H^2.D.D' = q(H,H) q(D,D') + 2 q(H,D) q(H,D') = 22 q(D,D') + 8."""
    return 22 * qDD + 8


BASIS_KEYS = [(0, j) for j in range(11)] + [(1, j) for j in range(10)]


@dataclass
class Picard:
    lattice: GramLattice
    full_pairing: list  # 55 x 55 with -2 on the diagonal
    coords: list  # 21 x 55 integer coordinates of every class in the basis
    h: list  # coordinates of H
    keys: list  # ordering of the 55 points

    def det(self):
        return self.lattice.det()


def build_picard(S) -> Picard:
    ordered = S.ordered()
    keys = [k for k, _ in ordered]
    pts = [p for _, p in ordered]
    s = sigma()
    n = len(pts)
    full = [[-2] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = divisor_pairing(pts[i], pts[j], s)
            full[i][j] = full[j][i] = v
    bidx = [keys.index(k) for k in BASIS_KEYS]
    gram = [[full[i][j] for j in bidx] for i in bidx]
    L = GramLattice(gram, "Pic", [f"D{i},{j}" for i, j in BASIS_KEYS])
    Ginv = inverse_q(gram)
    coords_cols = []
    for c in range(n):
        pv = [full[b][c] for b in bidx]
        x = mat_vec(Ginv, pv)
        if any(Fraction(v).denominator != 1 for v in x):
            raise ArithmeticError(f"class {keys[c]} has non-integral coordinates")
        coords_cols.append([int(v) for v in x])
    coords = transpose(coords_cols)
    h = [int(v) for v in mat_vec(Ginv, [2] * len(bidx))]
    return Picard(L, full, coords, h, keys)


@dataclass
class PicardReport:
    det: int
    h: list
    h_is_row_sum: bool
    qHH: int
    qHD_all_2: bool
    signature: tuple
    pairing_rank: int
    classes_consistent: bool


def picard_report(pic: Picard) -> PicardReport:
    G = pic.lattice.gram
    h = pic.h
    qHH = pic.lattice.pair(h, h)
    n = len(pic.keys)
    Gh = mat_vec(G, h)
    qHD = [sum(a * b for a, b in zip(Gh, [pic.coords[r][c] for r in range(21)])) for c in range(n)]
    # the full pairing must be C^T G C
    C = np.array(pic.coords, dtype=np.int64)
    Gm = np.array(G, dtype=np.int64)
    consistent = bool((C.T @ Gm @ C == np.array(pic.full_pairing, dtype=np.int64)).all())
    rank = int(Matrix(pic.full_pairing).rank())
    return PicardReport(
        det=pic.det(),
        h=h,
        h_is_row_sum=h == [1] * 11 + [0] * 10,
        qHH=qHH,
        qHD_all_2=all(v == 2 for v in qHD),
        signature=pic.lattice.signature(),
        pairing_rank=rank,
        classes_consistent=consistent,
    )


@dataclass
class Complement:
    lattice: GramLattice
    basis: list  # columns: vectors of the ambient lattice
    left_inverse: list  # rows; left_inverse . basis = identity


def orthogonal_complement(L: GramLattice, v: Sequence[int]) -> Complement:
    """Integral basis of {x : q(x, v) = 0}."""
    w = mat_vec(L.gram, v)
    if not any(w):
        raise ValueError("v is isotropic against the whole lattice")
    basis, left = kernel_basis(w)
    if not basis:
        return Complement(GramLattice([], f"{L.name}^perp"), [], [])
    B = transpose(basis)  # n x (n-1), columns are the basis vectors
    gram = matmul(transpose(B), matmul(L.gram, B))
    return Complement(GramLattice(gram, f"{L.name}^perp"), basis, left)


# ---------------------------------------------------------------------------
# the group action on the Picard lattice


@dataclass
class PicardAction:
    perms: dict  # mat2 -> permutation of the 55 ordered points
    pic_mats: dict  # mat2 -> 21 x 21 integer matrix
    hperp_mats: dict  # mat2 -> 20 x 20 integer matrix
    preserves_gram: bool
    fixes_h: bool
    character_hperp: list  # traces at the class representatives, Table order
    character_pic: list


def g_action_on_picard(S, pic: Picard, comp: Complement, perm_a, perm_b) -> PicardAction:
    """Extend the permutations of the points by a and b to the whole group.

    perm_x[k] is the position of x.p_k in the ordered list of points.
    """
    from .grouprep import A2, B2, CLASS_REPS, PSL_ID, psl_mul

    n = len(perm_a)
    perms = {PSL_ID: tuple(range(n))}
    frontier = [PSL_ID]
    gens = [(A2, perm_a), (B2, perm_b)]
    while frontier:
        nxt = []
        for g in frontier:
            pg = perms[g]
            for m2, px in gens:
                h = psl_mul(g, m2)
                ph = tuple(pg[px[k]] for k in range(n))
                if h in perms:
                    if perms[h] != ph:
                        raise ArithmeticError("point permutations do not define an action")
                    continue
                perms[h] = ph
                nxt.append(h)
        frontier = nxt
    C = np.array(pic.coords, dtype=np.int64)
    G = np.array(pic.lattice.gram, dtype=np.int64)
    B = np.array(transpose(comp.basis), dtype=np.int64)
    Bl = np.array(comp.left_inverse, dtype=np.int64)
    h = np.array(pic.h, dtype=np.int64)
    bidx = [pic.keys.index(k) for k in BASIS_KEYS]
    pic_mats, hp_mats = {}, {}
    ok_gram = ok_h = True
    for g, perm in perms.items():
        M = C[:, [perm[b] for b in bidx]]
        if not (M.T @ G @ M == G).all():
            ok_gram = False
        if not (M @ h == h).all():
            ok_h = False
        N = Bl @ M @ B
        if not (M @ B == B @ N).all():
            raise ArithmeticError("complement is not preserved")
        pic_mats[g] = tuple(tuple(int(v) for v in r) for r in M)
        hp_mats[g] = tuple(tuple(int(v) for v in r) for r in N)
    chi_h = [int(np.trace(np.array(hp_mats[r]))) for r in CLASS_REPS]
    chi_p = [int(np.trace(np.array(pic_mats[r]))) for r in CLASS_REPS]
    return PicardAction(perms, pic_mats, hp_mats, ok_gram, ok_h, chi_h, chi_p)


# ---------------------------------------------------------------------------
# small even lattices and the Nikulin criteria


def enumerate_even_lattices(rank: int, det: int, budget: int | None = 10**6) -> list[GramLattice]:
    """Positive definite even lattices of the given rank and determinant, up to isometry.

    Brute force over Minkowski-reduced Gram matrices, using the bounds
    a11 a22 <= 4/3 det (rank 2) and a11 a22 a33 <= 2 det (rank 3).
    """
    if rank not in (2, 3):
        raise ValueError("rank must be 2 or 3")
    if not 0 < det <= 100:
        raise ValueError("det must be in 1..100")
    found = []
    if rank == 2:
        for a in range(2, int(math.isqrt(4 * det // 3)) + 2, 2):
            for c in range(a, 4 * det // (3 * a) + 2, 2):
                if 3 * a * c > 4 * det:
                    continue
                for b in range(-(a // 2), a // 2 + 1):
                    if a * c - b * b == det:
                        found.append([[a, b], [b, c]])
    else:
        for a in range(2, 2 * det + 1, 2):
            if a ** 3 > 2 * det:
                break
            for d in range(a, 2 * det + 1, 2):
                if a * d * d > 2 * det:
                    break
                for f in range(d, 2 * det + 1, 2):
                    if a * d * f > 2 * det:
                        break
                    for b in range(-(a // 2), a // 2 + 1):
                        for c in range(-(a // 2), a // 2 + 1):
                            for e in range(-(d // 2), d // 2 + 1):
                                g = [[a, b, c], [b, d, e], [c, e, f]]
                                if det_int(g) == det and signature(g) == (3, 0, 0):
                                    found.append(g)
    reps: list[GramLattice] = []
    for g in found:
        L = GramLattice(g)
        if L.signature() != (rank, 0):
            continue
        if any(find_isometry(L, R, budget) is not None for R in reps):
            continue
        reps.append(L)
    return reps


def nikulin_conditions(L: GramLattice, mode: str) -> bool:
    """The sufficient conditions for uniqueness and for splitting off U or E8(-1)."""
    if not L.is_even():
        raise ValueError("the criteria apply to even lattices")
    p, q = L.signature()
    l = discriminant_form(L).min_generators()
    if mode == "unique":
        return p >= 1 and q >= 1 and p + q >= l + 2
    if mode == "split_U":
        return p >= 1 and q >= 1 and p + q >= l + 3
    if mode == "split_E8":
        return p >= 1 and q >= 8 and p + q >= l + 9
    raise ValueError(f"unknown mode {mode!r}")


E8_CARTAN = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, -1],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 0, 0, 2],
]


class LatticeCatalog:
    U = GramLattice([[0, 1], [1, 0]], "U")
    E8 = GramLattice(E8_CARTAN, "E8")
    E8m = GramLattice([[-v for v in r] for r in E8_CARTAN], "E8(-1)")
    L11 = GramLattice([[2, 1], [1, 6]], "L11")
    A2 = GramLattice([[2, 1], [1, 2]], "A2")
    TWO = GramLattice([[2]], "(2)")
    TWENTY_TWO = GramLattice([[22]], "(22)")
    M3 = GramLattice([[2, 1, 0], [1, 2, 1], [0, 1, 8]], "M3")
    T = direct_sum(L11, TWENTY_TWO)
    K3_2 = direct_sum(U, U, U, E8m, E8m, GramLattice([[-2]], "(-2)"))

    @classmethod
    def pic_models(cls) -> dict:
        """U + E8(-1)^2 + L(-1) for both candidate L."""
        out = {}
        for name, L in (("M3", cls.M3), ("L11+(2)", direct_sum(cls.L11, cls.TWO))):
            out[name] = direct_sum(cls.U, cls.E8m, cls.E8m, L.scaled(-1))
        return out
