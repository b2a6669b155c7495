"""Dense exact linear algebra over Q, Q(zeta_11) or F_p.

Entries are anything supporting + - * / and truthiness (Fraction, CycloNum).
When ``p`` is given, entries are ints and arithmetic is done mod p.
"""

from __future__ import annotations

from fractions import Fraction


def _inv(a, p):
    if p:
        return pow(a, -1, p)
    if hasattr(a, "inverse"):
        return a.inverse()
    return Fraction(1) / a


def row_reduce(rows, p: int = 0, ncols: int | None = None):
    """Reduced row echelon form. Returns (rref rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            v = m[i][c] % p if p else m[i][c]
            if v:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = _inv(m[r][c] % p if p else m[r][c], p)
        if p:
            m[r] = [v * inv % p for v in m[r]]
        else:
            m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r:
                f = m[i][c] % p if p else m[i][c]
                if f:
                    if p:
                        m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
                    else:
                        m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, p: int = 0) -> int:
    return len(row_reduce(rows, p)[1])


def nullspace(rows, ncols: int, p: int = 0, one=None, zero=None):
    """Basis of {x : rows . x = 0} as a list of vectors."""
    one = 1 if one is None else one
    zero = 0 if zero is None else zero
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    red, pivots = row_reduce(rows, p, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % p if p else -row[f]
        basis.append(v)
    return basis


def det(rows, p: int = 0):
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    acc = []
    for c in range(n):
        piv = next((i for i in range(c, n) if (m[i][c] % p if p else m[i][c])), None)
        if piv is None:
            return 0 if p else m[0][0] * 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        acc.append(m[c][c])
        inv = _inv(m[c][c] % p if p else m[c][c], p)
        for i in range(c + 1, n):
            f = m[i][c] * inv
            if p:
                f %= p
            if f:
                if p:
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], m[c])]
                else:
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    out = acc[0]
    for a in acc[1:]:
        out = out * a
    out = out * sign
    return out % p if p else out


def matmul(a, b, p: int = 0):
    bt = list(zip(*b))
    out = []
    for row in a:
        new = []
        for col in bt:
            s = None
            for x, y in zip(row, col):
                if x and y:
                    s = x * y if s is None else s + x * y
            if s is None:
                s = row[0] * 0
            new.append(s % p if p else s)
        out.append(new)
    return out


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(r) for r in zip(*a)]


def inverse(a, p: int = 0, one=None, zero=None):
    n = len(a)
    one = (1 if p else Fraction(1)) if one is None else one
    zero = (0 if p else Fraction(0)) if zero is None else zero
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(a)]
    red, pivots = row_reduce(aug, p, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def solve(a, b, p: int = 0):
    """Solve a x = b for a square nonsingular a, b a vector."""
    n = len(a)
    aug = [list(r) + [v] for r, v in zip(a, b)]
    red, pivots = row_reduce(aug, p, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n] for r in red]
