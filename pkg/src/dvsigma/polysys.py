"""Multivariate polynomials, Buchberger's algorithm, normal forms, Hilbert
dimension/degree and zero-dimensional solving.

Polynomials are exposed as :class:`MPoly` (exponent tuples -> coefficients).
Inside the Groebner engine each monomial is packed into one integer whose
natural ordering *is* the term order, so that multiplying monomials is an
integer addition and picking a leading term is ``max``.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .field import CycloNum

# ---------------------------------------------------------------------------
# coefficient fields


class GF:
    """Prime field F_p on plain Python ints in [0, p)."""

    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def convert(self, c) -> int:
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def fmt(self, c) -> str:
        return str(c)


class QQ:
    """The rationals, coefficients are Fractions."""

    zero = Fraction(0)
    one = Fraction(1)
    p = 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, QQ)

    def __hash__(self):
        return hash("QQ")

    def convert(self, c):
        return Fraction(c)

    def inv(self, a):
        return 1 / a

    def fmt(self, c) -> str:
        return str(c)


class QZeta:
    """Q(zeta_11), coefficients are CycloNums."""

    p = 0

    def __init__(self):
        self.zero = CycloNum()
        self.one = CycloNum([1])

    def __repr__(self):
        return "QZeta"

    def __eq__(self, other):
        return isinstance(other, QZeta)

    def __hash__(self):
        return hash("QZeta")

    def convert(self, c):
        return c if isinstance(c, CycloNum) else CycloNum([c])

    def inv(self, a):
        return a.inverse()

    def fmt(self, c) -> str:
        return f"({c})" if not c.is_rational() else str(c.rational())


# ---------------------------------------------------------------------------
# term orders


class ResourceLimit(RuntimeError):
    """The configured pair/reduction budget was exhausted."""


FIELD_BITS = 8
MAX_EXP = (1 << (FIELD_BITS - 1)) - 1
TOP_BITS = 16


@dataclass(frozen=True)
class TermOrder:
    kind: str = "grevlex"
    n: int = 1
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "weighted"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "weighted":
            if self.weights is None or len(self.weights) != self.n:
                raise ValueError("weighted order needs one weight per variable")
            if min(self.weights) < 0:
                raise ValueError("weights must be non-negative")

    @classmethod
    def grevlex(cls, n):
        return cls("grevlex", n)

    @classmethod
    def lex(cls, n):
        return cls("lex", n)

    @classmethod
    def weighted(cls, weights):
        return cls("weighted", len(weights), tuple(weights))

    def key(self, exps: Sequence[int]) -> tuple:
        """Sort key, larger is bigger in the order (reference implementation)."""
        if self.kind == "lex":
            return tuple(exps)
        grev = (sum(exps),) + tuple(-e for e in reversed(exps))
        if self.kind == "weighted":
            return (sum(w * e for w, e in zip(self.weights, exps)),) + grev
        return grev

    def to_json(self):
        return {"kind": self.kind, "n": self.n, "weights": list(self.weights) if self.weights else None}


class _Packer:
    """Order-preserving integer encoding of monomials for one TermOrder."""

    def __init__(self, order: TermOrder):
        n = self.n = order.n
        self.order = order
        W = FIELD_BITS
        self.var_mask = (1 << (n * W)) - 1
        self.guard = sum(1 << (i * W + W - 1) for i in range(n))
        if order.kind == "lex":
            self.complement = False
            self.shift = [(n - 1 - i) * W for i in range(n)]
            self.k0 = 0
            self.deg_shift = None
        else:
            self.complement = True
            self.shift = [i * W for i in range(n)]
            self.k0 = sum(MAX_EXP << s for s in self.shift)
            self.deg_shift = n * W
        self.weights = order.weights
        self.w_shift = n * W + TOP_BITS if order.kind == "weighted" else None

    def encode(self, exps: Sequence[int]) -> int:
        if max(exps, default=0) > MAX_EXP:
            raise ResourceLimit("exponent overflow in monomial packing")
        k = 0
        if self.complement:
            for e, s in zip(exps, self.shift):
                k |= (MAX_EXP - e) << s
            k |= sum(exps) << self.deg_shift
            if self.w_shift is not None:
                k |= sum(w * e for w, e in zip(self.weights, exps)) << self.w_shift
        else:
            for e, s in zip(exps, self.shift):
                k |= e << s
        return k

    def decode(self, k: int) -> tuple[int, ...]:
        m = MAX_EXP
        if self.complement:
            return tuple(m - ((k >> s) & m) for s in self.shift)
        return tuple((k >> s) & m for s in self.shift)

    def divides(self, b: int, a: int) -> bool:
        """Does monomial b divide monomial a?"""
        G = self.guard
        if self.complement:
            return (((b & self.var_mask) | G) - (a & self.var_mask)) & G == G
        return ((a | G) - b) & G == G

    def degree(self, k: int) -> int:
        if self.complement:
            return (k >> self.deg_shift) & ((1 << TOP_BITS) - 1)
        return sum(self.decode(k))

    def lcm(self, a: int, b: int) -> int:
        return self.encode([max(x, y) for x, y in zip(self.decode(a), self.decode(b))])


# ---------------------------------------------------------------------------
# polynomials


@dataclass
class MPoly:
    """Polynomial in n variables: exponent tuple -> nonzero coefficient."""

    n: int
    terms: dict = field(default_factory=dict)
    field: object = None

    def __post_init__(self):
        if self.field is None:
            self.field = QQ()
        clean = {}
        for e, c in self.terms.items():
            e = tuple(e)
            if len(e) != self.n:
                raise ValueError(f"exponent {e} has wrong length for n={self.n}")
            if min(e, default=0) < 0:
                raise ValueError("negative exponent")
            c = self.field.convert(c)
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def var(cls, i, n, field=None):
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1}, field)

    @classmethod
    def const(cls, c, n, field=None):
        return cls(n, {(0,) * n: c}, field)

    def _wrap(self, terms):
        out = MPoly.__new__(MPoly)
        out.n, out.field = self.n, self.field
        out.terms = {e: c for e, c in terms.items() if c}
        return out

    def _lift(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other, self.n, self.field)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = self._norm(t.get(e, self.field.zero) + c)
        return self._wrap(t)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: self._norm(-c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        t = {}
        zero = self.field.zero
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = self._norm(t.get(e, zero) + c1 * c2)
        return self._wrap(t)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MPoly.const(1, self.n, self.field)
        for _ in range(k):
            out = out * self
        return out

    def _norm(self, c):
        return c % self.field.p if self.field.p else c

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = self._lift(other)
        return self.n == other.n and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def leading_term(self, order: TermOrder):
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def evaluate(self, point: Sequence):
        F = self.field
        total = F.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return self._norm(total)

    def substitute(self, values: dict) -> "MPoly":
        """Replace the variables in ``values`` (index -> coefficient) by constants."""
        out = {}
        zero = self.field.zero
        for e, c in self.terms.items():
            v = c
            ne = list(e)
            for i, x in values.items():
                if e[i]:
                    v = v * x ** e[i]
                    ne[i] = 0
            ne = tuple(ne)
            out[ne] = self._norm(out.get(ne, zero) + v)
        return self._wrap(out)

    def diff(self, i: int) -> "MPoly":
        """Partial derivative with respect to variable i."""
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = self.field.convert(c * e[i])
        return self._wrap(out)

    def map_coeffs(self, fn: Callable, field) -> "MPoly":
        return MPoly(self.n, {e: fn(c) for e, c in self.terms.items()}, field)

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def to_str(self, names=None, order: TermOrder | None = None) -> str:
        return format_poly(self, names, order)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"MPoly({format_poly(self)!r})"


def variables(n, field=None):
    return [MPoly.var(i, n, field) for i in range(n)]


def format_poly(f: MPoly, names=None, order: TermOrder | None = None) -> str:
    """Print as ``c*x0^e0*x3^e3 + ...`` (terms in decreasing order)."""
    if not f.terms:
        return "0"
    names = names or [f"x{i}" for i in range(f.n)]
    order = order or TermOrder.grevlex(f.n)
    parts = []
    for e in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[e]
        factors = [f.field.fmt(c)]
        for name, k in zip(names, e):
            if k == 1:
                factors.append(name)
            elif k:
                factors.append(f"{name}^{k}")
        parts.append("*".join(factors))
    return " + ".join(parts)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+(?:\([^)]*\))?[^+-]*)")


def _split_terms(text: str) -> list[tuple[int, str]]:
    out, depth, cur, sign = [], 0, "", 1
    text = text.strip()
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and cur.strip() and not cur.rstrip().endswith(("^", "*", "/")):
            out.append((sign, cur))
            cur, sign = "", (1 if ch == "+" else -1)
        elif depth == 0 and ch in "+-" and not cur.strip():
            sign = sign * (1 if ch == "+" else -1)
        else:
            cur += ch
        i += 1
    if cur.strip():
        out.append((sign, cur))
    return out


def parse_cyclo(text: str) -> CycloNum:
    """Parse ``a + b*z^k + ...`` into a CycloNum."""
    coeffs = [Fraction(0)] * 11
    for sign, term in _split_terms(text):
        c, k = Fraction(1), 0
        for factor in term.split("*"):
            factor = factor.strip()
            if factor.startswith("z"):
                k += int(factor.split("^")[1]) if "^" in factor else 1
            elif factor:
                c *= Fraction(factor)
        coeffs[k % 11] += sign * c
    return CycloNum(coeffs)


def parse_poly(text: str, n: int, field=None, names=None) -> MPoly:
    """Inverse of :func:`format_poly` for rational or parenthesised cyclotomic coefficients."""
    field = field or QQ()
    names = names or [f"x{i}" for i in range(n)]
    index = {name: i for i, name in enumerate(names)}
    terms = {}
    for sign, term in _split_terms(text):
        c = field.convert(1)
        e = [0] * n
        for factor in _split_factors(term):
            factor = factor.strip()
            if not factor:
                continue
            if factor.startswith("("):
                c = c * field.convert(parse_cyclo(factor[1:-1]))
                continue
            base, _, power = factor.partition("^")
            if base in index:
                e[index[base]] += int(power) if power else 1
            else:
                c = c * field.convert(Fraction(factor))
        if sign < 0:
            c = -c
        e = tuple(e)
        terms[e] = terms.get(e, field.zero) + c
    return MPoly(n, terms, field)


def _split_factors(term: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in term:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


# ---------------------------------------------------------------------------
# Groebner engine


class _Poly:
    """Packed monic polynomial: leading key, exponent tuple, tail terms."""

    __slots__ = ("lm", "exps", "tail", "sugar")

    def __init__(self, lm, exps, tail, sugar):
        self.lm = lm
        self.exps = exps
        self.tail = tail
        self.sugar = sugar


@dataclass
class GroebnerStats:
    pairs_processed: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    basis_size: int = 0


@dataclass
class GroebnerBasis:
    generators: list
    order: TermOrder
    field: object
    stats: GroebnerStats = field(default_factory=GroebnerStats)

    @property
    def n(self):
        return self.order.n

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].total_degree() == 0

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.leading_term(self.order)[0] for g in self.generators]

    def __len__(self):
        return len(self.generators)


class _Engine:
    def __init__(self, order: TermOrder, F, budget=None):
        self.order = order
        self.F = F
        self.pk = _Packer(order)
        self.p = F.p
        self.budget = budget
        self.stats = GroebnerStats()

    # conversions ------------------------------------------------------------
    def pack(self, f: MPoly) -> dict:
        enc = self.pk.encode
        conv = self.F.convert
        return {enc(e): conv(c) for e, c in f.terms.items()}

    def unpack(self, d: dict) -> MPoly:
        dec = self.pk.decode
        out = MPoly.__new__(MPoly)
        out.n, out.field = self.order.n, self.F
        out.terms = {dec(k): c for k, c in d.items()}
        return out

    def make_poly(self, d: dict, sugar=None) -> _Poly | None:
        if not d:
            return None
        lm = max(d)
        inv = self.F.inv(d[lm])
        p = self.p
        if p:
            tail = sorted(((k, c * inv % p) for k, c in d.items() if k != lm), reverse=True)
        else:
            tail = sorted(((k, c * inv) for k, c in d.items() if k != lm), key=lambda t: t[0], reverse=True)
        deg = self.pk.degree
        if sugar is None:
            sugar = max(deg(k) for k in d)
        return _Poly(lm, self.pk.decode(lm), tail, sugar)

    def to_dict(self, g: _Poly) -> dict:
        d = dict(g.tail)
        d[g.lm] = self.F.one
        return d

    # reduction --------------------------------------------------------------
    def reduce(self, f: dict, basis: list[_Poly], top_only=False) -> dict:
        """Full normal form of f (a dict, consumed) modulo basis."""
        p = self.p
        divides = self.pk.divides
        heap = [-k for k in f]
        heapq.heapify(heap)
        rem = {}
        stats = self.stats
        budget = self.budget
        while heap:
            k = -heapq.heappop(heap)
            c = f.pop(k, None)
            if c is None:
                continue
            for g in basis:
                if divides(g.lm, k):
                    break
            else:
                rem[k] = c
                if top_only:
                    rem.update(f)
                    return rem
                continue
            stats.reductions += 1
            if budget is not None and stats.reductions > budget:
                raise ResourceLimit(f"reduction budget {budget} exceeded")
            delta = k - g.lm
            if p:
                for t, gc in g.tail:
                    nk = t + delta
                    v = f.get(nk)
                    if v is None:
                        f[nk] = (-c * gc) % p
                        heapq.heappush(heap, -nk)
                    else:
                        v = (v - c * gc) % p
                        if v:
                            f[nk] = v
                        else:
                            del f[nk]
            else:
                for t, gc in g.tail:
                    nk = t + delta
                    v = f.get(nk)
                    if v is None:
                        f[nk] = -(c * gc)
                        heapq.heappush(heap, -nk)
                    else:
                        v = v - c * gc
                        if v:
                            f[nk] = v
                        else:
                            del f[nk]
        return rem

    def spoly(self, f: _Poly, g: _Poly, lcm: int) -> dict:
        p = self.p
        df = lcm - f.lm
        dg = lcm - g.lm
        out = {}
        for t, c in f.tail:
            out[t + df] = c
        for t, c in g.tail:
            k = t + dg
            v = out.get(k)
            if v is None:
                out[k] = (-c) % p if p else -c
            else:
                v = (v - c) % p if p else v - c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return out

    # Buchberger ---------------------------------------------------------------
    def run(self, gens: Iterable[MPoly]) -> list[_Poly]:
        pk = self.pk
        polys: list[_Poly] = []
        # inter-reduce the input first, smallest leading terms first
        incoming = []
        for f in gens:
            d = self.pack(f)
            if d:
                incoming.append(d)
        incoming.sort(key=lambda d: max(d))
        basis_idx: list[int] = []
        pairs: list[tuple] = []  # (lcm_degree, lcm_key, i, j)
        for d in incoming:
            r = self.reduce(d, [polys[i] for i in basis_idx])
            h = self.make_poly(r)
            if h is None:
                continue
            polys.append(h)
            basis_idx, pairs = self.update(polys, basis_idx, pairs, len(polys) - 1)
            if h.lm == pk.encode((0,) * pk.n):
                return [h]
        one_key = pk.encode((0,) * pk.n)
        while pairs:
            pairs.sort(key=lambda t: (t[0], t[1]), reverse=True)
            _, lcm, i, j = pairs.pop()
            self.stats.pairs_processed += 1
            s = self.spoly(polys[i], polys[j], lcm)
            r = self.reduce(s, [polys[k] for k in basis_idx])
            h = self.make_poly(r)
            if h is None:
                self.stats.zero_reductions += 1
                continue
            polys.append(h)
            if h.lm == one_key:
                return [h]
            basis_idx, pairs = self.update(polys, basis_idx, pairs, len(polys) - 1)
        return self.interreduce([polys[k] for k in basis_idx])

    def update(self, polys, basis_idx, pairs, h_idx):
        """Gebauer-Moeller installation of a new basis element."""
        pk = self.pk
        h = polys[h_idx]
        he = h.exps

        def coprime(e1, e2):
            return not any(a and b for a, b in zip(e1, e2))

        cand = []
        for g_idx in basis_idx:
            g = polys[g_idx]
            lcm_e = tuple(max(a, b) for a, b in zip(g.exps, he))
            cand.append((g_idx, pk.encode(lcm_e), coprime(g.exps, he)))
        # chain criterion among the new pairs; of equal lcms one survives
        kept = []
        while cand:
            g_idx, lcm, cop = cand.pop(0)
            if cop or not (
                any(pk.divides(l2, lcm) for _, l2, _ in cand)
                or any(pk.divides(l2, lcm) for _, l2, _ in kept)
            ):
                kept.append((g_idx, lcm, cop))
        # product criterion
        new_pairs = [(pk.degree(lcm), lcm, g_idx, h_idx) for g_idx, lcm, cop in kept if not cop]
        # remove old pairs made redundant by h
        old = []
        for deg, lcm, i, j in pairs:
            if pk.divides(h.lm, lcm):
                lih = pk.lcm(polys[i].lm, h.lm)
                ljh = pk.lcm(polys[j].lm, h.lm)
                if lih != lcm and ljh != lcm:
                    continue
            old.append((deg, lcm, i, j))
        new_basis = [g for g in basis_idx if not pk.divides(h.lm, polys[g].lm)]
        new_basis.append(h_idx)
        return new_basis, old + new_pairs

    def interreduce(self, basis: list[_Poly]) -> list[_Poly]:
        pk = self.pk
        basis = sorted(basis, key=lambda g: g.lm)
        minimal = []
        for g in basis:
            if not any(pk.divides(m.lm, g.lm) for m in minimal):
                minimal.append(g)
        out = []
        for idx, g in enumerate(minimal):
            others = minimal[:idx] + minimal[idx + 1:]
            tail = self.reduce(dict(g.tail), others)
            d = dict(tail)
            d[g.lm] = self.F.one
            out.append(self.make_poly(d, g.sugar))
        out.sort(key=lambda g: g.lm)
        return out


def _check_ring(gens: Sequence[MPoly]):
    if not gens:
        return None, None
    n, F = gens[0].n, gens[0].field
    for g in gens:
        if g.n != n or g.field != F:
            raise ValueError("generators must share the variable count and coefficient field")
    return n, F


def buchberger(gens: Sequence[MPoly], order: TermOrder, budget: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``budget`` bounds the number of elementary reduction steps; exceeding it
    raises :class:`ResourceLimit`.
    """
    gens = list(gens)
    n, F = _check_ring(gens)
    if n is None:
        return GroebnerBasis([], order, QQ())
    if n != order.n:
        raise ValueError("term order and polynomials disagree on the variable count")
    eng = _Engine(order, F, budget)
    basis = eng.run([g for g in gens if not g.is_zero()])
    out = [eng.unpack(eng.to_dict(g)) for g in basis]
    eng.stats.basis_size = len(out)
    return GroebnerBasis(out, order, F, eng.stats)


def normal_form(f: MPoly, gb: GroebnerBasis) -> MPoly:
    """Remainder of f on division by the basis; zero iff f is in the ideal."""
    if not gb.generators:
        return f
    if f.n != gb.n:
        raise ValueError("incompatible ring")
    eng = _Engine(gb.order, gb.field)
    basis = [eng.make_poly(eng.pack(g)) for g in gb.generators]
    return eng.unpack(eng.reduce(eng.pack(f), basis))


def is_member(f: MPoly, gb: GroebnerBasis) -> bool:
    return normal_form(f, gb).is_zero()


def eliminate(gens: Sequence[MPoly], drop: Sequence[int], budget: int | None = None) -> list[MPoly]:
    """Generators of the elimination ideal (gens) intersected with k[variables not in drop].

    Uses the weighted block order with weight 1 on the dropped variables.
    """
    gens = list(gens)
    n, _ = _check_ring(gens)
    weights = [1 if i in set(drop) else 0 for i in range(n)]
    gb = buchberger(gens, TermOrder.weighted(weights), budget)
    return [g for g in gb.generators if not (g.variables() & set(drop))]


def univariate_coeffs(f: MPoly, var: int) -> list:
    """Coefficient list (constant term first) of a polynomial in one variable."""
    if f.variables() - {var}:
        raise ValueError("polynomial is not univariate in the given variable")
    deg = max((e[var] for e in f.terms), default=0)
    out = [f.field.zero] * (deg + 1)
    for e, c in f.terms.items():
        out[e[var]] = c
    return out


def poly_rem_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a by b in F_p[X]; coefficient lists are constant term first."""
    a = [x % p for x in a]
    b = [x % p for x in b]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b):
        if a[-1]:
            f = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, y in enumerate(b):
                a[shift + i] = (a[shift + i] - f * y) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(m, g)) for m in out):
            out.append(g)
    return out


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add_int(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def hilbert_numerator(gens: Sequence[Sequence[int]]) -> list[int]:
    """Numerator N(t) of the Hilbert series N(t)/(1-t)^n of S/(gens), S = k[x_0..x_{n-1}].

    Pivot recursion: N(I) = N(I + (p)) + t^deg(p) N(I : p) with p a pure power.
    """
    gens = _minimalize([tuple(g) for g in gens])
    return _hn(gens)


def _hn(gens):
    if not gens:
        return [1]
    supports = [frozenset(i for i, a in enumerate(g) if a) for g in gens]
    if not supports[0] and len(gens) == 1:
        return [0]
    # base case: pairwise coprime generators
    seen = set()
    coprime = True
    for s in supports:
        if seen & s:
            coprime = False
            break
        seen |= s
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul_int(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot on a variable of a non-pure-power generator
    counts = {}
    for s in supports:
        for i in s:
            counts[i] = counts.get(i, 0) + 1
    m = next(g for g, s in zip(gens, supports) if len(s) > 1)
    var = max((i for i, a in enumerate(m) if a), key=lambda i: counts[i])
    e = m[var]
    pivot = tuple(e if i == var else 0 for i in range(len(m)))
    plus = _minimalize(gens + [pivot])
    quot = _minimalize([tuple(max(0, a - e) if i == var else a for i, a in enumerate(g)) for g in gens])
    n_plus = _hn(plus)
    n_quot = _hn(quot)
    return _poly_add_int(n_plus, [0] * e + n_quot)


def dim_degree(gb: GroebnerBasis) -> tuple[int, int]:
    """(projective dimension, degree) of a homogeneous ideal from its leading terms.

    Dimension -1 means the projective scheme is empty; the degree is then
    the length of the (artinian) affine quotient.
    """
    if not gb.generators:
        raise ValueError("the zero ideal has no well-defined dim/degree here")
    if not all(g.is_homogeneous() for g in gb.generators):
        raise ValueError("dim_degree needs a homogeneous ideal")
    return _dim_degree_from_lms(gb.leading_monomials(), gb.n, projective=True)


def affine_dim_degree(gb: GroebnerBasis) -> tuple[int, int]:
    """(Krull dimension, degree) of S/I for an arbitrary ideal under a degree order."""
    if not gb.generators:
        raise ValueError("the zero ideal has no well-defined dim/degree here")
    if gb.order.kind == "lex":
        raise ValueError("affine dimension needs a degree-compatible order")
    return _dim_degree_from_lms(gb.leading_monomials(), gb.n, projective=False)


def _dim_degree_from_lms(lms, n, projective):
    num = hilbert_numerator(lms)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    if not any(num):
        return (-1, 0)
    # divide by (1 - t) as long as N(1) == 0
    k = 0
    while sum(num) == 0:
        # synthetic division of num by (1 - t)
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        k += 1
    d = n - k
    deg = sum(num)
    if projective:
        return (d - 1, deg)
    return (d, deg)


# ---------------------------------------------------------------------------
# zero-dimensional solving


@dataclass
class ZeroDimSolution:
    points: list
    unresolved: list  # univariate factors without roots in the coefficient field


def _univariate_roots(f: MPoly, var: int):
    F = f.field
    degree = max(e[var] for e in f.terms)
    coeffs = [F.zero] * (degree + 1)
    for e, c in f.terms.items():
        coeffs[e[var]] = c
    if degree == 0:
        return [], None
    if degree == 1:
        a, b = coeffs[1], coeffs[0]
        r = (-b * F.inv(a)) % F.p if F.p else -b * F.inv(a)
        return [r], None
    if F.p:
        p = F.p
        roots = [x for x in range(p) if sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0]
        return roots, (None if len(roots) == degree else f)
    return [], f


def solve_zero_dim(gb: GroebnerBasis, budget: int | None = None) -> ZeroDimSolution:
    """All solutions with coordinates in the coefficient field.

    Works through a lexicographic basis, branching on the roots of the
    univariate element in the last unresolved variable.
    """
    n = gb.n
    if gb.is_unit():
        return ZeroDimSolution([], [])
    point = _read_linear(gb.generators, n)
    if point is not None:
        return ZeroDimSolution([point], [])
    if gb.order.kind != "lex":
        probe = buchberger(gb.generators, TermOrder.grevlex(n), budget)
        dim, _ = _dim_degree_from_lms(probe.leading_monomials(), n, projective=False)
        if dim > 0:
            raise ValueError("positive-dimensional ideal")
    lex = TermOrder.lex(n)
    return _solve_rec(list(gb.generators), lex, budget, {})


def _read_linear(gens, n):
    """The unique point of a reduced basis made of x_i - c_i, one per variable."""
    if len(gens) != n:
        return None
    point = [None] * n
    for g in gens:
        if g.total_degree() != 1:
            return None
        lin = [e.index(1) for e in g.terms if sum(e) == 1]
        if len(lin) != 1:
            return None
        i = lin[0]
        F = g.field
        lead = g.terms[tuple(1 if j == i else 0 for j in range(n))]
        const = g.terms.get((0,) * n, F.zero)
        val = -const * F.inv(lead)
        point[i] = val % F.p if F.p else val
    if any(v is None for v in point):
        return None
    return tuple(point)


def _solve_rec(gens, lex, budget, fixed):
    n = lex.n
    gb = buchberger(gens, lex, budget)
    if gb.is_unit():
        return ZeroDimSolution([], [])
    gens = gb.generators
    # fully triangular and linear: read the point off
    lin = {}
    for g in gens:
        e, _ = g.leading_term(lex)
        if sum(e) == 1 and g.total_degree() == 1:
            lin[e.index(1)] = g
    if len(lin) == n and len(gens) == n:
        F = gens[0].field
        point = [None] * n
        for i, g in lin.items():
            const = g.terms.get((0,) * n, F.zero)
            point[i] = (-const) % F.p if F.p else -const
        if any(v is None for v in point):
            raise ValueError("positive-dimensional ideal")
        return ZeroDimSolution([tuple(point)], [])
    # univariate element in the last variable that is not yet linear
    for var in reversed(range(n)):
        uni = [g for g in gens if g.variables() == {var}]
        if uni and not (len(uni) == 1 and uni[0].total_degree() == 1):
            break
        if not uni:
            raise ValueError("positive-dimensional ideal")
    u = uni[0]
    roots, leftover = _univariate_roots(u, var)
    result = ZeroDimSolution([], [] if leftover is None else [leftover])
    for r in roots:
        xi = MPoly.var(var, n, u.field) - r
        sub = _solve_rec(gens + [xi], lex, budget, fixed)
        result.points.extend(sub.points)
        result.unresolved.extend(sub.unresolved)
    return result
