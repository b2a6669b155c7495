"""Exact arithmetic in Q, Q(zeta_11) and prime fields F_p with p = 1 mod 11.

Elements of Q(zeta) are stored modulo the 11th cyclotomic polynomial
1 + x + ... + x^10, as ten integer coefficients over a common positive
denominator.  The coefficient of zeta^k is ``coeffs[k]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

N = 11
DEG = N - 1

DEFAULT_PRIMES = (23, 67)


def _normalize(nums: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = den
    for c in nums:
        g = gcd(g, c)
        if g == 1:
            break
    if g > 1:
        nums = [c // g for c in nums]
        den //= g
    return tuple(nums), den


def _fold11(prod: Sequence[int]) -> list[int]:
    """Reduce a coefficient list modulo x^11 - 1 and then modulo Phi_11."""
    c = [0] * N
    for k, v in enumerate(prod):
        if v:
            c[k % N] += v
    top = c[DEG]
    if top:
        return [v - top for v in c[:DEG]]
    return c[:DEG]


class CycloNum:
    """Element of Q(zeta_11) in canonical form."""

    __slots__ = ("_c", "_d", "_hash")

    def __init__(self, coeffs: Iterable = (), den: int = 1):
        vals = list(coeffs)
        if len(vals) > N:
            raise ValueError("at most 11 coefficients")
        # accept Fractions / ints, length up to 11 (zeta^10 folded away)
        fracs = [Fraction(v) for v in vals]
        common = 1
        for f in fracs:
            common = common * f.denominator // gcd(common, f.denominator)
        ints = [int(f * common) for f in fracs] + [0] * (N - len(fracs))
        top = ints[DEG]
        ints = [v - top for v in ints[:DEG]]
        self._c, self._d = _normalize(ints, common * den)
        self._hash = None

    @classmethod
    def _raw(cls, nums, den) -> "CycloNum":
        obj = cls.__new__(cls)
        obj._c, obj._d = _normalize(nums, den)
        obj._hash = None
        return obj

    @classmethod
    def zeta_pow(cls, k: int) -> "CycloNum":
        c = [0] * N
        c[k % N] = 1
        return cls(c)

    @classmethod
    def from_int(cls, v) -> "CycloNum":
        return cls([v])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._d) for c in self._c)

    @property
    def denominator(self) -> int:
        return self._d

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._c

    def is_zero(self) -> bool:
        return not any(self._c)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._c[0], self._d)

    def _coerce(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycloNum([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self._d, other._d
        if d1 == d2:
            return CycloNum._raw([a + b for a, b in zip(self._c, other._c)], d1)
        return CycloNum._raw([a * d2 + b * d1 for a, b in zip(self._c, other._c)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        obj = CycloNum.__new__(CycloNum)
        obj._c = tuple(-a for a in self._c)
        obj._d = self._d
        obj._hash = None
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloNum._raw([a * other for a in self._c], self._d)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        prod = [0] * (2 * DEG - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycloNum._raw(_fold11(prod), self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        """Exact inverse as the product of the other nine conjugates over the norm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_11)")
        num = CycloNum._raw(self._c, 1)
        conj = [num.galois(k) for k in range(2, N)]
        while len(conj) > 1:
            nxt = [conj[i] * conj[i + 1] for i in range(0, len(conj) - 1, 2)]
            if len(conj) % 2:
                nxt.append(conj[-1])
            conj = nxt
        rest = conj[0]
        norm = (num * rest).rational()
        return CycloNum([Fraction(c * self._d) / norm for c in rest._c])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(other, CycloNum) and other.is_rational():
            q = other.rational()
            if q == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_11)")
            return CycloNum._raw([c * q.denominator for c in self._c], self._d * q.numerator)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycloNum([other]) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloNum([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum([other])
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self._c == other._c and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._c, self._d))
        return self._hash

    def galois(self, k: int) -> "CycloNum":
        """Image under the automorphism zeta -> zeta^k, k prime to 11."""
        if k % N == 0:
            raise ValueError("k must be prime to 11")
        out = [0] * N
        for i, c in enumerate(self._c):
            out[(i * k) % N] += c
        return CycloNum._raw(_fold11(out), self._d)

    def conjugate(self) -> "CycloNum":
        return self.galois(N - 1)

    def is_real(self) -> bool:
        return self.conjugate() == self

    def trace(self) -> Fraction:
        """Absolute trace Q(zeta)/Q."""
        # Tr(zeta^0) = 10, Tr(zeta^k) = -1 for k != 0
        return Fraction(10 * self._c[0] - sum(self._c[1:]), self._d)

    def norm(self) -> Fraction:
        out = CycloNum([1])
        for k in range(1, N):
            out = out * self.galois(k)
        return out.rational()

    def complex(self) -> complex:
        """Floating-point value under zeta -> exp(2 pi i / 11); display only."""
        import cmath

        z = cmath.exp(2j * cmath.pi / N)
        return sum(c * z**k for k, c in enumerate(self._c)) / self._d

    def to_json(self) -> list[str]:
        return [f"{f.numerator}/{f.denominator}" for f in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "CycloNum":
        if len(data) != DEG:
            raise ValueError("expected 10 coefficients")
        return cls([Fraction(s) for s in data])

    def __repr__(self):
        return f"CycloNum({self})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self._c):
            if not c:
                continue
            f = Fraction(c, self._d)
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                terms.append(str(f))
            elif f == 1:
                terms.append(mono)
            elif f == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{f}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


ZERO = CycloNum()
ONE = CycloNum([1])
ZETA = CycloNum.zeta_pow(1)


def zeta(k: int = 1) -> CycloNum:
    return CycloNum.zeta_pow(k)


def gauss_sum() -> CycloNum:
    """sqrt(-11) as sum_t (t|11) zeta^t."""
    squares = {(t * t) % N for t in range(1, N)}
    return CycloNum([0] + [1 if t in squares else -1 for t in range(1, N)])


def cyclo_arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def conjugate(a: CycloNum) -> CycloNum:
    return a.conjugate()


def is_real(a: CycloNum) -> bool:
    return a.is_real()


# -- prime fields ---------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FpNum:
    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _other(self, other):
        if isinstance(other, FpNum):
            if other.p != self.p:
                raise ValueError("modulus mismatch")
            return other.value
        return other

    def __add__(self, other):
        return FpNum(self.value + self._other(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpNum(self.value - self._other(other), self.p)

    def __neg__(self):
        return FpNum(-self.value, self.p)

    def __mul__(self, other):
        return FpNum(self.value * self._other(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other(other) % self.p
        if v == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return FpNum(self.value * pow(v, -1, self.p), self.p)

    def __pow__(self, e: int):
        return FpNum(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        if isinstance(other, FpNum):
            return (self.value, self.p) == (other.value, other.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value


def roots_of_unity_11(p: int) -> list[int]:
    """All elements of multiplicative order 11 in F_p, ascending."""
    if not is_prime(p) or (p - 1) % N:
        raise ValueError(f"{p} is not a prime = 1 mod 11")
    return [g for g in range(2, p) if pow(g, N, p) == 1]


@dataclass(frozen=True)
class ReductionMap:
    """Ring map Z[zeta][1/den] -> F_p sending zeta to ``root``."""

    p: int
    root: int

    def __post_init__(self):
        if not is_prime(self.p) or (self.p - 1) % N:
            raise ValueError(f"{self.p} is not a prime = 1 mod 11")
        if self.root % self.p == 1 or pow(self.root, N, self.p) != 1:
            raise ValueError(f"{self.root} does not have order 11 mod {self.p}")

    @classmethod
    def canonical(cls, p: int) -> "ReductionMap":
        return cls(p, roots_of_unity_11(p)[0])

    def __call__(self, a) -> int:
        return reduce_int(a, self)

    def to_json(self) -> dict:
        return {"p": self.p, "root": self.root}


def reduce_int(a, m: ReductionMap) -> int:
    p = m.p
    if isinstance(a, (int, Fraction)):
        a = CycloNum([a])
    if a._d % p == 0:
        raise ZeroDivisionError(f"denominator {a._d} not invertible mod {p}")
    acc = 0
    for c in reversed(a._c):
        acc = (acc * m.root + c) % p
    return acc * pow(a._d, -1, p) % p


def reduce(a, m: ReductionMap) -> FpNum:
    return FpNum(reduce_int(a, m), m.p)


def lift_residues(residues: Sequence[int], p: int) -> list[int]:
    """Coefficients mod p of the element whose images under all ten maps
    zeta -> g (g of order 11) are ``residues`` (indexed like roots_of_unity_11)."""
    roots = roots_of_unity_11(p)
    if len(residues) != len(roots):
        raise ValueError("need one residue per root")
    # Vandermonde solve over F_p on the basis 1, zeta, ..., zeta^9
    rows = [[pow(g, k, p) for k in range(DEG)] + [r % p] for g, r in zip(roots, residues)]
    return _solve_mod_p(rows, p)


def _solve_mod_p(aug, p):
    n = len(aug)
    aug = [row[:] for row in aug]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [v * inv % p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(v - f * w) % p for v, w in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def rational_reconstruct(a: int, m: int) -> Fraction | None:
    """Wang's rational reconstruction of a mod m with |num|, den <= sqrt(m/2)."""
    a %= m
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)
