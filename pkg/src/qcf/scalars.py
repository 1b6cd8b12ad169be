"""Exact scalars: rationals, cyclotomic field elements, roots of unity, q-combinatorics.

Every computation in the library runs over Q(zeta_m) for some conductor m.
An element is stored as a dense vector of rationals of length phi(m),
reduced modulo the m-th cyclotomic polynomial, so equality is decidable
by comparing coefficient vectors over a common conductor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class ScalarError(ArithmeticError):
    """Raised on invalid scalar operations (division by zero, bad root data)."""


def euler_phi(m: int) -> int:
    if m < 1:
        raise ScalarError(f"conductor must be positive, got {m}")
    result = m
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials with monic divisor.
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dj in enumerate(den):
            num[i - dd + j] -= c * dj
    if any(num):
        raise ScalarError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0] = -1
    num[m] = 1
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divide_exact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


# zeta_m^k reduced mod Phi_m, grown on demand per conductor
_POWER_CACHE: dict[int, list[tuple[Fraction, ...]]] = {}

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _zeta_power(m: int, k: int) -> tuple[Fraction, ...]:
    phi = euler_phi(m)
    powers = _POWER_CACHE.setdefault(m, [])
    if not powers:
        first = [_ZERO] * phi
        first[0] = _ONE
        powers.append(tuple(first))
    phim = cyclotomic_polynomial(m)
    while len(powers) <= k:
        prev = powers[-1]
        nxt = [_ZERO] + list(prev)
        lead = nxt.pop()  # coefficient of x^phi
        if lead:
            for j in range(phi):
                nxt[j] -= lead * phim[j]
        powers.append(tuple(nxt))
    return powers[k]


def _reduce_mod(m: int, coeffs: list[Fraction]) -> list[Fraction]:
    phi = euler_phi(m)
    out = list(coeffs[:phi]) + [_ZERO] * max(0, phi - len(coeffs))
    for k in range(phi, len(coeffs)):
        c = coeffs[k]
        if c:
            pw = _zeta_power(m, k)
            for j in range(phi):
                if pw[j]:
                    out[j] += c * pw[j]
    return out


class Cyc:
    """An element of Q(zeta_m), reduced mod the m-th cyclotomic polynomial.

    Mixed-conductor arithmetic lifts both operands to the lcm conductor.
    Values whose higher coefficients vanish normalize to conductor 1, so
    rationals always compare on the fast path.
    """

    __slots__ = ("m", "c")

    def __init__(self, m: int, c: tuple[Fraction, ...]):
        self.m = m
        self.c = c

    @staticmethod
    def _make(m: int, coeffs: list[Fraction]) -> "Cyc":
        if m > 1 and not any(coeffs[1:]):
            return Cyc(1, (coeffs[0],))
        return Cyc(m, tuple(coeffs))

    @staticmethod
    def rational(x) -> "Cyc":
        return Cyc(1, (Fraction(x),))

    @staticmethod
    def zero() -> "Cyc":
        return _CYC_ZERO

    @staticmethod
    def one() -> "Cyc":
        return _CYC_ONE

    @staticmethod
    def root(m: int, k: int = 1) -> "Cyc":
        """zeta_m^k as an exact scalar."""
        if m < 1:
            raise ScalarError(f"root order must be positive, got {m}")
        return Cyc._make(m, list(_zeta_power(m, k % m)))

    def _lift(self, big: int) -> list[Fraction]:
        if big == self.m:
            return list(self.c)
        step = big // self.m
        phi = euler_phi(big)
        out = [_ZERO] * phi
        for i, ci in enumerate(self.c):
            if ci:
                pw = _zeta_power(big, i * step)
                for j in range(phi):
                    if pw[j]:
                        out[j] += ci * pw[j]
        return out

    @staticmethod
    def _coerce(x) -> "Cyc":
        if isinstance(x, Cyc):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyc.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyc")

    def __add__(self, other) -> "Cyc":
        other = Cyc._coerce(other)
        if self.m == other.m:
            return Cyc._make(self.m, [a + b for a, b in zip(self.c, other.c)])
        big = self.m * other.m // gcd(self.m, other.m)
        a, b = self._lift(big), other._lift(big)
        return Cyc._make(big, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(self.m, tuple(-x for x in self.c))

    def __sub__(self, other) -> "Cyc":
        return self + (-Cyc._coerce(other))

    def __rsub__(self, other) -> "Cyc":
        return Cyc._coerce(other) + (-self)

    def __mul__(self, other) -> "Cyc":
        other = Cyc._coerce(other)
        if self.m == other.m:
            m = self.m
            a, b = self.c, other.c
        else:
            m = self.m * other.m // gcd(self.m, other.m)
            a, b = tuple(self._lift(m)), tuple(other._lift(m))
        n1, n2 = len(a), len(b)
        conv = [_ZERO] * (n1 + n2 - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return Cyc._make(m, _reduce_mod(m, conv))

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        """Multiplicative inverse; exists for every nonzero scalar."""
        if self.is_zero():
            raise ScalarError("division by zero")
        if self.m == 1:
            return Cyc(1, (1 / self.c[0],))
        # extended Euclid in Q[x] against the (irreducible) cyclotomic modulus
        phim = [Fraction(x) for x in cyclotomic_polynomial(self.m)]
        r0, r1 = phim, list(self.c)
        s0, s1 = [_ZERO], [_ONE]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                c = r1[0]
                coeffs = [x / c for x in s1]
                return Cyc._make(self.m, _reduce_mod(self.m, coeffs))
            q, rem = _poly_divmod(r0, r1)
            s_new = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, s_new

    def __truediv__(self, other) -> "Cyc":
        return self * Cyc._coerce(other).inv()

    def __rtruediv__(self, other) -> "Cyc":
        return Cyc._coerce(other) * self.inv()

    def __pow__(self, n: int) -> "Cyc":
        if n < 0:
            return self.inv() ** (-n)
        result = Cyc.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc.rational(other)
        elif not isinstance(other, Cyc):
            return NotImplemented
        if self.m == other.m:
            return self.c == other.c
        big = self.m * other.m // gcd(self.m, other.m)
        return self._lift(big) == other._lift(big)

    __hash__ = None  # values with different conductors may be equal

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_one(self) -> bool:
        return self.m == 1 and self.c[0] == 1

    def is_rational(self) -> bool:
        return self.m == 1

    def rational_value(self) -> Fraction:
        if self.m != 1:
            raise ScalarError("not a rational scalar")
        return self.c[0]

    def key(self) -> tuple:
        # hashable representation key (not canonical across conductors)
        return (self.m, self.c)

    def __repr__(self) -> str:
        return scalar_to_str(self)


_CYC_ZERO = Cyc(1, (_ZERO,))
_CYC_ONE = Cyc(1, (_ONE,))


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db = len(b) - 1
    while b and not b[-1]:
        b = b[:-1]
        db -= 1
    q = [_ZERO] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if not a[i]:
            continue
        c = a[i] / b[db]
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] -= c * b[j]
    while len(a) > 1 and not a[-1]:
        a.pop()
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


_MUL_CACHE: dict[tuple, Cyc] = {}


def cached_mul(a: Cyc, b: Cyc) -> Cyc:
    """Memoized product for hot verification loops (few distinct operands)."""
    key = (a.m, a.c, b.m, b.c)
    hit = _MUL_CACHE.get(key)
    if hit is None:
        hit = a * b
        _MUL_CACHE[key] = hit
    return hit


class RootOfUnity:
    """zeta_m^k with gcd(k, m) = 1: a primitive m-th root of unity."""

    __slots__ = ("order", "exponent")

    def __init__(self, order: int, exponent: int = 1):
        if order < 1:
            raise ScalarError(f"root order must be positive, got {order}")
        exponent %= order
        if gcd(exponent, order) != 1:
            raise ScalarError(
                f"exponent {exponent} not coprime to order {order}: root is not primitive"
            )
        self.order = order
        self.exponent = exponent

    def scalar(self) -> Cyc:
        return Cyc.root(self.order, self.exponent)

    def power(self, t: int) -> "RootOfUnity":
        """zeta^t, renormalized to a primitive root of its own order."""
        e = (self.exponent * t) % self.order
        d = gcd(e, self.order)
        return RootOfUnity(self.order // d, e // d)

    def inverse(self) -> "RootOfUnity":
        return self.power(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self.order == other.order and self.exponent == other.exponent

    def __hash__(self) -> int:
        return hash((self.order, self.exponent))

    def __repr__(self) -> str:
        return f"RootOfUnity({self.order}, {self.exponent})"


ONE_ROOT = RootOfUnity(1, 0)
MINUS_ONE = RootOfUnity(2, 1)


def q_int(n: int, q: Cyc) -> Cyc:
    """1 + q + ... + q^(n-1); empty sum for n = 0."""
    if n < 0:
        raise ScalarError(f"q-integer needs n >= 0, got {n}")
    total = Cyc.zero()
    power = Cyc.one()
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def q_factorial(n: int, q: Cyc) -> Cyc:
    if n < 0:
        raise ScalarError(f"q-factorial needs n >= 0, got {n}")
    out = Cyc.one()
    for k in range(1, n + 1):
        out = out * q_int(k, q)
    return out


def q_binomial(n: int, k: int, q: Cyc) -> Cyc:
    """Gaussian binomial via the Pascal recurrence; never divides by a q-integer."""
    if k < 0 or n < 0:
        raise ScalarError(f"q-binomial needs nonnegative arguments, got ({n}, {k})")
    if k > n:
        raise ScalarError(f"q-binomial undefined for k > n: ({n}, {k})")
    qpow = [Cyc.one()]
    for _ in range(k):
        qpow.append(qpow[-1] * q)
    memo: dict[tuple[int, int], Cyc] = {}

    def rec(a: int, b: int) -> Cyc:
        if b == 0 or b == a:
            return Cyc.one()
        got = memo.get((a, b))
        if got is None:
            got = rec(a - 1, b - 1) + qpow[b] * rec(a - 1, b)
            memo[(a, b)] = got
        return got

    return rec(n, k)


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_to_str(c: Cyc) -> str:
    """Serialization used in JSON reports: "p/q" or "cyc(m)[c0,c1,...]"."""
    if c.m == 1:
        return _frac_str(c.c[0])
    return f"cyc({c.m})[" + ",".join(_frac_str(x) for x in c.c) + "]"
