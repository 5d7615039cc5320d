"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A scalar of *level* n is the unique reduced residue modulo the n-th
cyclotomic polynomial Phi_n: an integer coefficient vector of length
phi(n) = deg Phi_n over a single positive denominator, normalised so
the gcd of all entries and the denominator is 1.  Level 1 is plain Q.

Scalars of different levels never mix silently; callers lift to a
common level first (`lift`, `common_level`).  Plain ints and
Fractions coerce to the level of the other operand, since Q embeds
in every cyclotomic field.

Multiplication runs on integer vectors: sparse convolution followed
by reduction with precomputed rows for x^e mod Phi_n.  Division only
happens in `inv`, which is off the hot path and uses a polynomial
extended Euclid over Q.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


class ScalarError(ValueError):
    """Raised for invalid levels, level mismatches, or division by zero."""


def _divexact(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # exact division of integer polynomials, b monic, constant term first
    rem = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = rem[i + len(b) - 1]
        out[i] = c
        if c:
            for j, bj in enumerate(b):
                rem[i + j] -= c * bj
    if any(rem):
        raise ScalarError("inexact polynomial division")
    return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first, monic."""
    if n < 1:
        raise ScalarError(f"level must be positive, got {n}")
    if n == 1:
        return (-1, 1)
    poly: tuple[int, ...] = tuple([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly = _divexact(poly, cyclotomic_polynomial(d))
    return poly


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _reduction_rows(level: int) -> tuple[tuple[int, ...], ...]:
    # rows[e] = integer vector of x^e mod Phi_level, for
    # e in [0, max(level, 2*deg - 1)); enough for products of reduced
    # residues and for zeta powers below the level
    poly = cyclotomic_polynomial(level)
    deg = len(poly) - 1
    top = max(level, 2 * deg - 1)
    rows: list[tuple[int, ...]] = []
    for e in range(deg):
        row = [0] * deg
        row[e] = 1
        rows.append(tuple(row))
    for e in range(deg, top):
        prev = rows[e - 1]
        carry = prev[deg - 1]
        shifted = [0] + list(prev[: deg - 1])
        if carry:
            for t in range(deg):
                shifted[t] -= carry * poly[t]
        rows.append(tuple(shifted))
    return tuple(rows)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


class Cyclo:
    """An element of Q(zeta_level), immutable and hashable."""

    __slots__ = ("level", "num", "den", "_hash")

    level: int
    num: tuple[int, ...]
    den: int

    def __init__(self, level: int, num, den: int = 1):
        deg = euler_phi(level)
        vec = list(num)
        if len(vec) != deg:
            raise ScalarError(
                f"level {level} needs {deg} coefficients, got {len(vec)}"
            )
        if den == 0:
            raise ScalarError("zero denominator")
        if den < 0:
            den = -den
            vec = [-c for c in vec]
        g = den
        for c in vec:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if g > 1:
            den //= g
            vec = [c // g for c in vec]
        if not any(vec):
            den = 1
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "num", tuple(vec))
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo is immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_fraction(value, level: int = 1) -> Cyclo:
        fr = Fraction(value)
        vec = [0] * euler_phi(level)
        vec[0] = fr.numerator
        return Cyclo(level, vec, fr.denominator)

    @staticmethod
    def zero(level: int = 1) -> Cyclo:
        return Cyclo(level, [0] * euler_phi(level), 1)

    @staticmethod
    def one(level: int = 1) -> Cyclo:
        return Cyclo.from_fraction(1, level)

    @staticmethod
    def zeta(level: int, power: int = 1) -> Cyclo:
        """zeta_level ** power, reduced."""
        if level < 1:
            raise ScalarError(f"level must be positive, got {level}")
        e = power % level
        return Cyclo(level, _reduction_rows(level)[e], 1)

    @staticmethod
    def from_coeffs(level: int, coeffs) -> Cyclo:
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = lcm(den, f.denominator)
        vec = [int(f * den) for f in fracs]
        return Cyclo(level, vec, den)

    # -- views -------------------------------------------------------

    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    # -- level handling ----------------------------------------------

    def lift(self, level: int) -> Cyclo:
        """Embed into Q(zeta_level); level must be a multiple of self.level."""
        if level == self.level:
            return self
        if level % self.level != 0:
            raise ScalarError(f"cannot lift level {self.level} to {level}")
        step = level // self.level
        rows = _reduction_rows(level)
        deg = euler_phi(level)
        vec = [0] * deg
        for i, c in enumerate(self.num):
            if c:
                row = rows[step * i]
                for t in range(deg):
                    vec[t] += c * row[t]
        return Cyclo(level, vec, self.den)

    def _coerce(self, other) -> Cyclo:
        if isinstance(other, Cyclo):
            if other.level != self.level:
                raise ScalarError(
                    f"level mismatch {self.level} vs {other.level}; lift explicitly"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo.from_fraction(other, self.level)
        raise TypeError(f"cannot combine Cyclo with {type(other).__name__}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> Cyclo:
        other = self._coerce(other)
        da, db = self.den, other.den
        if da == db:
            return Cyclo(self.level, [x + y for x, y in zip(self.num, other.num)], da)
        l = lcm(da, db)
        fa, fb = l // da, l // db
        return Cyclo(
            self.level,
            [x * fa + y * fb for x, y in zip(self.num, other.num)],
            l,
        )

    __radd__ = __add__

    def __neg__(self) -> Cyclo:
        return Cyclo(self.level, [-c for c in self.num], self.den)

    def __sub__(self, other) -> Cyclo:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Cyclo:
        return (-self) + other

    def __mul__(self, other) -> Cyclo:
        other = self._coerce(other)
        a, b = self.num, other.num
        deg = len(a)
        if deg == 1:
            return Cyclo(self.level, [a[0] * b[0]], self.den * other.den)
        sa = [i for i in range(deg) if a[i]]
        sb = [j for j in range(deg) if b[j]]
        if not sa or not sb:
            return Cyclo.zero(self.level)
        acc = [0] * (2 * deg - 1)
        for i in sa:
            ai = a[i]
            for j in sb:
                acc[i + j] += ai * b[j]
        rows = _reduction_rows(self.level)
        out = acc[:deg]
        for e in range(deg, 2 * deg - 1):
            c = acc[e]
            if c:
                row = rows[e]
                for t in range(deg):
                    out[t] += c * row[t]
        return Cyclo(self.level, out, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> Cyclo:
        if self.is_zero():
            raise ScalarError("division by zero")
        if self.is_rational():
            fr = 1 / self.as_fraction()
            return Cyclo.from_fraction(fr, self.level)
        support = [i for i, c in enumerate(self.num) if c]
        if len(support) == 1:
            # c * zeta^k inverts to (1/c) * zeta^{-k}
            k = support[0]
            z = Cyclo.zeta(self.level, self.level - k)
            return z * Cyclo.from_fraction(Fraction(self.den, self.num[k]), self.level)
        # extended Euclid in Q[x] against Phi_level
        mod = [Fraction(c) for c in cyclotomic_polynomial(self.level)]
        a = [Fraction(c, self.den) for c in self.num]
        r0, r1 = mod, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            r1 = _ptrim(r1)
            if len(r1) == 1 and r1[0] != 0:
                c = r1[0]
                coeffs = [x / c for x in s1]
                break
            if not any(r1):
                raise ScalarError("not invertible")  # impossible modulo Phi
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        deg = euler_phi(self.level)
        coeffs = coeffs + [Fraction(0)] * max(0, deg - len(coeffs))
        out = Cyclo.from_coeffs(self.level, coeffs[:deg])
        # anything of degree >= deg in s1 would have been reduced already;
        # check the defining property rather than trust the tail trim
        if not (out * self).is_one():
            raise ScalarError("internal inversion failure")
        return out

    def __truediv__(self, other) -> Cyclo:
        other = self._coerce(other)
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k: int) -> Cyclo:
        if k < 0:
            return self.inv() ** (-k)
        out = Cyclo.one(self.level)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- comparison ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_fraction(other, self.level)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return (
            self.level == other.level
            and self.den == other.den
            and self.num == other.num
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.level, self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- roots of unity -------------------------------------------------

    def order_of_unity(self) -> int | None:
        """Multiplicative order if self is a root of unity, else None.

        The roots of unity inside Q(zeta_n) form a cyclic group of order
        lcm(2, n), so testing the divisors of that bound is exhaustive.
        """
        if self.is_zero():
            return None
        bound = lcm(2, self.level)
        if not (self**bound).is_one():
            return None
        for d in _divisors(bound):
            if (self**d).is_one():
                return d
        return None  # unreachable

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"Cyclo({self.level}, {self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.num):
            if not c:
                continue
            fr = Fraction(c, self.den)
            if i == 0:
                parts.append(str(fr))
            else:
                head = "" if fr == 1 else ("-" if fr == -1 else f"{fr}*")
                sym = f"z{self.level}" if i == 1 else f"z{self.level}^{i}"
                parts.append(f"{head}{sym}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


def common_level(a: Cyclo, b: Cyclo) -> tuple[Cyclo, Cyclo]:
    """Lift both scalars to the lcm of their levels."""
    l = lcm(a.level, b.level)
    return a.lift(l), b.lift(l)


def _ptrim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _pdivmod(a, b):
    a = list(a)
    b = _ptrim(list(b))
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / b[-1]
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _ptrim(a[: len(b) - 1] or [Fraction(0)])
