"""Exact arithmetic in Q(zeta_N), used for character values and sums."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import mpmath as mp

__all__ = ["Cyclo", "cyclotomic_poly"]


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydiv_exact(a, b):
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] -= c * y
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, constant term first."""
    p = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            p = _polydiv_exact(p, list(cyclotomic_poly(d)))
    return tuple(p)


class Cyclo:
    """Element of Q(zeta_N) stored reduced modulo Phi_N."""

    __slots__ = ("N", "c")

    def __init__(self, N: int, coeffs):
        self.N = N
        phi = cyclotomic_poly(N)
        d = len(phi) - 1
        c = [Fraction(x) for x in coeffs]
        for i in range(len(c) - 1, d - 1, -1):
            t = c[i]
            if t:
                for j in range(d + 1):
                    c[i - d + j] -= t * phi[j]
        c = (c + [Fraction(0)] * d)[:d]
        self.c = tuple(c)

    @classmethod
    def zeta(cls, N: int, k: int = 1) -> "Cyclo":
        k %= N
        return cls(N, [0] * k + [1])

    @classmethod
    def rational(cls, N: int, x) -> "Cyclo":
        return cls(N, [x])

    def __add__(self, o):
        if not isinstance(o, Cyclo):
            o = Cyclo.rational(self.N, o)
        n = max(len(self.c), len(o.c))
        a = list(self.c) + [0] * (n - len(self.c))
        b = list(o.c) + [0] * (n - len(o.c))
        return Cyclo(self.N, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.N, [-x for x in self.c])

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if not isinstance(o, Cyclo):
            return Cyclo(self.N, [x * Fraction(o) for x in self.c])
        return Cyclo(self.N, _polymul(list(self.c), list(o.c)))

    __rmul__ = __mul__

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self.c}")
        return self.c[0] if self.c else Fraction(0)

    def to_complex(self):
        z = mp.exp(2j * mp.pi / self.N)
        return mp.fsum(mp.mpf(x.numerator) / x.denominator * z ** i for i, x in enumerate(self.c))

    def __eq__(self, o):
        if not isinstance(o, Cyclo):
            o = Cyclo.rational(self.N, o)
        return self.N == o.N and self.c == o.c

    def __hash__(self):
        return hash((self.N, self.c))

    def __repr__(self):
        return f"Cyclo({self.N}, {[str(x) for x in self.c]})"
