"""Exact rational helpers, Bernoulli machinery and ball arithmetic."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath as mp

__all__ = [
    "Ball",
    "PrecisionCtx",
    "bernoulli",
    "bernoulli_poly",
    "frac_part",
]


@dataclass(frozen=True)
class PrecisionCtx:
    """Working precision handed explicitly to every numerical routine.

    ``digits`` is the archimedean working precision in decimal digits,
    ``p`` the prime for p-adic work and ``padic_digits`` the p-adic
    precision N (values are meaningful modulo p^N).
    """

    digits: int = 40
    p: int | None = None
    padic_digits: int = 30

    def __post_init__(self):
        if self.digits <= 0 or self.padic_digits <= 0:
            raise ValueError("precision must be positive")
        if self.p is not None and self.p == 2:
            raise ValueError("p = 2 is not supported")

    def workdps(self, extra: int = 10):
        return mp.workdps(self.digits + extra)


# Bernoulli numbers: the only shared cache, guarded by a lock.
_BERN: list[Fraction] = [Fraction(1)]
_BERN_LOCK = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """B_n with the convention B_1 = -1/2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _BERN_LOCK:
        while len(_BERN) <= n:
            m = len(_BERN)
            s = sum(comb(m + 1, j) * _BERN[j] for j in range(m))
            _BERN.append(-s / (m + 1))
        return _BERN[n]


def bernoulli_poly(k: int, x) -> Fraction:
    """Exact value of the k-th Bernoulli polynomial B_k(x)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = Fraction(x)
    return sum(comb(k, j) * bernoulli(j) * x ** (k - j) for j in range(k + 1))


def frac_part(x: Fraction) -> Fraction:
    """Fractional part in [0, 1)."""
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


class Ball:
    """Complex ball: mpmath center plus a nonnegative error radius.

    Radii are propagated with first-order-safe bounds; every operation
    also adds a rounding allowance of a few ulps at the current precision.
    """

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=0):
        self.mid = mp.mpmathify(mid)
        self.rad = mp.mpf(abs(rad))

    @staticmethod
    def _ulp(x) -> mp.mpf:
        return abs(x) * mp.mpf(2) ** (-mp.mp.prec + 2) if x != 0 else mp.mpf(0)

    @classmethod
    def of(cls, x) -> "Ball":
        return x if isinstance(x, Ball) else cls(x, 0)

    def __add__(self, other):
        o = Ball.of(other)
        m = self.mid + o.mid
        return Ball(m, self.rad + o.rad + self._ulp(m))

    __radd__ = __add__

    def __neg__(self):
        return Ball(-self.mid, self.rad)

    def __sub__(self, other):
        return self + (-Ball.of(other))

    def __rsub__(self, other):
        return Ball.of(other) - self

    def __mul__(self, other):
        o = Ball.of(other)
        m = self.mid * o.mid
        r = abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad
        return Ball(m, r + self._ulp(m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Ball.of(other)
        if abs(o.mid) <= o.rad:
            raise ZeroDivisionError("ball contains zero")
        m = self.mid / o.mid
        den = abs(o.mid) - o.rad
        r = (self.rad + abs(m) * o.rad) / den
        return Ball(m, r + self._ulp(m))

    def exp(self) -> "Ball":
        m = mp.exp(self.mid)
        # |exp(z+d)-exp(z)| <= |exp(z)| (exp(|d|) - 1)
        return Ball(m, abs(m) * mp.expm1(self.rad) + self._ulp(m))

    def log(self) -> "Ball":
        if abs(self.mid) <= self.rad:
            raise ValueError("log of ball containing zero")
        m = mp.log(self.mid)
        return Ball(m, -mp.log1p(-self.rad / abs(self.mid)) + self._ulp(m))

    @property
    def real(self) -> "Ball":
        return Ball(mp.re(self.mid), self.rad)

    def contains(self, x, slack=0) -> bool:
        return abs(self.mid - x) <= self.rad + slack

    def overlaps(self, other, slack=0) -> bool:
        o = Ball.of(other)
        return abs(self.mid - o.mid) <= self.rad + o.rad + slack

    def guaranteed_digits(self) -> int:
        if self.rad == 0:
            return mp.mp.dps
        scale = max(abs(self.mid), mp.mpf(1))
        return max(0, int(mp.floor(-mp.log10(self.rad / scale))))

    def __repr__(self):
        d = max(1, min(self.guaranteed_digits(), mp.mp.dps))
        return f"Ball({mp.nstr(self.mid, d)} +/- {mp.nstr(self.rad, 3)})"


def ball_sum(items) -> Ball:
    total = Ball(0)
    for b in items:
        total = total + b
    return total
