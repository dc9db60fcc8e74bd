"""p-adic numbers at explicit precision, Teichmüller lifts, Iwasawa's log,
and the group C_p^x / mu_infinity represented as (ord, log_p) pairs."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log

__all__ = [
    "InsufficientPrecision",
    "Padic",
    "PadicExt",
    "MuInfClass",
    "teichmuller",
    "iwasawa_log",
    "muinf_equal",
    "vp",
    "guard_digits",
]


class InsufficientPrecision(ArithmeticError):
    """A comparison could not be decided at the available precision."""


def vp(n, p: int) -> int:
    """p-adic valuation of a nonzero integer or rational."""
    n = Fraction(n)
    if n == 0:
        raise ValueError("valuation of zero")
    a, b, v = n.numerator, n.denominator, 0
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return v


def guard_digits(p: int, series_length: int) -> int:
    """Guard-digit policy: ceil(log_p(series length)) + 5."""
    return ceil(log(max(series_length, 2)) / log(p)) + 5


def _check_prime(p: int):
    if p < 3 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"p must be an odd prime, got {p}")


class Padic:
    """Element p^val * unit of Q_p with relative precision ``prec``.

    ``unit`` is an integer modulo p^prec coprime to p.  A zero known to
    absolute precision A is stored with unit = 0, prec = 0, val = A.
    """

    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val: int, unit: int, prec: int):
        self.p, self.val, self.prec = p, val, prec
        if prec <= 0 or unit % (p ** prec) == 0:
            self.unit, self.prec = 0, 0
            return
        unit %= p ** prec
        if unit % p == 0:
            raise ValueError("unit part divisible by p; use Padic.normalized")
        self.unit = unit

    # construction -------------------------------------------------------
    @classmethod
    def normalized(cls, p: int, val: int, n: int, prec: int) -> "Padic":
        """Value p^val * n known modulo p^(val + prec), n any integer."""
        mod = p ** prec
        n %= mod
        if n == 0:
            return cls(p, val + prec, 0, 0)
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        return cls(p, val + k, n, prec - k)

    @classmethod
    def from_rational(cls, x, p: int, prec: int) -> "Padic":
        """Rational x with relative precision ``prec`` (absolute if x = 0)."""
        _check_prime(p)
        x = Fraction(x)
        if x == 0:
            return cls.zero(p, prec)
        v = vp(x, p)
        y = x / Fraction(p) ** v
        mod = p ** prec
        u = y.numerator * pow(y.denominator, -1, mod) % mod
        return cls(p, v, u, prec)

    @classmethod
    def zero(cls, p: int, abs_prec: int) -> "Padic":
        return cls(p, abs_prec, 0, 0)

    # basic data ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.prec == 0

    @property
    def abs_prec(self) -> int:
        return self.val + self.prec

    def ord(self) -> int:
        if self.is_zero():
            raise InsufficientPrecision("valuation of a p-adic zero")
        return self.val

    def digits(self) -> list[int]:
        """Base-p digits of the unit part, least significant first."""
        out, u = [], self.unit
        for _ in range(self.prec):
            out.append(u % self.p)
            u //= self.p
        return out

    def residue_int(self) -> int:
        """Integer representative modulo p^abs_prec (requires val >= 0)."""
        if self.val < 0:
            raise ValueError("not a p-adic integer")
        return (self.unit * self.p ** self.val) % (self.p ** self.abs_prec)

    def to_json(self) -> dict:
        return {"p": self.p, "ord": self.val if not self.is_zero() else None,
                "digits": self.digits(), "precision": self.abs_prec}

    def _coerce(self, other) -> "Padic":
        if isinstance(other, Padic):
            if other.p != self.p:
                raise ValueError("mixing different primes")
            return other
        x = Fraction(other)
        if x == 0:
            return Padic.zero(self.p, 10 ** 6)
        need = max(self.prec, self.abs_prec - vp(x, self.p), 1) + 2
        return Padic.from_rational(x, self.p, need)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        p = self.p
        A = min(self.abs_prec, o.abs_prec)
        if self.is_zero() and o.is_zero():
            return Padic.zero(p, A)
        if self.is_zero():
            return Padic.normalized(p, o.val, o.unit, A - o.val) if A > o.val else Padic.zero(p, A)
        if o.is_zero():
            return Padic.normalized(p, self.val, self.unit, A - self.val) if A > self.val else Padic.zero(p, A)
        v = min(self.val, o.val)
        if A <= v:
            return Padic.zero(p, A)
        s = self.unit * p ** (self.val - v) + o.unit * p ** (o.val - v)
        return Padic.normalized(p, v, s, A - v)

    __radd__ = __add__

    def __neg__(self):
        return Padic(self.p, self.val, -self.unit, self.prec) if not self.is_zero() else self

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        p = self.p
        if self.is_zero() or o.is_zero():
            return Padic.zero(p, self.val + o.val)
        prec = min(self.prec, o.prec)
        return Padic(p, self.val + o.val, self.unit * o.unit, prec)

    __rmul__ = __mul__

    def inverse(self) -> "Padic":
        if self.is_zero():
            raise ZeroDivisionError("p-adic zero")
        mod = self.p ** self.prec
        return Padic(self.p, -self.val, pow(self.unit, -1, mod), self.prec)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_zero():
            return Padic.zero(self.p, self.val * n) if n else Padic.from_rational(1, self.p, 10 ** 6)
        mod = self.p ** self.prec
        return Padic(self.p, self.val * n, pow(self.unit, n, mod), self.prec)

    def with_prec(self, abs_prec: int) -> "Padic":
        """Truncate to the given absolute precision."""
        if abs_prec >= self.abs_prec:
            return self
        if self.is_zero() or abs_prec <= self.val:
            return Padic.zero(self.p, abs_prec)
        return Padic(self.p, self.val, self.unit, abs_prec - self.val)

    def equals(self, other, abs_prec: int | None = None) -> bool:
        d = self - other
        if abs_prec is not None:
            if d.abs_prec < abs_prec:
                raise InsufficientPrecision(f"difference known only to O(p^{d.abs_prec})")
            return d.is_zero() or d.val >= abs_prec
        return d.is_zero()

    def __repr__(self):
        if self.is_zero():
            return f"O({self.p}^{self.val})"
        return f"{self.p}^{self.val}*{self.unit} + O({self.p}^{self.abs_prec})"


# ---------------------------------------------------------------------------
# series kernels on integers mod p^M


def _log1p_int(z: int, p: int, M: int) -> int:
    """log(1 + z) mod p^M for an integer z divisible by p."""
    if z % p:
        raise ValueError("log series needs z = 0 mod p")
    K = M
    while K - log(K + 1) / log(p) < M + 1:
        K += 1
    L = int(log(K) / log(p)) + 1
    mod_hi = p ** (M + L)
    mod = p ** M
    total, zp = 0, 1
    for m in range(1, K + 1):
        zp = zp * z % mod_hi
        if zp == 0:
            break
        e, mm = 0, m
        while mm % p == 0:
            mm //= p
            e += 1
        term = (zp // p ** e) * pow(mm, -1, mod) % mod
        total += term if m % 2 else -term
    return total % mod


def _exp_int(z: int, p: int, M: int) -> int:
    """exp(z) mod p^M for an integer z divisible by p (p odd)."""
    if z % p:
        raise ValueError("exp series needs z = 0 mod p")
    K = ceil((M + 2) * (p - 1) / (p - 2)) + 2
    L = (K // (p - 1)) + 1
    mod_hi = p ** (M + L)
    mod = p ** M
    total, zp, fact_unit, fact_e = 1, 1, 1, 0
    for k in range(1, K + 1):
        zp = zp * z % mod_hi
        kk = k
        while kk % p == 0:
            kk //= p
            fact_e += 1
        fact_unit = fact_unit * kk % mod
        if zp == 0:
            break
        total += (zp // p ** fact_e) * pow(fact_unit, -1, mod)
    return total % mod


def teichmuller(x) -> Padic:
    """The (p-1)-st root of unity congruent to the unit x."""
    if not isinstance(x, Padic):
        raise TypeError("teichmuller expects a Padic")
    if x.is_zero() or x.val != 0:
        raise ValueError("teichmuller lift needs |x|_p = 1")
    mod = x.p ** x.prec
    return Padic(x.p, 0, pow(x.unit, x.p ** x.prec, mod), x.prec)


def iwasawa_log(x):
    """Iwasawa's branch of log_p: log_p(p) = 0 and roots of unity go to 0."""
    if isinstance(x, PadicExt):
        return x.log()
    if not isinstance(x, Padic):
        raise TypeError("iwasawa_log expects a Padic or PadicExt")
    if x.is_zero():
        raise ValueError("log of zero")
    p, M = x.p, x.prec
    mod = p ** M
    z = (pow(x.unit, p - 1, mod) - 1) % mod
    lg = _log1p_int(z, p, M) * pow(p - 1, -1, mod) % mod
    return Padic.normalized(p, 0, lg, M)


def padic_exp(x: Padic) -> Padic:
    """Exponential series on the disc ord > 0."""
    if x.is_zero():
        return Padic.from_rational(1, x.p, x.abs_prec)
    if x.val < 1:
        raise ValueError("exp_p series needs ord >= 1")
    M = x.abs_prec
    return Padic.normalized(x.p, 0, _exp_int(x.residue_int(), x.p, M), M)


# ---------------------------------------------------------------------------
# unramified quadratic extension


class PadicExt:
    """a + b*w in Q_p(w), w^2 = D with D a non-square unit mod p."""

    __slots__ = ("a", "b", "D")

    def __init__(self, a: Padic, b: Padic, D: int):
        p = a.p
        if D % p == 0 or pow(D % p, (p - 1) // 2, p) == 1:
            raise ValueError("PadicExt supports only the unramified extension (D a non-square unit mod p)")
        self.a, self.b, self.D = a, b, D

    @property
    def p(self) -> int:
        return self.a.p

    @classmethod
    def from_padic(cls, a: Padic, D: int) -> "PadicExt":
        return cls(a, Padic.zero(a.p, a.abs_prec), D)

    def _c(self, other) -> "PadicExt":
        if isinstance(other, PadicExt):
            return other
        a = self.a._coerce(other) if not isinstance(other, Padic) else other
        return PadicExt(a, Padic.zero(self.p, 10 ** 6), self.D)

    def __add__(self, other):
        o = self._c(other)
        return PadicExt(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __neg__(self):
        return PadicExt(-self.a, -self.b, self.D)

    def __sub__(self, other):
        return self + (-self._c(other))

    def __mul__(self, other):
        o = self._c(other)
        return PadicExt(self.a * o.a + self.b * o.b * self.D, self.a * o.b + self.b * o.a, self.D)

    __rmul__ = __mul__

    def conj(self) -> "PadicExt":
        return PadicExt(self.a, -self.b, self.D)

    def norm(self) -> Padic:
        return self.a * self.a - self.b * self.b * self.D

    def inverse(self) -> "PadicExt":
        n = self.norm().inverse()
        c = self.conj()
        return PadicExt(c.a * n, c.b * n, self.D)

    def __truediv__(self, other):
        return self * self._c(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = PadicExt(Padic.from_rational(1, self.p, 10 ** 6), Padic.zero(self.p, 10 ** 6), self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def ord(self) -> int:
        vals = [c.val for c in (self.a, self.b) if not c.is_zero()]
        if not vals:
            raise InsufficientPrecision("valuation of zero")
        return min(vals)

    @property
    def abs_prec(self) -> int:
        return min(self.a.abs_prec, self.b.abs_prec)

    def teichmuller(self) -> "PadicExt":
        if self.ord() != 0:
            raise ValueError("teichmuller lift needs a unit")
        q = self.p ** 2
        x = self
        for _ in range(self.abs_prec + 1):
            x = x ** q
        return x

    def log(self) -> "PadicExt":
        v = self.ord()
        p = self.p
        y = (self / Padic.from_rational(Fraction(p) ** v, p, self.abs_prec + 2)) ** (p * p - 1)
        z = y - 1
        N = z.abs_prec
        K = N
        while K - log(K + 1) / log(p) < N + 1:
            K += 1
        total = PadicExt(Padic.zero(p, N), Padic.zero(p, N), self.D)
        zp = None
        for m in range(1, K + 1):
            zp = z if zp is None else zp * z
            t = zp * Padic.from_rational(Fraction((-1) ** (m + 1), m), p, N + 2)
            total = total + t
        inv = Padic.from_rational(Fraction(1, p * p - 1), p, N + 2)
        total = total * inv
        return PadicExt(total.a.with_prec(N), total.b.with_prec(N), self.D)

    def equals(self, other, abs_prec: int | None = None) -> bool:
        o = self._c(other)
        return self.a.equals(o.a, abs_prec) and self.b.equals(o.b, abs_prec)

    def __repr__(self):
        return f"({self.a}) + ({self.b})*sqrt({self.D})"


# ---------------------------------------------------------------------------
# C_p^x / mu_infinity


@dataclass(frozen=True)
class MuInfClass:
    """x mod roots of unity, stored as (ord_p x, log_p x).

    The group is uniquely divisible, so rational powers are well defined.
    """

    ord: Fraction
    logv: Padic

    @classmethod
    def of(cls, x: Padic) -> "MuInfClass":
        return cls(Fraction(x.ord()), iwasawa_log(x))

    @classmethod
    def of_rational(cls, x, p: int, prec: int) -> "MuInfClass":
        return cls.of(Padic.from_rational(x, p, prec))

    @classmethod
    def one(cls, p: int, prec: int) -> "MuInfClass":
        return cls(Fraction(0), Padic.zero(p, prec))

    def __mul__(self, other: "MuInfClass") -> "MuInfClass":
        return MuInfClass(self.ord + other.ord, self.logv + other.logv)

    def __truediv__(self, other: "MuInfClass") -> "MuInfClass":
        return MuInfClass(self.ord - other.ord, self.logv - other.logv)

    def __pow__(self, q) -> "MuInfClass":
        q = Fraction(q)
        return MuInfClass(self.ord * q, self.logv * q if q else Padic.zero(self.logv.p, self.logv.abs_prec))

    def to_json(self) -> dict:
        return {"ord": str(self.ord), "log": self.logv.to_json()}


def muinf_equal(u: MuInfClass, v: MuInfClass, digits: int, guard: int = 0) -> bool:
    """Equality mod mu_infinity to O(p^(digits - guard)).

    Raises InsufficientPrecision when the log difference is not known to
    that many digits, so an undecidable comparison never reads as a pass.
    """
    if u.ord != v.ord:
        return False
    target = digits - guard
    d = u.logv - v.logv
    if d.is_zero():
        if d.abs_prec < target:
            raise InsufficientPrecision(f"log difference known only to O(p^{d.abs_prec}), need {target}")
        return True
    if d.val >= target:
        return True
    if d.abs_prec < target and d.val >= d.abs_prec:
        raise InsufficientPrecision("insufficient precision")
    return False
