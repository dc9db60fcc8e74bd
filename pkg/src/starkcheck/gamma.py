"""Archimedean special functions: log Gamma, and Barnes multiple zeta /
log multiple gamma of rank <= 2 near s = 0.

Rank r Barnes zeta: zeta(s, v, z) = sum_{m in N^r} (z + m.v)^{-s}.  With
f(t) = exp(-z t) / prod(1 - exp(-v_i t)) = sum_{k >= -r} a_k t^k near 0,

    zeta(s) = (1/Gamma(s)) [ sum_k a_k d^{s+k}/(s+k) + int_d^oo t^{s-1} f(t) dt ]

for any cut d inside the radius 2 pi / max v_i.  Hence zeta(-k) =
(-1)^k k! a_k and zeta'(0) = a_0 (log d + gamma) + sum_{k != 0} a_k d^k / k
+ int_d^oo f(t)/t dt.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

import mpmath as mp

from .arith import Ball, PrecisionCtx, bernoulli

__all__ = [
    "classical_log_gamma",
    "barnes_zeta",
    "log_multiple_gamma",
    "laurent_coeffs",
]


def _mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


def classical_log_gamma(x, ctx: PrecisionCtx | None = None) -> Ball:
    """log Gamma(x) for x > 0: argument shift plus Stirling with the
    standard remainder bound |B_{2K+2}| / ((2K+2)(2K+1) y^{2K+1})."""
    ctx = ctx or PrecisionCtx()
    with mp.workdps(ctx.digits + 15):
        x = _mpf(x)
        if x <= 0:
            raise ValueError("classical_log_gamma needs x > 0")
        Y = mp.mpf(ctx.digits) / 2 + 10
        shift = 0
        y = x
        while y < Y:
            y += 1
            shift += 1
        acc = (y - mp.mpf(1) / 2) * mp.log(y) - y + mp.log(2 * mp.pi) / 2
        K = 1
        eps = mp.mpf(10) ** (-(ctx.digits + 5))
        while True:
            b = bernoulli(2 * K)
            term = _mpf(b) / (2 * K * (2 * K - 1) * y ** (2 * K - 1))
            acc += term
            nb = abs(_mpf(bernoulli(2 * K + 2)))
            rem = nb / ((2 * K + 2) * (2 * K + 1) * y ** (2 * K + 1))
            if rem < eps or K > 4 * ctx.digits:
                break
            K += 1
        if shift:
            p = mp.mpf(1)
            logs = mp.mpf(0)
            for i in range(shift):
                p *= x + i
                if p > mp.mpf(10) ** 50:
                    logs += mp.log(p)
                    p = mp.mpf(1)
            logs += mp.log(p)
            acc -= logs
        return Ball(acc, rem + abs(acc) * mp.mpf(10) ** (-(ctx.digits + 10)))


# ---------------------------------------------------------------------------
# Laurent data


def laurent_coeffs(v, z, kmax: int):
    """a_k, k = -r..kmax, of exp(-z t)/prod(1 - exp(-v_i t)).

    Exact Fractions when z and v are rational, mpmath numbers otherwise.
    Returned as a dict k -> a_k.
    """
    r = len(v)
    exact = all(isinstance(x, (int, Fraction)) for x in list(v) + [z])
    conv = (lambda x: Fraction(x)) if exact else _mpf
    N = kmax + r + 1
    # t/(1 - exp(-v t)) = sum_n (-1)^n B_n v^n t^n / n!  ->  divide by v t
    series = [conv(1)] + [conv(0)] * (N - 1)
    for vi in v:
        vi = conv(vi)
        fac = [conv((-1) ** n * bernoulli(n)) * vi ** n / factorial(n) / vi for n in range(N)]
        series = [sum(series[a] * fac[n - a] for a in range(n + 1)) for n in range(N)]
    ez = [conv(-z) ** n / factorial(n) if exact else (-_mpf(z)) ** n / factorial(n) for n in range(N)]
    series = [sum(series[a] * ez[n - a] for a in range(n + 1)) for n in range(N)]
    return {n - r: series[n] for n in range(N)}


def _f(t, v, z):
    den = mp.mpf(1)
    for vi in v:
        den *= -mp.expm1(-vi * t)
    return mp.exp(-z * t) / den


def _cut(v):
    return min(mp.mpf(1) / 2, mp.pi / max(v))


def _series_terms(v, digits: int, d) -> int:
    ratio = d * max(v) / (2 * mp.pi)
    return int(mp.ceil((digits + 10) * mp.log(10) / -mp.log(ratio))) + 5


def _tail_integral(g, d, z, digits):
    """int_d^oo g(t) dt for an exponentially decaying g, with error estimate."""
    T = d + (digits + 10) * mp.log(10) / z + 10
    pts = [d]
    x = d
    while x < T:
        x = min(x * 4 if x > 1 else x + 1, T)
        pts.append(x)
    val, err = mp.quad(g, pts, error=True)
    # remainder beyond T bounded by g(T) / (z - tiny)
    return val, abs(err) + abs(g(T)) / z * 2


def barnes_zeta(s, v, z, ctx: PrecisionCtx | None = None) -> Ball:
    """Continued Barnes zeta(s, v, z) for rank 1 or 2."""
    ctx = ctx or PrecisionCtx()
    if len(v) not in (1, 2):
        raise ValueError("rank must be 1 or 2")
    with mp.workdps(ctx.digits + 20):
        vv = [_mpf(x) for x in v]
        zz = _mpf(z)
        if zz <= 0 or min(vv) <= 0:
            raise ValueError("Barnes zeta needs z > 0 and v_i > 0")
        if isinstance(s, int) or (isinstance(s, Fraction) and s.denominator == 1):
            s = int(s)
            if s <= 0:
                a = laurent_coeffs(v, z, -s)[-s]
                val = (-1) ** (-s) * factorial(-s) * (_mpf(a) if isinstance(a, Fraction) else a)
                return Ball(val, 0 if isinstance(a, Fraction) else abs(val) * mp.mpf(10) ** (-ctx.digits - 10))
        s = mp.mpmathify(s)
        d = _cut(vv)
        K = _series_terms(vv, ctx.digits, d)
        a = laurent_coeffs(vv, zz, K)
        ser = mp.fsum(a[k] * d ** (s + k) / (s + k) for k in a)
        I, err = _tail_integral(lambda t: t ** (s - 1) * _f(t, vv, zz), d, zz, ctx.digits)
        rg = mp.rgamma(s)
        val = rg * (ser + I)
        return Ball(val, abs(rg) * err * 10 + abs(val) * mp.mpf(10) ** (-ctx.digits - 5))


def log_multiple_gamma(z, v, ctx: PrecisionCtx | None = None) -> Ball:
    """zeta'(0, v, z) = log Gamma(z, v) (no modular constant)."""
    ctx = ctx or PrecisionCtx()
    if len(v) == 1:
        with mp.workdps(ctx.digits + 15):
            vv, zz = _mpf(v[0]), _mpf(z)
            y = z / v[0] if isinstance(z, Fraction) and isinstance(v[0], (int, Fraction)) else zz / vv
            lg = classical_log_gamma(y, ctx)
            rest = -mp.log(2 * mp.pi) / 2 - mp.log(vv) * (mp.mpf(1) / 2 - _mpf(y))
            return lg + rest
    if len(v) != 2:
        raise ValueError("rank must be 1 or 2")
    with mp.workdps(ctx.digits + 20):
        vv = [_mpf(x) for x in v]
        zz = _mpf(z)
        if zz <= 0 or min(vv) <= 0:
            raise ValueError("Barnes gamma needs z > 0 and v_i > 0")
        d = _cut(vv)
        K = _series_terms(vv, ctx.digits, d)
        a = laurent_coeffs(vv, zz, K)
        val = a[0] * (mp.log(d) + mp.euler)
        val += mp.fsum(a[k] * d ** k / k for k in a if k != 0)
        I, err = _tail_integral(lambda t: _f(t, vv, zz) / t, d, zz, ctx.digits)
        val += I
        tail = abs(a[K]) * d ** K * 4
        return Ball(val, err * 10 + tail + abs(val) * mp.mpf(10) ** (-ctx.digits - 5))
