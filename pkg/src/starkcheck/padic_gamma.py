"""Morita's p-adic gamma function and the p-adic log gamma LGamma_p(z,(1))
on |z|_p > 1.

With the twist zeta_p(-k,(1),z) = (p^{ord z} theta(z))^{-k} zeta(-k,(1),z),
the interpolating function is

    zeta_p(s,(1),z) = z <z>^{-s} / (s-1) * sum_j binom(1-s, j) B_j z^{-j},

and its derivative at s = 0 is the p-adic Stirling series

    LGamma_p(z) = (z - 1/2) log_p z - z + sum_{j>=1} B_{2j} / (2j(2j-1) z^{2j-1}).
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, log

from .arith import PrecisionCtx, bernoulli
from .padic import MuInfClass, Padic, _exp_int, iwasawa_log, teichmuller, vp

__all__ = [
    "morita_gamma",
    "morita_gamma_bruteforce",
    "lgamma_p",
    "zeta_p_hurwitz",
    "gamma_p_class",
]


def _power_sum(k: int, q: int) -> int:
    """sum_{i=0}^{q-1} i^k exactly (Faulhaber)."""
    s = sum(comb(k + 1, j) * bernoulli(j) * Fraction(q) ** (k + 1 - j) for j in range(k + 1))
    s = s / (k + 1)
    if k == 0:
        return q
    assert s.denominator == 1
    return int(s)


def morita_gamma_bruteforce(n: int, p: int) -> int:
    """(-1)^n prod_{j<n, p not | j} j as an exact integer (small n only)."""
    out = 1
    for j in range(1, n):
        if j % p:
            out *= j
    return -out if n % 2 else out


def morita_gamma(x, ctx: PrecisionCtx | None = None, p: int | None = None) -> Padic:
    """Gamma_p(x) for x in Z_p, modulo p^N.

    n = x mod p^N, n - 1 = q p + s.  The product of the q full blocks is
    ((p-1)!)^q * exp(sum_k (-1)^{k+1} p^k H_k S_k(q) / k) with
    H_k = sum_{t<p} t^{-k} and S_k(q) = sum_{i<q} i^k.
    """
    if isinstance(x, Padic):
        p = x.p
        if not x.is_zero() and x.val < 0:
            raise ValueError("morita_gamma needs ord_p(x) >= 0; use lgamma_p")
        N = x.abs_prec if ctx is None else min(x.abs_prec, ctx.padic_digits)
        n = x.residue_int() if not x.is_zero() else 0
    else:
        ctx = ctx or PrecisionCtx(p=p)
        p = p or ctx.p
        if p is None or p == 2:
            raise ValueError("an odd prime p is required")
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ValueError("morita_gamma needs ord_p(x) >= 0; use lgamma_p")
        N = ctx.padic_digits
        mod = p ** N
        n = x.numerator * pow(x.denominator, -1, mod) % mod
    mod = p ** N
    if n == 0:
        n = mod
    q, s = divmod(n - 1, p)
    # block part
    K = N + 2
    while K - log(K) / log(p) < N + 2:
        K += 1
    L = int(log(K) / log(p)) + 2
    M = N + L
    modM = p ** M
    total = 0
    for k in range(1, K + 1):
        Hk = sum(pow(t, -k, modM) for t in range(1, p)) % modM
        Sk = _power_sum(k, q) % (modM * p ** L)
        e, kk = 0, k
        while kk % p == 0:
            kk //= p
            e += 1
        term = p ** (k - e) * Hk * Sk * pow(kk, -1, modM) % modM
        total += term if k % 2 else -term
    total %= p ** N
    block = pow(factorial(p - 1), q, mod) * _exp_int(total, p, N) % mod
    for t in range(1, s + 1):
        block = block * (q * p + t) % mod
    val = -block if n % 2 else block
    return Padic(p, 0, val % mod, N)


def lgamma_p(z, ctx: PrecisionCtx | None = None, p: int | None = None) -> Padic:
    """LGamma_p(z,(1)) for rational z with |z|_p > 1, to absolute precision N."""
    ctx = ctx or PrecisionCtx(p=p)
    p = p or ctx.p
    if p is None or p == 2:
        raise ValueError("an odd prime p is required")
    z = Fraction(z)
    if z == 0 or vp(z, p) >= 0:
        raise ValueError("lgamma_p needs |z|_p > 1")
    e = -vp(z, p)
    N = ctx.padic_digits
    # Stirling tail: term j has ord >= (2j-1) e - 1 - ord(2j(2j-1))
    acc = -z
    j = 1
    while True:
        if (2 * j - 1) * e - 1 - log(2 * j * (2 * j - 1)) / log(p) > N + 2:
            break
        acc += bernoulli(2 * j) / (2 * j * (2 * j - 1)) / z ** (2 * j - 1)
        j += 1
    W = N + e + 4
    lz = iwasawa_log(Padic.from_rational(z, p, W + e))
    res = lz * (z - Fraction(1, 2)) + acc
    return res.with_prec(N)


def zeta_p_hurwitz(s: int, z, ctx: PrecisionCtx | None = None, p: int | None = None) -> Padic:
    """zeta_p(s,(1),z) at an integer s != 1 from the binomial expansion."""
    ctx = ctx or PrecisionCtx(p=p)
    p = p or ctx.p
    z = Fraction(z)
    N = ctx.padic_digits
    pz = Padic.from_rational(z, p, N + 10)
    omega = teichmuller(Padic.from_rational(z / Fraction(p) ** vp(z, p), p, N + 10)) * Fraction(p) ** vp(z, p)
    bracket = pz / omega
    if s > 1:
        raise NotImplementedError("only s <= 0 is needed")
    k = -s
    ser = sum(comb(1 + k, j) * bernoulli(j) * z ** (-j) for j in range(k + 2))
    return (pz * bracket ** k * Fraction(1, s - 1) * ser).with_prec(N)


def gamma_p_class(z, ctx: PrecisionCtx | None = None, p: int | None = None) -> MuInfClass:
    """Gamma_p(z) modulo mu_infinity.  On Z_p this is Morita's function;
    for ord_p z < 0 it is the class (0, LGamma_p(z))."""
    ctx = ctx or PrecisionCtx(p=p)
    p = p or ctx.p
    z = Fraction(z)
    if z != 0 and vp(z, p) < 0:
        return MuInfClass(Fraction(0), lgamma_p(z, ctx, p))
    return MuInfClass.of(morita_gamma(z, ctx, p))
