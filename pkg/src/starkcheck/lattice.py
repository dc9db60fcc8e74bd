"""LLL reduction over the integers and integer-relation based recognition
of algebraic numbers."""
from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from .arith import PrecisionCtx

__all__ = ["lll", "integer_relation", "recognize_algebraic", "recognize_in_quadratic"]


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def lll(basis: list[list[int]], delta: Fraction = Fraction(3, 4)) -> list[list[int]]:
    """LLL-reduced basis of the lattice spanned by the integer rows.

    Exact rational Gram-Schmidt; meant for the small dimensions used in
    polynomial recognition."""
    b = [list(map(int, r)) for r in basis]
    n = len(b)
    if n == 0:
        return b

    def gso():
        bs, mu = [], [[Fraction(0)] * n for _ in range(n)]
        norms = []
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = _dot(b[i], bs[j]) / norms[j] if norms[j] else Fraction(0)
                v = [x - mu[i][j] * y for x, y in zip(v, bs[j])]
            bs.append(v)
            norms.append(_dot(v, v))
        return bs, mu, norms

    bs, mu, norms = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                for i in range(j + 1):
                    mu[k][i] -= q * (mu[j][i] if i < j else 1)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            bs, mu, norms = gso()
            k = max(k - 1, 1)
    return b


def integer_relation(xs, digits: int, height_bound: int = 10 ** 6):
    """Small integers c with sum c_i x_i ~ 0 (real or complex xs), or None."""
    n = len(xs)
    scale = mp.mpf(10) ** digits
    rows = []
    cplx = any(isinstance(x, mp.mpc) and mp.im(x) != 0 for x in xs)
    for i, x in enumerate(xs):
        row = [0] * n
        row[i] = 1
        row.append(int(mp.nint(scale * mp.re(x))))
        if cplx:
            row.append(int(mp.nint(scale * mp.im(x))))
        rows.append(row)
    red = lll(rows)
    for r in red:
        c = r[:n]
        if any(c) and max(abs(t) for t in c) <= height_bound:
            return c
    return None


def _poly_residual(coeffs, x):
    """|sum c_i x^i| for coefficients listed from the constant term."""
    return abs(mp.polyval(list(reversed(coeffs)), x))


def recognize_algebraic(x, max_degree: int, height_bound: int = 10 ** 6,
                        ctx: PrecisionCtx | None = None, guard: int | None = None):
    """Minimal integer polynomial of x (coefficients from the constant
    term, positive leading coefficient), or None.

    Degrees are tried in increasing order, so a returned polynomial has
    no factor of lower degree vanishing at x."""
    ctx = ctx or PrecisionCtx()
    with ctx.workdps(10):
        x = mp.mpmathify(x)
        guard = guard if guard is not None else max(ctx.digits - 10, ctx.digits // 2)
        for d in range(1, max_degree + 1):
            powers = [x ** i for i in range(d + 1)]
            c = integer_relation(powers, ctx.digits - 5 * d // 2, height_bound)
            if c is None or c[-1] == 0:
                continue
            if c[-1] < 0:
                c = [-t for t in c]
            scale = max(mp.mpf(1), max(abs(p) for p in powers))
            if _poly_residual(c, x) < mp.mpf(10) ** (-guard) * scale * sum(abs(t) for t in c):
                from math import gcd
                g = 0
                for t in c:
                    g = gcd(g, t)
                return [t // g for t in c]
    return None


def recognize_in_quadratic(x, omega, digits: int, height_bound: int = 10 ** 12):
    """Integers (a, b) with x ~ a + b omega, or None."""
    c = integer_relation([mp.mpmathify(x), mp.mpf(1), mp.mpmathify(omega)], digits, height_bound)
    if c is None or abs(c[0]) != 1:
        return None
    s = -c[0]
    a, b = s * c[1], s * c[2]
    if abs(x - a - b * omega) > mp.mpf(10) ** (-digits // 2) * max(1, abs(x)):
        return None
    return a, b
