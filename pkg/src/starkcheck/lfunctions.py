"""Hecke L-functions of narrow ray class characters over Q and real
quadratic fields, at s = 0, by a smoothed approximate functional
equation; partial zeta derivatives by character inversion.

For a primitive character of conductor (g, infinite part) put
A = sqrt(|d_F| N g) and gamma(s) = prod_iota Gamma_R(s + lambda_iota),
lambda_iota = 1 exactly when chi(s_iota) = -1.  Then
Lambda(s) = A^s gamma(s) L(s) = int_0^oo Theta(t) t^s dt/t with
Theta(t) = sum a_n phi(n t / A), phi the inverse Mellin transform of
gamma.  Splitting the integral at t0 gives, for every t0 > 0,

    Lambda(s) = sum a_n I(n/A, s, t0) + W sum conj(a_n) I(n/A, 1 - s, 1/t0),
    I(x, s, T) = int_T^oo phi(x t) t^(s-1) dt.

The root number W is solved from two values of t0; a third gives the
error estimate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import mpmath as mp

from .arith import Ball, PrecisionCtx
from .quadfield import Field, Ideal
from .rayclass import Character, RayClassGroup, project

__all__ = [
    "LValue",
    "PrimitiveData",
    "primitive_data",
    "dirichlet_coefficients",
    "hecke_L",
    "partial_zeta_deriv0",
    "all_L_values",
    "partial_zeta0_numeric",
]


@dataclass
class LValue:
    character: tuple
    conductor: dict
    value: Ball
    derivative: Ball | None
    root_number: complex | None = None
    terms: int = 0
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "character": list(self.character),
            "conductor": self.conductor,
            "L(0)": mp.nstr(self.value.mid, 25),
            "L(0) radius": mp.nstr(self.value.rad, 3),
            "L'(0)": mp.nstr(self.derivative.mid, 25) if self.derivative is not None else None,
            "L'(0) radius": mp.nstr(self.derivative.rad, 3) if self.derivative is not None else None,
            "root_number": mp.nstr(self.root_number, 15) if self.root_number is not None else None,
            "terms": self.terms,
            "notes": self.notes,
        }


# ---------------------------------------------------------------------------
# conductors and primitive characters


def _divisors(f: Ideal) -> list[Ideal]:
    F = f.F
    fac = f.factor()
    out = []
    for es in product(*[range(e + 1) for _, e in fac]):
        I = F.unit_ideal()
        for (P, _), k in zip(fac, es):
            if k:
                I = I * P ** k
        out.append(I)
    out.sort(key=lambda I: (I.norm(), I.hnf))
    return out


@dataclass
class PrimitiveData:
    """chi as a character of the narrow ray class group modulo g, and the
    infinite type lambda."""

    chi: Character
    g: Ideal
    Gg: RayClassGroup
    exps: dict  # class of C_g -> exponent e, chi = zeta_N^e
    lam: tuple[int, ...]
    bad: list  # primes dividing f but not g

    @property
    def N(self) -> int:
        return self.chi.N

    def conductor_json(self) -> dict:
        return {"finite": self.g.to_json(), "norm": self.g.norm(),
                "infinite": [i for i, l in enumerate(self.lam) if l]}

    def value_exp(self, P: Ideal) -> int | None:
        """Exponent of chi_prim(P), None when P divides g."""
        if not P.is_coprime(self.g):
            return None
        return self.exps[self.Gg.class_of_ideal(P)]


def primitive_data(chi: Character) -> PrimitiveData:
    G = chi.G
    F, f = G.F, G.f
    n = G.n
    one = (1,) * n
    for g in _divisors(f):
        ok = True
        for x in f.residues():
            if not G._is_unit_res(x) or not g.contains(x - F(1)):
                continue
            if chi.exp_at(G.class_of_pair(f.reduce(x), one)):
                ok = False
                break
        if ok:
            break
    Gg = RayClassGroup(F, g)
    exps: dict = {}
    for c in range(G.order):
        d = project(G, Gg, c)
        e = chi.exp_at(c)
        if exps.setdefault(d, e) != e:
            raise RuntimeError("character does not factor through the conductor")
    lam = tuple(0 if chi.sign_at(i) == 1 else 1 for i in range(n))
    bad = [P for P, _ in f.factor() if P.is_coprime(g)]
    return PrimitiveData(chi, g, Gg, exps, lam, bad)


# ---------------------------------------------------------------------------
# Dirichlet coefficients


def _spf(M: int) -> list[int]:
    s = list(range(M + 1))
    for i in range(2, int(M ** 0.5) + 1):
        if s[i] == i:
            for j in range(i * i, M + 1, i):
                if s[j] == j:
                    s[j] = i
    return s


def _local_factor(pd: PrimitiveData, q: int, kmax: int) -> list:
    """a_{q^k}, k = 0..kmax, as complex numbers."""
    F = pd.chi.G.F
    N = pd.N

    def val(P):
        e = pd.value_exp(P)
        return None if e is None else mp.expjpi(mp.mpf(2 * e) / N)

    Ps = F.primes_above(q)
    zero = mp.mpc(0)
    if F.degree == 1 or F.split_type(q) == "ramified":
        z = val(Ps[0])
        return [mp.mpc(1)] + [(z ** k if z is not None else zero) for k in range(1, kmax + 1)]
    if len(Ps) == 1:  # inert, norm q^2
        z = val(Ps[0])
        out = [mp.mpc(1)]
        for k in range(1, kmax + 1):
            out.append(z ** (k // 2) if (k % 2 == 0 and z is not None) else zero)
        return out
    z1, z2 = val(Ps[0]), val(Ps[1])
    z1 = z1 if z1 is not None else zero
    z2 = z2 if z2 is not None else zero
    out = []
    for k in range(kmax + 1):
        out.append(mp.fsum(z1 ** i * z2 ** (k - i) for i in range(k + 1)))
    return out


def dirichlet_coefficients(pd: PrimitiveData, M: int) -> list:
    """[a_0 = 0, a_1, ..., a_M] of L(s, chi_prim) = sum a_n n^{-s}."""
    spf = _spf(M)
    a = [mp.mpc(0)] * (M + 1)
    if M >= 1:
        a[1] = mp.mpc(1)
    local: dict[int, list] = {}
    for n in range(2, M + 1):
        q = spf[n]
        k, m = 0, n
        while m % q == 0:
            m //= q
            k += 1
        if q not in local:
            kmax = 0
            t = 1
            while t * q <= M:
                t *= q
                kmax += 1
            local[q] = _local_factor(pd, q, kmax)
        a[n] = local[q][k] * a[m]
    return a


# ---------------------------------------------------------------------------
# kernels phi (inverse Mellin transforms of gamma) and their incomplete
# Mellin transforms on arithmetic grids


def _k0_taylor(y0, y1, c, r, rel_eps):
    """Taylor coefficients at c of the solution of x^2 y'' + x y' - x^2 y = 0
    with y(c) = y0, y'(c) = y1, enough for |x - c| <= r."""
    b = [y0, y1]
    k = 0
    c2 = c * c
    tol = abs(y0) * rel_eps
    while True:
        bm1 = b[k - 1] if k >= 1 else 0
        bm2 = b[k - 2] if k >= 2 else 0
        nxt = -((2 * c * k * (k + 1) + c * (k + 1)) * b[k + 1] + (k * k - c2) * b[k]
                - 2 * c * bm1 - bm2) / (c2 * (k + 1) * (k + 2))
        b.append(nxt)
        k += 1
        if k > 4 and abs(b[-1]) * r ** (len(b) - 1) + abs(b[-2]) * r ** (len(b) - 2) < tol:
            return b


def _poly_eval(b, d):
    acc = mp.mpf(0)
    for bk in reversed(b):
        acc = acc * d + bk
    return acc


def _poly_deriv_eval(b, d):
    acc = mp.mpf(0)
    for k in range(len(b) - 1, 0, -1):
        acc = acc * d + k * b[k]
    return acc


class _Kernel:
    """phi for the sorted infinite type lam."""

    def __init__(self, lam: tuple[int, ...]):
        self.lam = tuple(sorted(lam))
        self.degree = len(self.lam)
        self.bessel = self.lam in ((0, 0), (1, 1))

    def phi(self, u):
        if self.degree == 1:
            return 2 * u ** self.lam[0] * mp.exp(-mp.pi * u * u)
        if self.lam == (0, 1):
            return 2 * mp.exp(-2 * mp.pi * u)
        k = 4 * mp.besselk(0, 2 * mp.pi * u)
        return k * u if self.lam == (1, 1) else k

    def sweep(self, h, M, nodes, rel_eps):
        """Yield (n, us, phi(us)) for the intervals [n h, (n+1) h], n = M..1.

        The Bessel kernels are propagated downward by Taylor steps of the
        K_0 equation, which is stable since K_0 dominates as x decreases."""
        state = None
        for n in range(M, 0, -1):
            a, b = n * h, (n + 1) * h
            half, mid = (b - a) / 2, (a + b) / 2
            pts = [(mid + half * x, half * w) for x, w in nodes]
            us = [u for u, _ in pts]
            ws = [w for _, w in pts]
            if not self.bessel:
                yield n, us, ws, [self.phi(u) for u in us]
                continue
            c = 2 * mp.pi * mid
            if state is None:
                y0, y1 = mp.besselk(0, c), -mp.besselk(1, c)
            else:
                cprev, bprev = state
                y0, y1 = _poly_eval(bprev, c - cprev), _poly_deriv_eval(bprev, c - cprev)
            step = 2 * mp.pi * h
            coef = _k0_taylor(y0, y1, c, step, rel_eps)
            state = (c, coef)
            vals = []
            for u in us:
                k = 4 * _poly_eval(coef, 2 * mp.pi * u - c)
                vals.append(k * u if self.lam == (1, 1) else k)
            yield n, us, ws, vals

    def cutoff(self, digits: int):
        """U with phi(u) negligible beyond U."""
        L = (digits + 10) * mp.log(10)
        if self.degree == 1:
            return mp.sqrt(L / mp.pi) + 2
        return L / (2 * mp.pi) + 3


_GL_CACHE: dict = {}


def _gl_nodes(prec: int, degree: int = 5):
    key = (prec, degree)
    if key not in _GL_CACHE:
        from mpmath.calculus.quadrature import GaussLegendre
        _GL_CACHE[key] = GaussLegendre(mp.mp).calc_nodes(degree, prec)
    return _GL_CACHE[key]


_GRID_CACHE: dict = {}


def _grid(kernel: _Kernel, h, digits: int):
    """J[s][k][n] = int_{n h}^oo phi(u) u^(s-1) (log u)^k du, s, k in {0, 1},
    for n = 1..M with M h past the cutoff."""
    key = (kernel.lam, mp.nstr(h, digits + 5), digits)
    if key in _GRID_CACHE:
        return _GRID_CACHE[key]
    U = kernel.cutoff(digits)
    M = int(mp.ceil(U / h)) + 1
    nodes = _gl_nodes(mp.mp.prec)
    eps = mp.mpf(10) ** (-(digits + 15))
    J = [[[mp.mpf(0)] * (M + 2) for _ in range(2)] for _ in range(2)]
    # beyond M h everything is below the working accuracy
    for n, us, ws, ph in kernel.sweep(h, M, nodes, eps):
        acc = [[mp.mpf(0), mp.mpf(0)], [mp.mpf(0), mp.mpf(0)]]
        for u, wt, f in zip(us, ws, ph):
            w = wt * f
            lu = mp.log(u)
            acc[0][0] += w / u
            acc[0][1] += w * lu / u
            acc[1][0] += w
            acc[1][1] += w * lu
        for s in range(2):
            for k in range(2):
                J[s][k][n] = J[s][k][n + 1] + acc[s][k]
    _GRID_CACHE[key] = (J, M)
    return J, M


# ---------------------------------------------------------------------------
# L(0), L'(0)


_TAU = Fraction(6, 5)


def _gamma_factor_data(lam, A):
    """nu = order of the pole of gamma at 0 and h(0), h'(0) for
    1/(A^s gamma(s)) = s^nu h(s)."""
    nu = sum(1 for l in lam if l == 0)
    h0 = mp.mpf(1) / 2 ** nu
    dlog = -mp.log(A)
    for l in lam:
        if l == 0:
            dlog += (mp.euler + mp.log(mp.pi)) / 2
        else:
            dlog += (mp.log(mp.pi) - mp.digamma(mp.mpf(1) / 2)) / 2
    return nu, h0, h0 * dlog


def _completed_at_zero(pd: PrimitiveData, digits: int):
    """Lambda(0), Lambda'(0), the root number and an error estimate."""
    F = pd.chi.G.F
    A = mp.sqrt(abs(F.disc) * pd.g.norm()) if F.degree == 2 else mp.sqrt(pd.g.norm())
    ker = _Kernel(pd.lam)
    tau = mp.mpf(_TAU.numerator) / _TAU.denominator
    hs = {1: 1 / A, 2: tau / A, 3: 1 / (tau * A)}
    grids = {k: _grid(ker, h, digits) for k, h in hs.items()}
    M = max(m for _, m in grids.values())
    a = dirichlet_coefficients(pd, M)
    logx = [None] + [mp.log(mp.mpf(n) / A) for n in range(1, M + 1)]

    def sums(gs, gd):
        (Js, Ms), (Jd, Md) = grids[gs], grids[gd]
        S = mp.fsum(a[n] * Js[0][0][n] for n in range(1, Ms + 1))
        Sp = mp.fsum(a[n] * (Js[0][1][n] - logx[n] * Js[0][0][n]) for n in range(1, Ms + 1))
        D = mp.fsum(mp.conj(a[n]) * A / n * Jd[1][0][n] for n in range(1, Md + 1))
        Dp = mp.fsum(mp.conj(a[n]) * A / n * (Jd[1][1][n] - logx[n] * Jd[1][0][n]) for n in range(1, Md + 1))
        return S, Sp, D, Dp

    s1, s2, s3 = sums(1, 1), sums(2, 3), sums(3, 2)
    W = (s1[0] - s2[0]) / (s2[2] - s1[2])
    Wd = (s1[1] - s2[1]) / (s1[3] - s2[3])
    lam0 = [s[0] + W * s[2] for s in (s1, s2, s3)]
    lam1 = [s[1] - W * s[3] for s in (s1, s2, s3)]
    err = abs(lam0[2] - lam0[0]) + abs(lam1[2] - lam1[0]) + abs(abs(W) - 1) + abs(W - Wd) * (abs(s1[2]) + abs(s1[3]))
    err += mp.mpf(10) ** (-digits)
    return lam0[0], lam1[0], W, err, M, A


def _euler_bad(pd: PrimitiveData):
    """E(0), E'(0) for E(s) = prod_{P | f, P not | g} (1 - chi(P) N P^{-s})."""
    vals = []
    for P in pd.bad:
        e = pd.value_exp(P)
        z = mp.expjpi(mp.mpf(2 * e) / pd.N)
        vals.append((z, mp.log(P.norm())))
    E0 = mp.mpc(1)
    for z, _ in vals:
        E0 *= 1 - z
    E1 = mp.mpc(0)
    for i, (z, L) in enumerate(vals):
        t = z * L
        for j, (w, _) in enumerate(vals):
            if j != i:
                t *= 1 - w
        E1 += t
    return E0, E1


def _regulator(F: Field):
    return mp.log(F.fundamental_unit.real(0)) if F.fundamental_unit.real(0) > 1 \
        else -mp.log(F.fundamental_unit.real(0))


def _class_number(F: Field) -> int:
    from .rayclass import narrow_class_group
    hp = narrow_class_group(F).order
    return hp if F.fundamental_unit.norm() == -1 else hp // 2


def hecke_L(chi: Character, ctx: PrecisionCtx | None = None, want_derivative: bool = True) -> LValue:
    """L_f(0, chi) and L_f'(0, chi) for the ray class L-function
    sum_c chi(c) zeta(s, c) (imprimitive at primes dividing f)."""
    ctx = ctx or PrecisionCtx()
    G = chi.G
    F = G.F
    if F.degree == 2 and _class_number(F) != 1:
        raise NotImplementedError("only class number one fields are supported")
    with ctx.workdps(15):
        pd = primitive_data(chi)
        E0, E1 = _euler_bad(pd)
        notes = []
        W = None
        M = 0
        if pd.g.norm() == 1 and not any(pd.lam):
            # Dedekind zeta
            if F.degree == 1:
                L0, L1 = mp.mpf(-1) / 2, -mp.log(2 * mp.pi) / 2
            else:
                L0, L1 = mp.mpf(0), -_class_number(F) * _regulator(F) / 2
            err = mp.mpf(0)
            notes.append("trivial character: closed form")
        else:
            lam0, lam1, W, err, M, A = _completed_at_zero(pd, ctx.digits + 5)
            nu, h0, h1 = _gamma_factor_data(pd.lam, A)
            if nu == 0:
                L0, L1 = lam0 * h0, lam1 * h0 + lam0 * h1
            elif nu == 1:
                L0, L1 = mp.mpf(0), lam0 * h0
            else:
                L0, L1 = mp.mpf(0), mp.mpf(0)
                notes.append("even at every real place: double zero at s = 0")
            err = err * (abs(h0) + abs(h1)) * 4
        V0 = E0 * L0
        V1 = E1 * L0 + E0 * L1
        e0 = err * abs(E0)
        e1 = err * (abs(E0) + abs(E1))
        val = Ball(mp.chop(V0, mp.mpf(10) ** (-ctx.digits - 10)), e0)
        der = Ball(mp.chop(V1, mp.mpf(10) ** (-ctx.digits - 10)), e1) if want_derivative else None
    return LValue(chi.k, pd.conductor_json(), val, der, W, M, notes)


def all_L_values(G: RayClassGroup, ctx: PrecisionCtx | None = None) -> dict:
    """LValue for every character of G, keyed by the character exponents."""
    ctx = ctx or PrecisionCtx()
    return {chi.k: hecke_L(chi, ctx) for chi in G.characters()}


def partial_zeta_deriv0(G: RayClassGroup, c: int, ctx: PrecisionCtx | None = None,
                        Lvals: dict | None = None) -> Ball:
    """zeta'(0, c) = |C_f|^{-1} sum_chi conj(chi(c)) L_f'(0, chi)."""
    ctx = ctx or PrecisionCtx()
    Lvals = Lvals if Lvals is not None else all_L_values(G, ctx)
    with ctx.workdps(15):
        acc = Ball(0)
        for chi in G.characters():
            z = mp.conj(chi.numeric(c))
            acc = acc + Ball(z) * Lvals[chi.k].derivative
        out = acc / G.order
        return Ball(mp.re(out.mid), out.rad)


def partial_zeta0_numeric(G: RayClassGroup, c: int, ctx: PrecisionCtx | None = None,
                          Lvals: dict | None = None) -> Ball:
    """zeta(0, c) from the L-values (the dual of the exact Shintani value)."""
    ctx = ctx or PrecisionCtx()
    Lvals = Lvals if Lvals is not None else all_L_values(G, ctx)
    with ctx.workdps(15):
        acc = Ball(0)
        for chi in G.characters():
            acc = acc + Ball(mp.conj(chi.numeric(c))) * Lvals[chi.k].value
        out = acc / G.order
        return Ball(mp.re(out.mid), out.rad)
