"""Yoshida's class invariants X(c) = G + V + W, their p-adic analogues
X_p(c) over Q, the closed forms over Q, gamma_p, the fiber-sum relations
and the refined Gross-Stark check for imaginary quadratic K."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath as mp

from .arith import Ball, PrecisionCtx, ball_sum
from .gamma import classical_log_gamma, log_multiple_gamma
from .padic import MuInfClass, Padic, iwasawa_log, muinf_equal
from .padic_gamma import gamma_p_class, lgamma_p, morita_gamma
from .quadfield import Field, FieldElement, Ideal, embed, Embedding
from .rayclass import RayClassGroup, choose_ac, choose_pi_q, fiber, narrow_class_group
from .shintani import Cone, ShintaniDomain, enumerate_rset, partial_zeta_neg_int, shintani_domain

__all__ = [
    "InvariantValue",
    "CorrectionTermProvider",
    "ZeroCorrection",
    "ProviderMissing",
    "compute_X",
    "compute_Xp",
    "closed_form_X",
    "closed_form_Xp",
    "check_prop24",
    "gamma_p_lower",
    "gamma_p_lower_closed",
    "ladder_check",
    "class_of_r",
    "fiber_product_ratio",
    "verify_rGc_over_Q",
    "artin_fiber",
    "imag_quadratic_data",
    "padic_partial_zeta_deriv0",
    "choice_independence",
]


def _mpf(x):
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / x.denominator
    return mp.mpf(x)


class ProviderMissing(RuntimeError):
    """A degree-2 value was requested as exact without a V-term provider."""


class CorrectionTermProvider:
    """Supplies V(c; D, a_c) = sum_i a_i log eps_i as a list of pairs
    (a_i, eps_i) with a_i in F and eps_i totally positive units."""

    name = "abstract"

    def terms(self, G: RayClassGroup, c: int, domain: ShintaniDomain, ac: Ideal) -> list:
        raise NotImplementedError

    def value(self, G, c, domain, ac, ctx: PrecisionCtx) -> Ball:
        with ctx.workdps(20):
            acc = Ball(0)
            for a, eps in self.terms(G, c, domain, ac):
                a = a if isinstance(a, FieldElement) else G.F(a)
                acc = acc + Ball(a.real(0) * mp.log(eps.real(0)))
            return acc

    def padic_value(self, G, c, domain, ac, ctx: PrecisionCtx) -> Padic:
        e = Embedding.padic(G.F, ctx.p)
        acc = Padic.zero(ctx.p, ctx.padic_digits)
        for a, eps in self.terms(G, c, domain, ac):
            a = a if isinstance(a, FieldElement) else G.F(a)
            acc = acc + embed(a, e, ctx) * iwasawa_log(embed(eps, e, ctx))
        return acc


class ZeroCorrection(CorrectionTermProvider):
    """The empty sum: V = 0 for F = Q (n - 1 = 0 units)."""

    name = "zero"

    def terms(self, G, c, domain, ac):
        if G.F.degree != 1:
            raise ProviderMissing("the zero V-term is only valid for F = Q")
        return []


@dataclass
class InvariantValue:
    c: int
    label: str
    archimedean: Ball
    padic: Padic | None = None
    provenance: dict = field(default_factory=dict)
    status: str = "full"

    def to_json(self) -> dict:
        return {
            "class": self.label,
            "X": mp.nstr(self.archimedean.mid, 30),
            "radius": mp.nstr(self.archimedean.rad, 3),
            "Xp": self.padic.to_json() if self.padic is not None else None,
            "provenance": self.provenance,
            "status": self.status,
        }


def _provenance(G, domain, ac, pis) -> dict:
    return {
        "D": [repr(C) for C in domain.cones],
        "a_c": ac.to_json(),
        "pi_q": {repr(q): repr(x) for q, x in pis.items()},
    }


def _pi_of(F: Field, g: Ideal, pi: dict | None):
    """pi_g = prod pi_q^{ord_q g} and the choices used."""
    pi = dict(pi or {})
    used = {}
    x = F(1)
    for q, e in g.factor():
        if q not in pi:
            pi[q] = choose_pi_q(F, q)
        used[q] = pi[q]
        x = x * pi[q] ** e
    return x, used


def _h_plus(F: Field) -> int:
    return narrow_class_group(F).order if F.degree == 2 else 1


# ---------------------------------------------------------------------------
# X and X_p


def _zeta0(G, c, domain, ac) -> Fraction:
    return partial_zeta_neg_int(G, c, 0, domain, ac)


def compute_X(G: RayClassGroup, c: int, ctx: PrecisionCtx | None = None,
              domain: ShintaniDomain | None = None, ac: Ideal | None = None,
              provider: CorrectionTermProvider | None = None, pi: dict | None = None,
              require_full: bool = False, with_padic: bool = False) -> InvariantValue:
    """X(c; D, a_c) with certified radius.

    Over Q the V-term is the empty sum.  Over a real quadratic field
    without a provider the result carries status "G+W only".
    """
    ctx = ctx or PrecisionCtx()
    F = G.F
    domain = domain or shintani_domain(F)
    ac = ac if ac is not None else choose_ac(G, c)
    if provider is None and F.degree == 1:
        provider = ZeroCorrection()
    if provider is None and require_full:
        raise ProviderMissing("a CorrectionTermProvider is needed for exact degree-2 X")
    with ctx.workdps(20):
        terms = []
        for j, cone in enumerate(domain.cones):
            R = enumerate_rset(G, c, cone, ac, j)
            for x in R.points:
                z = sum((xi * vi for xi, vi in zip(x, cone.v)), F(0))
                if F.degree == 1:
                    terms.append(log_multiple_gamma(z.a, [vi.a for vi in cone.v], ctx))
                else:
                    zz = z.a if z.is_rational() else z.real(0)
                    vv = [vi.a if vi.is_rational() else vi.real(0) for vi in cone.v]
                    terms.append(log_multiple_gamma(zz, vv, ctx))
        Gt = ball_sum(terms)
        z0 = _zeta0(G, c, domain, ac)
        pig, used = _pi_of(F, ac * G.f, pi)
        Wt = Ball(-_mpf(z0) / _h_plus(F) * mp.log(pig.real(0)))
        X = Gt + Wt
        status = "G+W only"
        if provider is not None:
            X = X + provider.value(G, c, domain, ac, ctx)
            status = "full"
    val = InvariantValue(c, G.label(c), X, None, _provenance(G, domain, ac, used), status)
    if with_padic and ctx.p is not None:
        val.padic = compute_Xp(G, c, ctx, domain, ac, pi)
    return val


def compute_Xp(G: RayClassGroup, c: int, ctx: PrecisionCtx, domain: ShintaniDomain | None = None,
               ac: Ideal | None = None, pi: dict | None = None) -> Padic:
    """X_p(c; D, a_c) = G_p + W_p for F = Q and p | f."""
    F = G.F
    p = ctx.p
    if F.degree != 1:
        raise NotImplementedError("X_p is implemented for F = Q only")
    if p is None or p == 2:
        raise ValueError("an odd prime p is required")
    m = G.f.hnf[0]
    if m % p:
        raise ValueError(f"p = {p} does not divide the modulus {m}")
    domain = domain or shintani_domain(F)
    ac = ac if ac is not None else F.unit_ideal()
    N = ctx.padic_digits
    work = PrecisionCtx(ctx.digits, p, N + 5)
    acc = Padic.zero(p, N + 5)
    for j, cone in enumerate(domain.cones):
        v = cone.v[0].a
        lv = iwasawa_log(Padic.from_rational(v, p, N + 5)) if v != 1 else None
        for (x,) in enumerate_rset(G, c, cone, ac, j).points:
            y = x  # z / v
            t = lgamma_p(y, work, p)
            if lv is not None:
                t = t - lv * (Fraction(1, 2) - y)
            acc = acc + t
    z0 = _zeta0(G, c, domain, ac)
    pig, _ = _pi_of(F, ac * G.f, pi)
    if z0:
        acc = acc - iwasawa_log(Padic.from_rational(pig.a, p, N + 5)) * z0
    return acc.with_prec(N)


# ---------------------------------------------------------------------------
# closed forms over Q


def closed_form_X(r: int, m: int, ctx: PrecisionCtx | None = None) -> Ball:
    """log of Gamma(r/m) (m/d)^{r/m - 1/2} (2 pi)^{-1/2}, d = gcd(r, m)."""
    ctx = ctx or PrecisionCtx()
    d = gcd(r, m)
    q = Fraction(r, m)
    with ctx.workdps(20):
        lg = classical_log_gamma(q, ctx)
        return lg + Ball(_mpf(q - Fraction(1, 2)) * mp.log(m // d) - mp.log(2 * mp.pi) / 2)


def _prime_to_p(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def closed_form_Xp(r: int, m: int, ctx: PrecisionCtx) -> MuInfClass:
    """Class of Gamma_p(r/m) (m/d)_0^{r/m - 1/2} modulo mu_infinity (p | m/d)."""
    p = ctx.p
    d = gcd(r, m)
    if (m // d) % p:
        raise ValueError("the closed form needs p | m/d")
    q = Fraction(r, m)
    m0 = _prime_to_p(m // d, p)
    g = gamma_p_class(q, ctx, p)
    return g * MuInfClass.of_rational(m0, p, ctx.padic_digits + 5) ** (q - Fraction(1, 2))


def class_of_r(G: RayClassGroup, r: int) -> int:
    """The class c_{r/m} in C_(m) for r coprime to m."""
    return G.class_of_element(G.F(r))


# ---------------------------------------------------------------------------
# fiber sums


def _padic_residual(d: Padic) -> int:
    """Number of p-adic digits to which d vanishes."""
    return d.abs_prec if d.is_zero() else d.ord()


def check_prop24(F: Field, f: Ideal, q: Ideal, c: int, side: str = "archimedean",
                 ctx: PrecisionCtx | None = None) -> dict:
    """Fiber sum of X over phi^{-1}(c), C_{fq} -> C_f, against the
    closed right-hand side, with a_c = q and q^{-1} a_c = (1).

    For a real quadratic F only the zeta(0) shadow of the identity is
    checked (the V-term is not available)."""
    ctx = ctx or PrecisionCtx()
    G = RayClassGroup(F, f)
    Gq = RayClassGroup(F, f * q)
    fib = fiber(Gq, G, c)
    coprime = not q.divides(f)
    cq = G.div(c, G.class_of_ideal(q)) if coprime else None
    report = {"f": f.to_json(), "q": q.to_json(), "class": G.label(c), "side": side,
              "case": "q does not divide f" if coprime else "q divides f",
              "fiber": [Gq.label(x) for x in fib]}
    if F.degree != 1 or side == "zeta0":
        lhs = sum((partial_zeta_neg_int(Gq, x, 0) for x in fib), Fraction(0))
        rhs = partial_zeta_neg_int(G, c, 0)
        if coprime:
            rhs -= partial_zeta_neg_int(G, cq, 0)
        report.update(side="zeta0", lhs=str(lhs), rhs=str(rhs), passed=lhs == rhs)
        return report
    one = F.unit_ideal()
    if side == "archimedean":
        with ctx.workdps(20):
            lhs = ball_sum(compute_X(Gq, x, ctx, ac=one).archimedean for x in fib)
            rhs = compute_X(G, c, ctx, ac=q).archimedean
            if coprime:
                z = partial_zeta_neg_int(G, cq, 0)
                rhs = rhs - compute_X(G, cq, ctx, ac=one).archimedean + Ball(_mpf(z) * mp.log(q.hnf[0]))
            res = abs(lhs.mid - rhs.mid)
        report.update(lhs=mp.nstr(lhs.mid, 30), rhs=mp.nstr(rhs.mid, 30), residual=mp.nstr(res, 5),
                      radius=mp.nstr(lhs.rad + rhs.rad, 5), passed=bool(res <= lhs.rad + rhs.rad))
        return report
    if side != "padic":
        raise ValueError(f"unknown side {side!r}")
    p = ctx.p
    if p is None or f.hnf[0] % p:
        raise ValueError("the p-adic side needs p | f")
    N = ctx.padic_digits
    lhs = Padic.zero(p, N)
    for x in fib:
        lhs = lhs + compute_Xp(Gq, x, ctx, ac=one)
    rhs = compute_Xp(G, c, ctx, ac=q)
    if coprime:
        z = partial_zeta_neg_int(G, cq, 0)
        rhs = rhs - compute_Xp(G, cq, ctx, ac=one)
        if z:
            rhs = rhs + iwasawa_log(Padic.from_rational(q.hnf[0], p, N + 5)) * z
    digits = _padic_residual((lhs - rhs).with_prec(N))
    report.update(lhs=lhs.to_json(), rhs=rhs.to_json(), agreement_digits=digits, passed=digits >= N)
    return report


# ---------------------------------------------------------------------------
# gamma_p of the Q case


def _reduce_rm(r: int, m: int) -> tuple[int, int]:
    d = gcd(r, m)
    return r // d, m // d


def gamma_p_lower(r: int, m: int, ctx: PrecisionCtx) -> MuInfClass:
    """gamma_p(c_{pr/m}) = p^{zeta(0, c_{r/m})} prod_{lifts} exp_p(X_p), p not | m.

    The product runs over the fiber of C_{(p m/d)} -> C_{(m/d)} above the
    class of p r/d, with d = gcd(r, m) and 1 <= r <= m."""
    p = ctx.p
    if p is None or m % p == 0:
        raise ValueError("gamma_p_lower needs p not dividing m")
    if not 1 <= r <= m:
        raise ValueError("need 1 <= r <= m")
    r1, m1 = _reduce_rm(r, m)
    Q = Field(1)
    small = RayClassGroup(Q, Q.ideal(m1))
    big = RayClassGroup(Q, Q.ideal(p * m1))
    c = small.class_of_element(Q(p * r1))
    N = ctx.padic_digits
    acc = Padic.zero(p, N)
    for x in fiber(big, small, c):
        acc = acc + compute_Xp(big, x, ctx)
    return MuInfClass(Fraction(1, 2) - Fraction(r, m), acc)


def gamma_p_lower_closed(r: int, m: int, ctx: PrecisionCtx) -> MuInfClass:
    """Class of p^{1/2 - r/m} Gamma_p(<pr/m>) (m/d)^{<pr/m> - r/m}."""
    p = ctx.p
    q = Fraction(r, m)
    t = Fraction(p * r, m)
    t -= t.numerator // t.denominator
    m1 = m // gcd(r, m)
    N = ctx.padic_digits
    g = MuInfClass.of(morita_gamma(t, PrecisionCtx(ctx.digits, p, N + 5), p))
    return MuInfClass(Fraction(1, 2) - q, Padic.zero(p, N + 5)) * g * \
        MuInfClass.of_rational(m1, p, N + 5) ** (t - q)


def ladder_check(r: int, m: int, ctx: PrecisionCtx) -> dict:
    """The telescoping used in the 2-power induction, for odd m:
    prod_{k<f} (g(2^k r)^2 / g(2^{k+1} r))^{2^{f-1-k}} = g(r)^{2^f - 1}
    with g = gamma_p_lower and f the order of 2 mod m."""
    if m % 2 == 0 or gcd(r, m) != 1:
        raise ValueError("need odd m and r coprime to m")
    f = 1
    while pow(2, f, m) != 1:
        f += 1
    cache = {}

    def g(k):
        rr = (pow(2, k, m) * r) % m or m
        if rr not in cache:
            cache[rr] = gamma_p_lower(rr, m, ctx)
        return cache[rr]

    lhs = MuInfClass.one(ctx.p, ctx.padic_digits)
    for k in range(f):
        lhs = lhs * ((g(k) ** 2 / g(k + 1)) ** (2 ** (f - 1 - k)))
    rhs = g(0) ** (2 ** f - 1)
    return {"r": r, "m": m, "f": f, "passed": muinf_equal(lhs, rhs, ctx.padic_digits - f - 2)}


# ---------------------------------------------------------------------------
# Galois fibers over Q and the refined Gross-Stark check


def _units_mod(m: int) -> list[int]:
    return [r for r in range(1, m + 1) if gcd(r, m) == 1]


def artin_fiber(m: int, fixing: list[int], s: int) -> list[int]:
    """Residues r mod m with sigma_r restricting to sigma_s on H, where H is
    the fixed field of the subgroup generated by ``fixing``."""
    U = {1 % m}
    frontier = [1 % m]
    while frontier:
        nxt = []
        for u in frontier:
            for g in fixing:
                v = u * g % m
                if v not in U:
                    U.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted({(s * u) % m or m for u in U})


def fiber_product_ratio(m: int, fixing: list[int], s: int, ctx: PrecisionCtx) -> tuple[Ball, MuInfClass | None]:
    """(sum of X(c), class of prod exp_p(X_p(c))) over phi_H^{-1}(sigma_s).

    The archimedean entry is the log of the product of exp(X(c)); the
    p-adic entry is present when p | m."""
    Q = Field(1)
    G = RayClassGroup(Q, Q.ideal(m))
    rs = artin_fiber(m, fixing, s)
    with ctx.workdps(20):
        arch = ball_sum(compute_X(G, class_of_r(G, r), ctx).archimedean for r in rs)
    pad = None
    if ctx.p is not None and m % ctx.p == 0:
        acc = Padic.zero(ctx.p, ctx.padic_digits)
        for r in rs:
            acc = acc + compute_Xp(G, class_of_r(G, r), ctx)
        pad = MuInfClass(Fraction(0), acc)
    return arch, pad


def imag_quadratic_data(D: int, p: int) -> dict:
    """Conductor, Artin character and a generator of the prime above p
    picked out by the embedding sqrt(D) -> the smaller root mod p."""
    K = Field(D)
    if D >= 0:
        raise ValueError("K must be imaginary quadratic")
    from .quadfield import kronecker, elements_of_norm
    dK = K.disc
    f0 = abs(dK)
    if p == 2 or f0 % p == 0 or kronecker(dK, p) != 1:
        raise ValueError(f"splitting hypothesis (b) violated: p = {p} does not split in {K}")
    e = Embedding.padic(K, p, 0, require_split=True)
    alpha = None
    for x in elements_of_norm(K, p):
        if embed(x, e, PrecisionCtx(p=p, padic_digits=10)).ord() > 0:
            alpha = x
            break
    if alpha is None:
        raise RuntimeError(f"no generator of the prime above {p} found; class number > 1?")
    return {"K": K, "disc": dK, "f0": f0, "embedding": e, "alpha": alpha,
            "chi": lambda r: kronecker(dK, r)}


def verify_rGc_over_Q(D: int, p: int, sigma: int = 0, ctx: PrecisionCtx | None = None) -> dict:
    """Refined Gross-Stark identity for H = K = Q(sqrt D) imaginary quadratic, F = Q, f = f0 p.

    sigma = 0 is the identity, 1 complex conjugation.  Both sides are
    compared as classes modulo mu_infinity; the archimedean product is
    also checked against p^r."""
    ctx = ctx or PrecisionCtx(p=p)
    if ctx.p != p:
        ctx = PrecisionCtx(ctx.digits, p, ctx.padic_digits)
    data = imag_quadratic_data(D, p)
    f0, chi, e = data["f0"], data["chi"], data["embedding"]
    N = ctx.padic_digits
    Q = Field(1)
    G0 = RayClassGroup(Q, Q.ideal(f0))
    G = RayClassGroup(Q, Q.ideal(f0 * p))

    def phi(r):
        return 0 if chi(r) == 1 else 1

    # left side: (p^r, prod exp_p X_p)^{h_K}, h_K = 1
    pinv = pow(p, -1, f0)
    r_ord = sum((partial_zeta_neg_int(G0, class_of_r(G0, r * pinv % f0 or f0), 0)
                 for r in _units_mod(f0) if phi(r) == sigma), Fraction(0))
    rs = [r for r in _units_mod(f0 * p) if phi(r) == sigma]
    xp = Padic.zero(p, N)
    for r in rs:
        xp = xp + compute_Xp(G, class_of_r(G, r), ctx)
    with ctx.workdps(20):
        arch = ball_sum(compute_X(G, class_of_r(G, r), ctx).archimedean for r in rs)
        arch_res = abs(arch.mid - _mpf(r_ord) * mp.log(p))
    lhs = MuInfClass(r_ord, -xp)
    # right side: alpha^sigma = prod_c (sigma phi(c) alpha_K)^{zeta(0, c^{-1})}
    a = data["alpha"]
    ctx_e = PrecisionCtx(ctx.digits, p, N + 5)
    imgs = [MuInfClass.of(embed(a, e, ctx_e)), MuInfClass.of(embed(a.conj(), e, ctx_e))]
    rhs = MuInfClass.one(p, N + 5)
    for r in _units_mod(f0):
        z = partial_zeta_neg_int(G0, class_of_r(G0, pow(r, -1, f0) % f0 or f0), 0)
        rhs = rhs * imgs[(sigma + phi(r)) % 2] ** z
    d = (lhs.logv - rhs.logv).with_prec(N)
    return {
        "K": repr(data["K"]), "p": p, "f0": f0, "sigma": "id" if sigma == 0 else "conj",
        "alpha_K": repr(a),
        "ord_lhs": str(lhs.ord), "ord_rhs": str(rhs.ord), "ord_equal": lhs.ord == rhs.ord,
        "arch_equals_p_power": mp.nstr(arch_res, 5),
        "arch_radius": mp.nstr(arch.rad, 5),
        "agreement_digits": _padic_residual(d),
        "passed": lhs.ord == rhs.ord and _padic_residual(d) >= N and arch_res <= arch.rad,
    }


# ---------------------------------------------------------------------------
# zeta_p'(0, c) over Q and independence of choices


def padic_partial_zeta_deriv0(r: int, m: int, ctx: PrecisionCtx) -> tuple[Padic, MuInfClass]:
    """zeta_p'(0, c_{r/m}) = LGamma_p(r/m) - (1/2 - r/m) log_p m for the
    class of r' in C_(m'), r'/m' = r/m reduced, p | m'.  Returned as a
    number and as a class modulo mu_infinity."""
    p = ctx.p
    r1, m1 = _reduce_rm(r, m)
    if p is None or p == 2:
        raise ValueError("an odd prime p is required")
    if m1 % p:
        raise ValueError(f"p = {p} does not divide m/d = {m1}")
    q = Fraction(r1, m1)
    q -= q.numerator // q.denominator
    q = q or Fraction(1)
    N = ctx.padic_digits
    work = PrecisionCtx(ctx.digits, p, N + 5)
    val = lgamma_p(q, work, p) - iwasawa_log(Padic.from_rational(m1, p, N + 5)) * (Fraction(1, 2) - q)
    val = val.with_prec(N)
    return val, MuInfClass(Fraction(0), val)


def _variant_json(domain, ac, pi) -> dict:
    return {"D": [repr(C) for C in domain.cones], "a_c": ac.to_json(),
            "pi": {repr(q): repr(x) for q, x in (pi or {}).items()}}


def choice_independence(G: RayClassGroup, c: int, variants: list | None = None,
                        ctx: PrecisionCtx | None = None) -> dict:
    """X(c; D, a_c) and X_p(c; D, a_c) for several choices (D, a_c, pi).

    Over Q the archimedean values must agree (E_+ is trivial) and the
    p-adic ones agree as classes mod mu_infinity.  Over a real quadratic
    field only pi is varied (by the totally positive unit), and the
    difference of the G+W values must be a rational multiple of log eps_+
    found by an integer relation of height <= 10^6."""
    ctx = ctx or PrecisionCtx()
    F = G.F
    from .lattice import integer_relation
    if variants is None:
        if F.degree == 1:
            variants = [(shintani_domain(F), F.unit_ideal(), None),
                        (ShintaniDomain(F, (Cone((F(2),)),)), F.unit_ideal(), None),
                        (ShintaniDomain(F, (Cone((F(3),)),)), F.ideal(7), None)]
        else:
            from .quadfield import fundamental_totally_positive_unit
            eps = fundamental_totally_positive_unit(F)
            ac = choose_ac(G, c)
            qs = [q for q, _ in (ac * G.f).factor()]
            base = {q: choose_pi_q(F, q) for q in qs}
            variants = [(shintani_domain(F), ac, base),
                        (shintani_domain(F), ac, {q: x * eps for q, x in base.items()}),
                        (shintani_domain(F), ac, {q: x * eps ** (i + 2) for i, (q, x) in enumerate(base.items())})]
    rows = []
    with ctx.workdps(20):
        vals = []
        for domain, ac, pi in variants:
            v = compute_X(G, c, ctx, domain, ac, pi=pi)
            vals.append(v)
            row = {"variant": _variant_json(domain, ac, pi), "X": mp.nstr(v.archimedean.mid, 30),
                   "status": v.status}
            if F.degree == 1 and ctx.p is not None and G.f.hnf[0] % ctx.p == 0:
                xp = compute_Xp(G, c, ctx, domain, ac, pi)
                row["Xp"] = xp.to_json()
                v.padic = xp
            rows.append(row)
        ok = True
        base = vals[0]
        for v, row in zip(vals[1:], rows[1:]):
            d = v.archimedean - base.archimedean
            if F.degree == 1:
                row["arch_passed"] = bool(abs(d.mid) <= d.rad)
            else:
                from .quadfield import fundamental_totally_positive_unit
                leps = mp.log(fundamental_totally_positive_unit(F).real(0))
                rel = integer_relation([d.mid, leps], ctx.digits - 10, 10 ** 6)
                good = rel is not None and rel[0] != 0 and abs(rel[0] * d.mid + rel[1] * leps) <= abs(rel[0]) * d.rad * 10
                row["log_eps_multiple"] = str(Fraction(-rel[1], rel[0])) if good else None
                row["arch_passed"] = bool(good)
            ok &= row["arch_passed"]
            if v.padic is not None:
                eq = muinf_equal(MuInfClass(Fraction(0), v.padic), MuInfClass(Fraction(0), base.padic), ctx.padic_digits)
                row["padic_passed"] = eq
                ok &= eq
    return {"class": G.label(c), "modulus": G.f.to_json(), "variants": rows, "passed": bool(ok)}
