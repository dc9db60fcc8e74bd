"""Run configuration and the verification suites behind ``starkcheck verify``.

Every suite returns a report {"suite", "config", "checks": [...], "passed"}
whose checks carry residuals and a reference string for the identity
being tested."""
from __future__ import annotations

import random
import re
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from math import gcd

import mpmath as mp

from .arith import PrecisionCtx
from .quadfield import Field, Ideal

__all__ = [
    "RunConfig",
    "ConfigError",
    "parse_field",
    "parse_modulus",
    "SUITES",
    "run_suite",
]


class ConfigError(ValueError):
    """Malformed configuration or unknown suite."""


@dataclass
class RunConfig:
    field: str = "Q"
    modulus: str | None = None
    prime: int | None = None
    digits: int = 30
    padic_digits: int = 20
    seed: int = 0
    out: str | None = None
    suite: str | None = None

    def to_text(self) -> str:
        lines = []
        for f in fields(self):
            v = getattr(self, f.name)
            if v is not None:
                lines.append(f"{f.name.replace('_', '-')} = {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RunConfig":
        kw = {}
        names = {f.name: f for f in fields(cls)}
        for n, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"line {n}: expected 'key = value'")
            k, v = (t.strip() for t in line.split("=", 1))
            k = k.replace("-", "_")
            if k not in names:
                raise ConfigError(f"line {n}: unknown key {k!r}")
            if k in ("prime", "digits", "padic_digits", "seed"):
                try:
                    kw[k] = int(v)
                except ValueError:
                    raise ConfigError(f"line {n}: {k} must be an integer") from None
            else:
                kw[k] = v
        return cls(**kw)

    def ctx(self, p: int | None = None) -> PrecisionCtx:
        try:
            return PrecisionCtx(self.digits, p if p is not None else self.prime, self.padic_digits)
        except ValueError as e:
            raise ConfigError(str(e)) from None

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if k != "out"}


def parse_field(s: str) -> Field:
    try:
        return Field.parse(s)
    except ValueError as e:
        raise ConfigError(str(e)) from None


def parse_modulus(F: Field, s: str) -> Ideal:
    """'15' for the ideal (15); 'a,b' for the principal ideal (a + b w);
    'p29' or 'p29:1' for a prime above 29."""
    s = s.replace(" ", "")
    m = re.fullmatch(r"p(\d+)(?::(\d+))?", s)
    if m:
        ps = F.primes_above(int(m.group(1)))
        i = int(m.group(2) or 0)
        if i >= len(ps):
            raise ConfigError(f"only {len(ps)} prime(s) above {m.group(1)}")
        return ps[i]
    m = re.fullmatch(r"(-?\d+),(-?\d+)", s)
    if m:
        if F.degree == 1:
            raise ConfigError("the 'a,b' modulus form needs a quadratic field")
        return F.ideal(F(int(m.group(1)), int(m.group(2))))
    if re.fullmatch(r"\d+", s) and int(s) > 0:
        return F.ideal(int(s))
    raise ConfigError(f"cannot parse modulus {s!r}")


def _mpq(x: Fraction):
    return mp.mpf(x.numerator) / x.denominator


def _check(name: str, ref: str, passed: bool, **data) -> dict:
    return {"name": name, "ref": ref, "passed": bool(passed), **data}


def _report(suite: str, cfg: RunConfig, checks: list, **extra) -> dict:
    return {"suite": suite, "config": cfg.to_json(), "checks": checks,
            "passed": all(c["passed"] for c in checks if c.get("status") != "gated"), **extra}


# ---------------------------------------------------------------------------
# exact zeta(0) and special functions


def suite_zeta0_exact(cfg: RunConfig) -> dict:
    from .invariants import class_of_r
    from .rayclass import RayClassGroup
    from .shintani import zeta0_table
    Q = Field(1)
    top = int(cfg.modulus) if cfg.modulus and cfg.modulus.isdigit() else 50
    checks, bad = [], []
    count = 0
    for m in range(1, top + 1):
        G = RayClassGroup(Q, Q.ideal(m))
        tab = zeta0_table(G)
        for r in range(1, m + 1):
            if gcd(r, m) != 1:
                continue
            count += 1
            z = tab[class_of_r(G, r)]
            if z != Fraction(1, 2) - Fraction(r, m):
                bad.append(f"{r}/{m}: {z}")
    checks.append(_check("zeta(0, c_{r/m}) = 1/2 - r/m", "zeta(0) formula over Q", not bad,
                         classes=count, max_m=top, failures=bad))
    return _report("zeta0-exact", cfg, checks)


def _rand_rational(rng: random.Random, lo=0, hi=1, den=997) -> Fraction:
    while True:
        x = Fraction(rng.randrange(1, den), den) * (hi - lo) + lo
        if lo < x < hi:
            return x


def suite_barnes_props(cfg: RunConfig) -> dict:
    from .arith import bernoulli_poly
    from .gamma import barnes_zeta, classical_log_gamma, log_multiple_gamma
    rng = random.Random(cfg.seed)
    ctx = cfg.ctx()
    checks = []
    slack = mp.mpf(10) ** (-ctx.digits + 5)
    with ctx.workdps(20):
        worst = mp.mpf(0)
        ok = True
        for _ in range(50):
            x = _rand_rational(rng)
            b = classical_log_gamma(x, ctx) + classical_log_gamma(1 - x, ctx)
            xf = mp.mpf(x.numerator) / x.denominator
            d = abs(b.mid - mp.log(mp.pi / mp.sin(mp.pi * xf)))
            worst = max(worst, d)
            ok &= d <= b.rad + slack
        checks.append(_check("reflection log Gamma(x) + log Gamma(1-x) = log(pi / sin pi x)",
                             "Euler reflection", ok, samples=50, max_residual=mp.nstr(worst, 5)))
        worst, ok = mp.mpf(0), True
        for _ in range(20):
            z = _rand_rational(rng, 0, 3)
            a = log_multiple_gamma(z, [Fraction(1)], ctx)
            b = classical_log_gamma(z, ctx)
            d = abs(a.mid - (b.mid - mp.log(2 * mp.pi) / 2))
            worst = max(worst, d)
            ok &= d <= a.rad + b.rad + slack
        checks.append(_check("Lerch: log Gamma(z,(1)) = log Gamma(z) - log(2 pi)/2", "definition of log Gamma(z, v)",
                             ok, samples=20, max_residual=mp.nstr(worst, 5)))
        worst, ok = mp.mpf(0), True
        for _ in range(20):
            z = _rand_rational(rng, 0, 2, 97)
            v = [Fraction(1), _rand_rational(rng, 1, 3, 97)]
            a = log_multiple_gamma(z, v, ctx)
            b = log_multiple_gamma(z + v[1], v, ctx)
            c = log_multiple_gamma(z, v[:1], ctx)
            d = abs(a.mid - b.mid - c.mid)
            worst = max(worst, d)
            ok &= d <= a.rad + b.rad + c.rad + slack
        checks.append(_check("ladder log Gamma(z,(v1,v2)) - log Gamma(z+v2,(v1,v2)) = log Gamma(z,(v1))",
                             "telescoping of the defining series", ok, samples=20, max_residual=mp.nstr(worst, 5)))
        worst, ok = mp.mpf(0), True
        for _ in range(10):
            z = _rand_rational(rng, 0, 2, 97)
            v = [Fraction(1), _rand_rational(rng, 1, 3, 97)]
            lam = Fraction(rng.randrange(2, 6), rng.randrange(1, 4))
            a = log_multiple_gamma(z * lam, [x * lam for x in v], ctx)
            b = log_multiple_gamma(z, v, ctx)
            z0 = barnes_zeta(0, v, z, ctx)
            d = abs(a.mid - b.mid + mp.log(mp.mpf(lam.numerator) / lam.denominator) * z0.mid)
            worst = max(worst, d)
            ok &= d <= a.rad + b.rad + z0.rad + slack
        checks.append(_check("homogeneity zeta'(0, l v, l z) - zeta'(0, v, z) + log l zeta(0, v, z) = 0",
                             "term-by-term rescaling", ok, samples=10, max_residual=mp.nstr(worst, 5)))
        ex = []
        for _ in range(10):
            z = _rand_rational(rng, 0, 3)
            for k, exact in ((0, Fraction(1, 2) - z), (-1, -bernoulli_poly(2, z) / 2)):
                b = barnes_zeta(k, [Fraction(1)], z, ctx)
                ex.append(abs(b.mid - _mpq(exact)) <= b.rad + slack)
        half = log_multiple_gamma(Fraction(1, 2), [Fraction(1)], ctx)
        ok_half = abs(half.mid + mp.log(2) / 2) <= half.rad + slack
        third = log_multiple_gamma(Fraction(1, 3), [Fraction(1)], ctx)
        ok_third = abs(third.mid - (mp.loggamma(mp.mpf(1) / 3) - mp.log(2 * mp.pi) / 2)) < mp.mpf(10) ** -30
        checks.append(_check("zeta(0,(1),z) = 1/2 - z and zeta(-1,(1),z) = -B_2(z)/2", "Bernoulli values",
                             all(ex), samples=10))
        checks.append(_check("log Gamma(1/2,(1)) = -log(2)/2 and log Gamma(1/3,(1))", "Gamma(1/2) = sqrt(pi)",
                             ok_half and ok_third))
    return _report("barnes-props", cfg, checks)


def suite_pgamma_props(cfg: RunConfig) -> dict:
    from .arith import bernoulli_poly
    from .padic import Padic, teichmuller, vp
    from .padic_gamma import lgamma_p, morita_gamma, zeta_p_hurwitz
    from .padic import iwasawa_log
    rng = random.Random(cfg.seed)
    N = cfg.padic_digits
    checks = []
    primes = [cfg.prime] if cfg.prime else [3, 5, 7, 13]
    for p in primes:
        ctx = PrecisionCtx(cfg.digits, p, N)
        mod = p ** N
        tr_ok = rf_ok = True
        for _ in range(50):
            x = Fraction(rng.randrange(mod), rng.choice([1, 2, 4, 7, 11]) if p not in (7, 11) else 1)
            if x.denominator % p == 0:
                x = Fraction(x.numerator)
            g = morita_gamma(x, ctx)
            g1 = morita_gamma(x + 1, ctx)
            unit = x.numerator % p != 0
            rhs = g * (-x) if unit else -g
            tr_ok &= g1.equals(rhs, N)
            a0 = (x.numerator * pow(x.denominator, -1, p)) % p or p
            prod = g * morita_gamma(1 - x, ctx)
            rf_ok &= prod.equals(Padic.from_rational((-1) ** a0, p, N), N)
        checks.append(_check(f"Morita translation, p = {p}", "Gamma_p(x+1) = -x Gamma_p(x) or -Gamma_p(x)",
                             tr_ok, samples=50, precision=N))
        checks.append(_check(f"Morita reflection, p = {p}", "Gamma_p(x) Gamma_p(1-x) = (-1)^{a_0(x)}",
                             rf_ok, samples=50, precision=N))
    # lgamma_p difference law and interpolation at one prime
    p = cfg.prime or 5
    Np = max(N, 30)
    ctx = PrecisionCtx(cfg.digits, p, Np)
    diff_ok = True
    for _ in range(30):
        e = rng.randrange(1, 3)
        num = rng.randrange(1, 10 * p ** e)
        while num % p == 0:
            num += 1
        z = Fraction(num, p ** e)
        lhs = lgamma_p(z, ctx) - lgamma_p(z + 1, ctx)
        rhs = -iwasawa_log(Padic.from_rational(z, p, Np + 2 * e + 5))
        diff_ok &= (lhs - rhs).with_prec(Np - e - 2).is_zero()
    checks.append(_check(f"LGamma_p(z) - LGamma_p(z+1) = -log_p z, p = {p}", "zeta(s,z) - zeta(s,z+1) = z^{-s}",
                         diff_ok, samples=30))
    int_ok = True
    for _ in range(6):
        z = Fraction(rng.randrange(1, 50 * p), p * rng.choice([1, p]))
        if vp(z, p) >= 0:
            z = Fraction(z.numerator * p + 1, z.denominator * p)
        e = vp(z, p)
        omega = teichmuller(Padic.from_rational(z / Fraction(p) ** e, p, Np + 10)) * Fraction(p) ** e
        for k in range(9):
            classical = -bernoulli_poly(k + 1, z) / (k + 1)
            val = zeta_p_hurwitz(-k, z, ctx)
            twist = Padic.from_rational(classical, p, Np + 10 + 2 * k * abs(e)) / omega ** k
            int_ok &= (val - twist).with_prec(Np - 2 * k * abs(e) - 5).is_zero()
    checks.append(_check(f"zeta_p(-k,(1),z) = omega(z)^(-k) zeta(-k,(1),z), k <= 8, p = {p}",
                         "interpolation characterization of zeta_p", int_ok, samples=6))
    return _report("pgamma-props", cfg, checks)


# ---------------------------------------------------------------------------
# invariants over Q

PROP24_ARCH = [(3, 2), (4, 2), (15, 2), (7, 3), (9, 3)]
PROP24_PADIC = [(15, 2, 5), (15, 5, 5), (21, 2, 7), (21, 3, 7), (35, 7, 5)]


def suite_prop24(cfg: RunConfig) -> dict:
    from .invariants import check_prop24
    from .rayclass import RayClassGroup
    Q = Field(1)
    checks = []
    ctx = cfg.ctx(None)
    for f, q in PROP24_ARCH:
        G = RayClassGroup(Q, Q.ideal(f))
        rows = [check_prop24(Q, Q.ideal(f), Q.ideal(q), c, "archimedean", ctx) for c in range(G.order)]
        worst = max(mp.mpf(r["residual"]) for r in rows)
        checks.append(_check(f"fiber sum of X, f = ({f}), q = ({q})", "fiber sum of X over C_(fq) -> C_f",
                             all(r["passed"] for r in rows), case=rows[0]["case"], classes=len(rows),
                             max_residual=mp.nstr(worst, 5)))
    for f, q, p in PROP24_PADIC:
        pctx = cfg.ctx(p)
        G = RayClassGroup(Q, Q.ideal(f))
        rows = [check_prop24(Q, Q.ideal(f), Q.ideal(q), c, "padic", pctx) for c in range(G.order)]
        checks.append(_check(f"fiber sum of X_p, p = {p}, f = ({f}), q = ({q})", "fiber sum of X_p over C_(fq) -> C_f",
                             all(r["passed"] for r in rows), case=rows[0]["case"], classes=len(rows),
                             min_agreement_digits=min(r["agreement_digits"] for r in rows),
                             precision=pctx.padic_digits))
    return _report("prop24", cfg, checks)


EXP_TRIPLES = [(1, 15, 5), (2, 15, 5), (4, 15, 5), (1, 21, 7), (2, 21, 7)]


def suite_exp_formula(cfg: RunConfig) -> dict:
    from .invariants import (class_of_r, closed_form_X, closed_form_Xp, compute_X, compute_Xp,
                             padic_partial_zeta_deriv0)
    from .padic import MuInfClass, muinf_equal
    from .rayclass import RayClassGroup
    rng = random.Random(cfg.seed)
    Q = Field(1)
    ctx = cfg.ctx(None)
    checks = []
    worst, ok, pairs = mp.mpf(0), True, []
    with ctx.workdps(20):
        for _ in range(20):
            m = rng.randrange(2, 61)
            r = rng.randrange(1, m + 1)
            while gcd(r, m) != 1:
                r = rng.randrange(1, m + 1)
            G = RayClassGroup(Q, Q.ideal(m))
            a = compute_X(G, class_of_r(G, r), ctx).archimedean
            b = closed_form_X(r, m, ctx)
            d = abs(a.mid - b.mid)
            worst = max(worst, d)
            ok &= d <= a.rad + b.rad
            pairs.append(f"{r}/{m}")
    checks.append(_check("X(c_{r/m}) = log Gamma(r/m) (m/d)^{r/m-1/2} (2 pi)^{-1/2}", "closed form of X over Q", ok,
                         pairs=pairs, max_residual=mp.nstr(worst, 5), digits=ctx.digits))
    for r, m, p in EXP_TRIPLES:
        pctx = cfg.ctx(p)
        G = RayClassGroup(Q, Q.ideal(m))
        xp = compute_Xp(G, class_of_r(G, r), pctx)
        lhs = MuInfClass(Fraction(0), xp)
        rhs = closed_form_Xp(r, m, pctx)
        num, cls = padic_partial_zeta_deriv0(r, m, pctx)
        ok = muinf_equal(lhs, rhs, pctx.padic_digits) and muinf_equal(cls, lhs, pctx.padic_digits)
        checks.append(_check(f"exp_p(X_p(c_{r}/{m})) = Gamma_p({r}/{m}) (m/d)_0^(r/m-1/2), p = {p}", "closed form of exp_p(X_p) over Q",
                             ok, precision=pctx.padic_digits, Xp=xp.to_json()))
    return _report("exp-formula", cfg, checks)


DISTRIBUTION = [(1, 4, 3), (1, 4, 5), (2, 7, 3), (3, 8, 5), (5, 12, 7),
                (1, 5, 3), (2, 5, 7), (4, 9, 5), (1, 10, 3), (7, 10, 13)]


def suite_distribution(cfg: RunConfig) -> dict:
    from .invariants import gamma_p_lower, gamma_p_lower_closed, ladder_check
    from .padic import muinf_equal
    checks = []
    for r, m, p in DISTRIBUTION:
        pctx = cfg.ctx(p)
        a = gamma_p_lower(r, m, pctx)
        b = gamma_p_lower_closed(r, m, pctx)
        ok = muinf_equal(a, b, pctx.padic_digits) and a.ord == Fraction(1, 2) - Fraction(r, m)
        checks.append(_check(f"gamma_p(c_(p {r}/{m})) closed form, p = {p}",
                             "distribution relation for Gamma_p", ok, ord=str(a.ord),
                             precision=pctx.padic_digits))
    for r, m, p in [(1, 7, 3), (2, 9, 5)]:
        rep = ladder_check(r, m, cfg.ctx(p))
        checks.append(_check(f"2-power ladder r/m = {r}/{m}, p = {p}", "telescoping of the 2-power induction",
                             rep["passed"], f=rep["f"]))
    return _report("distribution", cfg, checks)


# ---------------------------------------------------------------------------
# aggregation, Gross-Stark and Stark


def suite_funeq(cfg: RunConfig) -> dict:
    from .stark import check_funeq
    F = Field(5)
    ctx = cfg.ctx(None)
    checks = []
    for sigma in (1, 4):
        rep = check_funeq(F, 5, 5, (), sigma, ctx, numeric=True)
        for key, ref in (("factorization_s0", "L_f(0, chi) = prod_{psi|H = chi} L_d(0, psi)"),
                         ("zeta0_aggregation", "sum_c r(c, sigma) zeta(0, c) = |G| sum_fiber zeta(0, c)"),
                         ("zeta_deriv_aggregation", "|H| sum_fiber zeta'(0, c) = sum_c r(c, sigma) zeta'(0, c)")):
            v = rep["checks"][key]
            checks.append(_check(f"{key}, F = Q(sqrt 5) in Q(zeta_5), sigma = {sigma}", ref, v["passed"],
                                 **{k: x for k, x in v.items() if k not in ("passed",)}))
        checks[-1]["r"] = rep["r"]
    tower = check_funeq(F, 5, 5, (4,), 1, ctx, numeric=False)
    checks.append(_check("trivial tower K = F", "L_f = L_f", tower["passed"]))
    return _report("funeq", cfg, checks)


RGC_CASES = [(-1, 5), (-3, 7), (-7, 11), (-1, 13)]


def suite_rgc(cfg: RunConfig) -> dict:
    from .invariants import verify_rGc_over_Q
    checks = []
    for D, p in RGC_CASES:
        for sigma in (0, 1):
            rep = verify_rGc_over_Q(D, p, sigma, cfg.ctx(p))
            checks.append(_check(f"refined Gross-Stark over Q, K = Q(sqrt {D}), p = {p}, sigma = {rep['sigma']}",
                                 "fiber product of exp_p(X_p) against alpha^sigma", rep["passed"],
                                 ord_lhs=rep["ord_lhs"], ord_rhs=rep["ord_rhs"],
                                 agreement_digits=rep["agreement_digits"]))
    try:
        verify_rGc_over_Q(-1, 7, 0, cfg.ctx(7))
        rejected = False
    except ValueError as e:
        rejected = "splitting hypothesis (b) violated" in str(e)
    checks.append(_check("inert p = 7 in Q(i) is rejected", "splitting hypothesis", rejected))
    return _report("rgc", cfg, checks)


def suite_gross_stark(cfg: RunConfig) -> dict:
    from .stark import gross_stark_check
    cases = [(-1, 5), (-3, 7)]
    F = parse_field(cfg.field)
    if F.degree == 2 and not F.is_real and cfg.prime:
        cases = [(F.D, cfg.prime)]
    checks = []
    for D, p in cases:
        rep = gross_stark_check(D, p, cfg.ctx(p))
        for row in rep["per_sigma"]:
            checks.append(_check(f"Gross-Stark K = Q(sqrt {D}), p = {p}, sigma = {row['sigma']}",
                                 "log_p N(eps'^sigma) = -W zeta'_{S,p}(0, sigma)", row["passed"],
                                 W=rep["W"], ord_lhs=row["ord_lhs"], ord_rhs=row["ord_rhs"],
                                 agreement_digits=row["agreement_digits"], precision=cfg.padic_digits))
    return _report("gross-stark", cfg, checks)


def suite_stark(cfg: RunConfig) -> dict:
    from .stark import stark_pipeline
    F = parse_field(cfg.field)
    if F.degree == 2 and F.is_real and cfg.modulus:
        f = parse_modulus(F, cfg.modulus)
    else:
        F = Field(5)
        f = F.primes_above(29)[0]
    ctx = PrecisionCtx(max(cfg.digits, 60))
    rep = stark_pipeline(F, f, None, ctx)
    checks = [_check(f"Stark: {k}", "Stark unit for the class field H", bool(v)) for k, v in rep["checks"].items()]
    return _report("stark", cfg, checks, stark=rep)


# ---------------------------------------------------------------------------
# the CM example over Q(sqrt 5) with conductor of norm 41

# periods printed for the curve C and its conjugate C' (verbatim digits)
EXAMPLE44_PERIODS = {
    "omega_id": ("-0.4929421793", "-0.8116152991"),
    "omega_sigma": ("-0.1395619319", "0.1323795194"),
    "omega_id_prime": ("-0.4443866005", "-0.3099403507"),
    "omega_rho_sigma_prime": ("-2.0247186165", "0.4533729269"),
}


def example44_data():
    F = Field(5)
    f = F.ideal(F(7, -1))  # (13 - sqrt 5)/2
    return F, f


def _example44_num(G, ctx, provider=None) -> dict:
    """Both sides of the numerical identity for exp(X(c_1; D, a = f)).
    Without a V-term provider only G + W is available, so the check is
    reported as gated together with the V-value it would require."""
    from .invariants import compute_X
    from .shintani import shintani_domain
    F = G.F
    per = {k: mp.mpc(mp.mpf(a), mp.mpf(b)) for k, (a, b) in EXAMPLE44_PERIODS.items()}
    with ctx.workdps(10):
        rhs = per["omega_id"] * per["omega_id_prime"] / mp.pi
        s5 = mp.sqrt(5)
        inner = -8 * s5 + 20 + (s5 + 15) * mp.sqrt(mp.mpc(2 * s5 - 26))
        factor = ((s5 - 1) / 2) ** (mp.mpf(14) / 41) * mp.sqrt(inner) / 80
        X = compute_X(G, G.identity, ctx, shintani_domain(F), G.f, provider=provider)
        lhs = mp.exp(X.archimedean.mid) * factor
        out = {"X_status": X.status, "X": mp.nstr(X.archimedean.mid, 25),
               "rhs": mp.nstr(rhs, 10), "lhs": mp.nstr(lhs, 10)}
        if provider is None:
            implied = mp.log(rhs / lhs)
            out.update(status="gated", implied_exp_V=mp.nstr(mp.exp(implied), 10),
                       note="requires the V-term provider; not part of the pass bar")
            out["passed"] = False
        else:
            out["relative_error"] = mp.nstr(abs(lhs / rhs - 1), 5)
            out["passed"] = abs(lhs / rhs - 1) < mp.mpf(10) ** -9
            out["status"] = "checked"
    return out


def suite_example44(cfg: RunConfig, provider=None) -> dict:
    from .rayclass import RayClassGroup
    from .shintani import zeta0_table
    F, f = example44_data()
    G = RayClassGroup(F, f)
    c1 = G.class_of_element(F(1))
    c2 = G.class_of_element(F(3))
    z = zeta0_table(G)
    cm = G.cm_structure()
    checks = [
        _check("N f = 41", "conductor (13 - sqrt 5)/2", f.norm() == 41),
        _check("|C_f| = 2", "C_f = {c_1, c_2}", G.order == 2),
        _check("c_2 = [(3)] is nontrivial", "C_f = {[(1)], [(3)]}", c2 != c1),
        _check("zeta(0, c_1) = 1 and zeta(0, c_2) = -1", "exact zeta(0) values",
               z[c1] == 1 and z[c2] == -1, zeta0={G.label(c): str(v) for c, v in z.items()}),
        _check("has_cm", "K is a CM field abelian over F", cm["has_cm"]),
    ]
    if provider is None:
        num = {"status": "gated", "periods": EXAMPLE44_PERIODS,
               "note": "requires the V-term provider; not part of the pass bar"}
        checks.append(_check("numerical identity for exp(X(c_1))", "exp(X(c_1)) against the CM periods",
                             False, **num))
    else:
        num = _example44_num(G, cfg.ctx(None), provider)
        checks.append(_check("numerical identity for exp(X(c_1))", "exp(X(c_1)) against the CM periods",
                             num.pop("passed"), **num))
    return _report("example44", cfg, checks)


# ---------------------------------------------------------------------------
# L-value oracle, choice independence and the vanishing criterion


def dual_oracle_cases():
    F1 = Field(5)
    F2 = Field(2)
    return [(F1, F1.ideal(F1(7, -1))), (F2, F2.ideal(5))]


def suite_dual_oracle(cfg: RunConfig) -> dict:
    from .lfunctions import hecke_L
    from .rayclass import RayClassGroup
    from .shintani import zeta0_table
    ctx = cfg.ctx(None)
    tol = mp.mpf(10) ** -20
    checks = []
    for F, f in dual_oracle_cases():
        G = RayClassGroup(F, f)
        z = zeta0_table(G)
        for chi in G.characters():
            L = hecke_L(chi, ctx, want_derivative=False)
            with ctx.workdps(10):
                exact = sum((chi.numeric(c) * _mpq(z[c]) for c in range(G.order)), mp.mpf(0))
                d = abs(L.value.mid - exact)
            checks.append(_check(f"L(0, chi) for chi = {list(chi.k)}, F = {F}, N f = {f.norm()}",
                                 "sum_c chi(c) zeta(0, c) against the approximate functional equation",
                                 d <= L.value.rad + mp.mpf(10) ** (-ctx.digits + 3) and d < tol,
                                 exact=mp.nstr(exact, 15), afe=mp.nstr(L.value.mid, 25),
                                 residual=mp.nstr(d, 5), radius=mp.nstr(L.value.rad, 5)))
    return _report("dual-oracle", cfg, checks)


def suite_indep(cfg: RunConfig) -> dict:
    from .invariants import choice_independence, class_of_r
    from .rayclass import RayClassGroup
    checks = []
    Q = Field(1)
    for m, p, rs in [(15, 5, (1, 2, 4, 7)), (21, 7, (1, 5))]:
        G = RayClassGroup(Q, Q.ideal(m))
        for r in rs:
            rep = choice_independence(G, class_of_r(G, r), ctx=cfg.ctx(p))
            checks.append(_check(f"choices (D, a_c, pi) for c_{r}/{m}, p = {p}",
                                 "X and X_p do not depend on the choices", rep["passed"], variants=rep["variants"]))
    F, f = example44_data()
    G = RayClassGroup(F, f)
    for c in range(G.order):
        rep = choice_independence(G, c, ctx=cfg.ctx(None))
        checks.append(_check(f"choice of pi_q for {G.label(c)} over Q(sqrt 5)",
                             "G + W changes by a rational multiple of log eps_+", rep["passed"],
                             variants=rep["variants"]))
    return _report("indep", cfg, checks)


def find_non_cm_modulus(F: Field, max_norm: int = 200):
    """Smallest modulus (by norm) with <s_1> = <s_1 s_2> and s_1 nontrivial."""
    from .rayclass import RayClassGroup
    seen = set()
    cands = []
    for n in range(2, max_norm + 1):
        for q in range(2, n + 1):
            if n % q == 0 and all(q % t for t in range(2, int(q ** 0.5) + 1)):
                for P in F.primes_above(q):
                    cands.append(P)
    for P in cands:
        for k in (1, 2, 3):
            I = P ** k
            if I.norm() > max_norm or I in seen:
                continue
            seen.add(I)
            G = RayClassGroup(F, I)
            cm = G.cm_structure()
            if not cm["has_cm"] and any(s != G.identity for s in cm["s"]):
                return I, G
    raise RuntimeError("no modulus found within the norm bound")


def suite_vanishing(cfg: RunConfig) -> dict:
    from .shintani import zeta0_table
    F = Field(2)
    checks = []
    f, G = find_non_cm_modulus(F)
    cm = G.cm_structure()
    z = zeta0_table(G)
    checks.append(_check(f"zeta(0, c) = 0 for all c, F = Q(sqrt 2), f = {f}",
                         "<s_iota> = <s_iota s_iota'> forces zeta(0, c) = 0",
                         all(v == 0 for v in z.values()), N_f=f.norm(), order=G.order,
                         s=[G.label(s) for s in cm["s"]], zeta0={G.label(c): str(v) for c, v in z.items()}))
    return _report("vanishing", cfg, checks)


SUITES = {
    "zeta0-exact": suite_zeta0_exact,
    "barnes-props": suite_barnes_props,
    "pgamma-props": suite_pgamma_props,
    "prop24": suite_prop24,
    "exp-formula": suite_exp_formula,
    "distribution": suite_distribution,
    "funeq": suite_funeq,
    "rgc": suite_rgc,
    "stark": suite_stark,
    "gross-stark": suite_gross_stark,
    "example44": suite_example44,
    "dual-oracle": suite_dual_oracle,
    "indep": suite_indep,
    "vanishing": suite_vanishing,
}


def run_suite(name: str, cfg: RunConfig | None = None) -> tuple[int, dict]:
    """Exit code (0 pass, 1 failure, 3 precision exhausted) and report.
    An unknown suite raises ConfigError (exit code 2 at the CLI)."""
    from .padic import InsufficientPrecision
    cfg = cfg or RunConfig()
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    try:
        rep = SUITES[name](cfg)
    except InsufficientPrecision as e:
        return 3, {"suite": name, "config": cfg.to_json(), "error": f"precision exhausted: {e}", "passed": False}
    return (0 if rep["passed"] else 1), rep
