"""Shintani cone decompositions, the finite sets R(c, v_j) and exact
partial zeta values zeta(-k, c)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .arith import bernoulli_poly
from .quadfield import Field, FieldElement, Ideal, fundamental_totally_positive_unit
from .rayclass import RayClassGroup, choose_ac

__all__ = [
    "Cone",
    "ShintaniDomain",
    "RSet",
    "shintani_domain",
    "enumerate_rset",
    "cone_zeta_neg_int",
    "partial_zeta_neg_int",
    "zeta0_table",
]


@dataclass(frozen=True)
class Cone:
    v: tuple[FieldElement, ...]

    def __post_init__(self):
        if not all(x.is_totally_positive() and x.is_integral() for x in self.v):
            raise ValueError("cone generators must be totally positive integers")
        if len(self.v) == 2:
            a, b = self.v
            if (a * b.conj()).b == 0 and a.F.degree == 2:
                raise ValueError("cone generators are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.v)

    def coordinates(self, z: FieldElement) -> tuple[Fraction, ...]:
        """Coefficients of z in the basis v (rank = degree), or along v (rank 1)."""
        if self.rank == 1:
            q = z / self.v[0]
            if not q.is_rational():
                return None
            return (q.a,)
        v1, v2 = self.v
        # z = x1 v1 + x2 v2, solve in the (1, w) coordinates
        a11, a12, a21, a22 = v1.a, v2.a, v1.b, v2.b
        det = a11 * a22 - a12 * a21
        x1 = (z.a * a22 - a12 * z.b) / det
        x2 = (a11 * z.b - a21 * z.a) / det
        return (x1, x2)

    def contains(self, z: FieldElement) -> bool:
        """Open-cone membership by exact arithmetic."""
        x = self.coordinates(z)
        return x is not None and all(t > 0 for t in x)

    def __repr__(self):
        return f"C({', '.join(map(repr, self.v))})"


@dataclass(frozen=True)
class ShintaniDomain:
    F: Field
    cones: tuple[Cone, ...]
    unit: FieldElement | None = None

    def locate(self, z: FieldElement) -> list[tuple[int, int]]:
        """All (k, j) with eps^k z in cone j (exactly one for a fundamental domain)."""
        if self.F.degree == 1:
            return [(0, 0)] if z.a > 0 else []
        import mpmath as mp
        eps = self.unit
        # eps^k z lies between the rays 1 and eps only for one k, near log(z2/z1)/(2 log eps)
        k0 = int(mp.floor(mp.log(z.real(1) / z.real(0)) / (2 * mp.log(eps.real(0)))))
        out = []
        for k in range(k0 - 2, k0 + 3):
            w = z * eps ** k
            for j, C in enumerate(self.cones):
                if C.contains(w):
                    out.append((k, j))
        return out


def shintani_domain(F: Field) -> ShintaniDomain:
    if F.degree == 1:
        return ShintaniDomain(F, (Cone((F(1),)),))
    eps = fundamental_totally_positive_unit(F)
    return ShintaniDomain(F, (Cone((F(1),)), Cone((F(1), eps))), eps)


@dataclass(frozen=True)
class RSet:
    c: int
    j: int
    points: tuple[tuple[Fraction, ...], ...]


def _lattice_points(cone: Cone, beta: FieldElement) -> list[tuple[Fraction, ...]]:
    """x in (Q cap (0,1])^r with (x . v) * beta integral."""
    F = cone.v[0].F
    ws = [v * beta for v in cone.v]
    if F.degree == 1:
        g = int(ws[0].a)
        return [(Fraction(i, g),) for i in range(1, g + 1)]
    if cone.rank == 1:
        w = ws[0]
        g = gcd(int(w.a), int(w.b))
        return [(Fraction(i, g),) for i in range(1, g + 1)]
    # x W in Z^2, W rows = coords(w_i); x = n W^{-1}
    (a, b), (c, d) = (ws[0].a, ws[0].b), (ws[1].a, ws[1].b)
    det = a * d - b * c
    inv_rows = [(d / det, -b / det), (-c / det, a / det)]  # rows of W^{-1}
    # subgroup of (Q/Z)^2 generated by rows of W^{-1}
    def red(t):
        return tuple(x - (x.numerator // x.denominator) for x in t)
    gens = [red((inv_rows[0][0], inv_rows[0][1])), red((inv_rows[1][0], inv_rows[1][1]))]
    zero = (Fraction(0), Fraction(0))
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = red((p[0] + g[0], p[1] + g[1]))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    out = []
    for p in seen:
        out.append(tuple(x if x != 0 else Fraction(1) for x in p))
    return out


def enumerate_rset(G: RayClassGroup, c: int, cone: Cone, ac: Ideal | None = None, j: int = 0) -> RSet:
    """R(c, v) = {x in (0,1]^r : (x.v) a_c f integral with class c}."""
    F = G.F
    ac = ac if ac is not None else F.unit_ideal()
    beta = (ac * G.f).generator()
    pts = []
    for x in _lattice_points(cone, beta):
        z = sum((xi * vi for xi, vi in zip(x, cone.v)), F(0))
        zb = z * beta
        try:
            cl = G.class_of_element(zb)
        except ValueError:
            continue
        if cl == c:
            pts.append(x)
    return RSet(c, j, tuple(sorted(pts)))


def _binom_gen(e: int, t: int) -> Fraction:
    """Generalized binomial coefficient binom(e, t), e possibly negative."""
    num = 1
    for i in range(t):
        num *= e - i
    return Fraction(num, factorial(t))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for i in range(total + 1):
        for rest in _compositions(total - i, parts - 1):
            yield (i,) + rest


def cone_zeta_neg_int(k: int, v: tuple[FieldElement, ...], x: tuple[Fraction, ...]) -> Fraction:
    """Exact zeta(-k, v, x) = value at s=-k of sum_m N((x+m).v)^{-s}.

    Shintani's Bernoulli formula: split the Mellin integral according to
    the largest embedding variable; the sector of embedding q contributes
    the Taylor coefficient of prod_j y_j^k in prod_i c_i(y)^{l_i - 1}.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    F = v[0].F
    n, r = F.degree, len(v)
    total_l = r + n * k
    pref = Fraction(((-1) ** k * factorial(k)) ** n, n)
    if n == 1:
        s = Fraction(0)
        for l in _compositions(total_l, r):
            if any(li == 0 for li in l) and r > 1:
                raise NotImplementedError("rank > 1 cones over Q are not needed")
            term = Fraction(1)
            for li, xi, vi in zip(l, x, v):
                term *= bernoulli_poly(li, 1 - xi) / factorial(li) * vi.a ** (li - 1)
            s += term
        return pref * s
    # degree 2: sector q = embedding 0 contributes an element of F; the other is its conjugate
    acc = F(0)
    for l in _compositions(total_l, r):
        bern = Fraction(1)
        for li, xi in zip(l, x):
            bern *= bernoulli_poly(li, 1 - xi) / factorial(li)
        if bern == 0:
            continue
        # coefficient of y^k in prod_i (v_i + conj(v_i) y)^{l_i - 1}
        series = [F(1)] + [F(0)] * k
        for li, vi in zip(l, v):
            e = li - 1
            vb = vi.conj()
            fac = [vi ** (e - t) * vb ** t * _binom_gen(e, t) for t in range(k + 1)]
            series = [sum((series[a] * fac[t - a] for a in range(t + 1)), F(0)) for t in range(k + 1)]
        acc = acc + series[k] * bern
    return pref * acc.trace()


def partial_zeta_neg_int(G: RayClassGroup, c: int, k: int, domain: ShintaniDomain | None = None,
                         ac: Ideal | None = None) -> Fraction:
    """Exact zeta(-k, c) for the narrow ray class c."""
    F = G.F
    domain = domain or shintani_domain(F)
    if ac is None:
        ac = choose_ac(G, c)
    Nb = (ac * G.f).norm()
    total = Fraction(0)
    for j, cone in enumerate(domain.cones):
        R = enumerate_rset(G, c, cone, ac, j)
        for x in R.points:
            total += cone_zeta_neg_int(k, cone.v, x)
    return total * Fraction(Nb) ** k


def zeta0_table(G: RayClassGroup) -> dict[int, Fraction]:
    return {c: partial_zeta_neg_int(G, c, 0) for c in range(G.order)}
