from fractions import Fraction
from math import gcd

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from starkcheck.arith import PrecisionCtx, bernoulli_poly
from starkcheck.gamma import barnes_zeta, classical_log_gamma, log_multiple_gamma
from starkcheck.padic import Padic, iwasawa_log
from starkcheck.padic_gamma import gamma_p_class, lgamma_p, morita_gamma, morita_gamma_bruteforce
from starkcheck.quadfield import Field
from starkcheck.rayclass import RayClassGroup
from starkcheck.shintani import Cone, enumerate_rset, partial_zeta_neg_int, shintani_domain, zeta0_table


# ---------------------------------------------------------------- shintani

def test_domain_of_q_sqrt5():
    F = Field(5)
    D = shintani_domain(F)
    assert [c.rank for c in D.cones] == [1, 2]
    assert D.cones[1].v[1] == (F(3) + F.sqrtD()) / 2


def test_domain_is_fundamental():
    F = Field(2)
    D = shintani_domain(F)
    for z in (F(1), F(7, 2), F(3, 1), F(11, 5)):
        if z.is_totally_positive():
            assert len(D.locate(z)) == 1


def test_cone_rejects_bad_generators():
    F = Field(5)
    with pytest.raises(ValueError):
        Cone((F(-1),))
    with pytest.raises(ValueError):
        Cone((F(1), F(2)))


def test_rset_over_q():
    Q = Field(1)
    G = RayClassGroup(Q, Q.ideal(3))
    cone = shintani_domain(Q).cones[0]
    assert enumerate_rset(G, G.class_of_element(Q(1)), cone).points == ((Fraction(1, 3),),)
    assert enumerate_rset(G, G.class_of_element(Q(2)), cone).points == ((Fraction(2, 3),),)


@pytest.mark.parametrize("m", [3, 8, 15])
@pytest.mark.parametrize("k", [0, 1, 3])
def test_negative_values_over_q(m, k):
    # zeta(-k, c_{r/m}) = -m^k B_{k+1}(r/m) / (k + 1)
    Q = Field(1)
    G = RayClassGroup(Q, Q.ideal(m))
    for r in range(1, m):
        if gcd(r, m) == 1:
            got = partial_zeta_neg_int(G, G.class_of_element(Q(r)), k)
            assert got == -Fraction(m) ** k * bernoulli_poly(k + 1, Fraction(r, m)) / (k + 1)


@pytest.mark.parametrize("D, expected", [(5, Fraction(1, 30)), (2, Fraction(1, 12)), (13, Fraction(1, 6))])
def test_dedekind_zeta_at_minus_one(D, expected):
    F = Field(D)
    G = RayClassGroup(F, F.unit_ideal())
    assert sum(partial_zeta_neg_int(G, c, 1) for c in range(G.order)) == expected


def test_zeta0_for_the_norm_41_modulus():
    F = Field(5)
    G = RayClassGroup(F, F.ideal(F(7, -1)))
    z = zeta0_table(G)
    assert z[G.identity] == 1
    assert z[G.class_of_element(F(3))] == -1


# ---------------------------------------------------------------- gamma

CTX = PrecisionCtx(30)


@pytest.mark.parametrize("z", [Fraction(1, 3), Fraction(5, 7), Fraction(9, 4)])
def test_rank1_zeta_at_minus_one(z):
    b = barnes_zeta(-1, [1], z, CTX)
    assert b.rad == 0
    B2 = bernoulli_poly(2, z)
    with mp.workdps(40):
        assert abs(b.mid + mp.mpf(B2.numerator) / B2.denominator / 2) < mp.mpf(10) ** -30


def test_log_gamma_half_and_third():
    with mp.workdps(40):
        b = log_multiple_gamma(Fraction(1, 2), [1], CTX)
        assert b.contains(-mp.log(2) / 2, slack=mp.mpf(10) ** -28)
        b = log_multiple_gamma(Fraction(1, 3), [1], CTX)
        ref = mp.loggamma(mp.mpf(1) / 3) - mp.log(2 * mp.pi) / 2
        assert abs(b.mid - ref) < mp.mpf(10) ** -28


def test_reflection_of_classical_gamma():
    a = classical_log_gamma(Fraction(1, 3), CTX)
    b = classical_log_gamma(Fraction(2, 3), CTX)
    with mp.workdps(40):
        assert abs((a + b).mid - mp.log(2 * mp.pi / mp.sqrt(3))) < mp.mpf(10) ** -28


@pytest.mark.parametrize("s", [Fraction(1, 2), Fraction(5, 2), Fraction(-1, 3)])
def test_rank2_equal_periods(s):
    # sum (n + 1)(z + n)^{-s} = zeta(s - 1, z) + (1 - z) zeta(s, z)
    z = Fraction(2, 5)
    b = barnes_zeta(s, [1, 1], z, CTX)
    with mp.workdps(45):
        ss, zz = mp.mpf(s.numerator) / s.denominator, mp.mpf(2) / 5
        ref = mp.zeta(ss - 1, zz) + (1 - zz) * mp.zeta(ss, zz)
    assert abs(b.mid - ref) < mp.mpf(10) ** -20
    assert abs(b.mid - ref) <= b.rad + mp.mpf(10) ** -25


def test_rank2_log_gamma_equal_periods():
    z = Fraction(2, 5)
    b = log_multiple_gamma(z, [1, 1], CTX)
    with mp.workdps(45):
        zz = mp.mpf(2) / 5
        ref = mp.zeta(-1, zz, 1) + (1 - zz) * mp.zeta(0, zz, 1)
    assert abs(b.mid - ref) < mp.mpf(10) ** -20


def test_barnes_rejects_bad_input():
    with pytest.raises(ValueError):
        barnes_zeta(Fraction(1, 2), [1, 1, 1], Fraction(1, 2), CTX)
    with pytest.raises(ValueError):
        log_multiple_gamma(Fraction(-1, 2), [1, 2], CTX)


# ---------------------------------------------------------------- p-adic gamma

def _pg(x, p, N=20):
    return morita_gamma(x, PrecisionCtx(p=p, padic_digits=N), p)


def test_morita_small_values():
    assert _pg(6, 5).residue_int() == 24
    assert _pg(5, 5).equals(Padic.from_rational(-24, 5, 20))
    for n in range(1, 40):
        assert _pg(n, 7).equals(Padic.from_rational(morita_gamma_bruteforce(n, 7), 7, 20))


@settings(max_examples=50)
@given(st.sampled_from([3, 5, 7, 13]), st.fractions(min_value=-20, max_value=20, max_denominator=60))
def test_morita_translation(p, x):
    if x.denominator % p == 0:
        return
    # Gamma_p(x + 1) = -x Gamma_p(x) for units x, -Gamma_p(x) when p | x
    lhs = _pg(x + 1, p)
    fac = -x if x.numerator % p else -1
    rhs = _pg(x, p) * Padic.from_rational(fac, p, 20)
    assert lhs.equals(rhs, 20)


@settings(max_examples=50)
@given(st.sampled_from([3, 5, 7, 13]), st.fractions(min_value=-20, max_value=20, max_denominator=60))
def test_morita_reflection(p, x):
    if x.denominator % p == 0:
        return
    # Gamma_p(x) Gamma_p(1 - x) = (-1)^{l(x)}, l(x) in {1..p} congruent to x mod p
    l = Padic.from_rational(x, p, 1).residue_int() % p or p
    prod = _pg(x, p) * _pg(1 - x, p)
    assert prod.equals(Padic.from_rational((-1) ** l, p, 20), 20)


@pytest.mark.parametrize("p, z", [(5, Fraction(1, 5)), (7, Fraction(3, 49)), (3, Fraction(2, 3))])
def test_lgamma_difference(p, z):
    ctx = PrecisionCtx(p=p, padic_digits=20)
    d = lgamma_p(z, ctx, p) - lgamma_p(z + 1, ctx, p)
    target = -iwasawa_log(Padic.from_rational(z, p, 30))
    prec = min(d.abs_prec, target.abs_prec)
    assert prec >= 15
    assert d.equals(target, prec)


def test_gamma_class_surrogate():
    ctx = PrecisionCtx(p=5, padic_digits=20)
    g = gamma_p_class(Fraction(1, 5), ctx, 5)
    assert g.ord == 0
    assert g.logv.equals(lgamma_p(Fraction(1, 5), ctx, 5), 15)
    assert gamma_p_class(Fraction(1, 3), ctx, 5).ord == 0


def test_morita_rejects_non_integral():
    with pytest.raises(ValueError):
        _pg(Fraction(1, 5), 5)
