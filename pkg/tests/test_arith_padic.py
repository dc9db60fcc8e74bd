from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from starkcheck.arith import Ball, PrecisionCtx, bernoulli, bernoulli_poly, frac_part
from starkcheck.padic import (InsufficientPrecision, MuInfClass, Padic, iwasawa_log, muinf_equal,
                              teichmuller, vp)


def test_bernoulli_numbers():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(13) == 0


def test_bernoulli_poly_values():
    assert bernoulli_poly(1, 0) == Fraction(-1, 2)
    assert bernoulli_poly(12, 0) == Fraction(-691, 2730)
    assert bernoulli_poly(2, Fraction(1, 3)) == Fraction(1, 9) - Fraction(1, 3) + Fraction(1, 6)


@given(st.integers(1, 12), st.fractions(min_value=-5, max_value=5, max_denominator=50))
def test_bernoulli_difference(k, x):
    assert bernoulli_poly(k, x + 1) - bernoulli_poly(k, x) == k * x ** (k - 1)


def test_frac_part():
    assert frac_part(Fraction(7, 3)) == Fraction(1, 3)
    assert frac_part(Fraction(-1, 3)) == Fraction(2, 3)
    assert frac_part(Fraction(5)) == 0


def test_ball_arithmetic_encloses():
    ctx = PrecisionCtx(30)
    with ctx.workdps():
        a = Ball(mp.mpf(1) / 3, mp.mpf(10) ** -20)
        b = Ball(mp.mpf(2), 0)
        s = a * b + a
        assert s.contains(mp.mpf(1))
        assert not s.contains(mp.mpf(1) + mp.mpf(10) ** -10)
        assert a.exp().log().overlaps(a)


def test_vp():
    assert vp(250, 5) == 3
    assert vp(Fraction(3, 25), 5) == -2


def test_teichmuller_examples():
    t = teichmuller(Padic.from_rational(2, 5, 10))
    assert t.residue_int() % 25 == 7
    t4 = teichmuller(Padic.from_rational(4, 5, 10))
    assert t4.residue_int() % 25 == 24
    assert (t ** 4).equals(Padic.from_rational(1, 5, 10))


def test_teichmuller_rejects_nonunit():
    with pytest.raises(ValueError):
        teichmuller(Padic.from_rational(5, 5, 10))


def test_iwasawa_log_examples():
    assert iwasawa_log(Padic.from_rational(5, 5, 20)).is_zero()
    assert iwasawa_log(Padic.from_rational(6, 5, 20)).residue_int() % 125 == 55
    t = teichmuller(Padic.from_rational(3, 7, 20))
    assert iwasawa_log(t).is_zero()


@settings(max_examples=40)
@given(st.sampled_from([3, 5, 7, 13]), st.integers(1, 10 ** 6), st.integers(1, 10 ** 6))
def test_iwasawa_log_homomorphism(p, a, b):
    x, y = Padic.from_rational(a, p, 20), Padic.from_rational(b, p, 20)
    lhs = iwasawa_log(x * y)
    rhs = iwasawa_log(x) + iwasawa_log(y)
    assert lhs.equals(rhs, min(lhs.abs_prec, rhs.abs_prec))


def test_muinf_class_ignores_roots_of_unity():
    p = 7
    x = Padic.from_rational(Fraction(10, 49), p, 20)
    zeta = teichmuller(Padic.from_rational(3, p, 20))
    u, v = MuInfClass.of(x), MuInfClass.of(x * zeta)
    assert u.ord == -2
    assert muinf_equal(u, v, 15)
    assert not muinf_equal(u, MuInfClass.of(x * 8), 15)


def test_muinf_rational_powers():
    u = MuInfClass.of_rational(Fraction(50, 3), 5, 20)
    half = u ** Fraction(1, 2)
    assert muinf_equal(half * half, u, 15)
    assert half.ord == 1


def test_muinf_equal_refuses_undecidable():
    a = MuInfClass.of_rational(6, 5, 5)
    with pytest.raises(InsufficientPrecision):
        muinf_equal(a, a, 20)
