from fractions import Fraction

import mpmath as mp
import pytest

from starkcheck import invariants
from starkcheck.arith import PrecisionCtx
from starkcheck.invariants import (ProviderMissing, check_prop24, choice_independence, class_of_r, closed_form_X,
                                   closed_form_Xp, compute_X, compute_Xp, fiber_product_ratio, gamma_p_lower,
                                   gamma_p_lower_closed, ladder_check, padic_partial_zeta_deriv0, verify_rGc_over_Q)
from starkcheck.padic import MuInfClass, muinf_equal
from starkcheck.quadfield import Field
from starkcheck.rayclass import RayClassGroup

Q = Field(1)
CTX = PrecisionCtx(30)


def _group(m):
    return RayClassGroup(Q, Q.ideal(m))


@pytest.mark.parametrize("r, m", [(1, 2), (1, 3), (2, 3), (5, 12), (7, 15)])
def test_X_matches_closed_form(r, m):
    G = _group(m)
    v = compute_X(G, class_of_r(G, r), CTX)
    assert v.status == "full"
    with mp.workdps(40):
        d = v.archimedean - closed_form_X(r, m, CTX)
        assert abs(d.mid) < mp.mpf(10) ** -25


def test_X_of_one_half():
    G = _group(2)
    v = compute_X(G, class_of_r(G, 1), CTX)
    with mp.workdps(40):
        assert abs(v.archimedean.mid + mp.log(2) / 2) < mp.mpf(10) ** -25


@pytest.mark.parametrize("r, m, p", [(1, 15, 5), (2, 15, 5), (1, 21, 7)])
def test_Xp_matches_closed_form(r, m, p):
    ctx = PrecisionCtx(30, p, 20)
    G = _group(m)
    xp = compute_Xp(G, class_of_r(G, r), ctx)
    lhs = MuInfClass(Fraction(0), xp)
    rhs = closed_form_Xp(r, m, ctx)
    # exp_p(X_p) is a unit, so only the log part is compared
    assert muinf_equal(lhs, MuInfClass(Fraction(0), rhs.logv), 18)


def test_Xp_matches_padic_zeta_derivative():
    ctx = PrecisionCtx(30, 5, 20)
    G = _group(15)
    for r in (1, 2, 4, 7):
        xp = compute_Xp(G, class_of_r(G, r), ctx)
        val, _ = padic_partial_zeta_deriv0(r, 15, ctx)
        assert xp.equals(val, 18)


def test_padic_zeta_derivative_needs_p_dividing_m():
    with pytest.raises(ValueError):
        padic_partial_zeta_deriv0(1, 7, PrecisionCtx(30, 5, 20))


def test_degree_two_X_is_gated_without_provider():
    F = Field(5)
    G = RayClassGroup(F, F.ideal(F(7, -1)))
    v = compute_X(G, G.identity, PrecisionCtx(20))
    assert v.status == "G+W only"
    with pytest.raises(ProviderMissing):
        compute_X(G, G.identity, PrecisionCtx(20), require_full=True)


@pytest.mark.parametrize("f, q", [(3, 2), (4, 2)])
def test_fiber_sums_archimedean(f, q):
    G = _group(f)
    for c in range(G.order):
        row = check_prop24(Q, Q.ideal(f), Q.ideal(q), c, "archimedean", CTX)
        assert row["passed"]


def test_fiber_sums_padic():
    ctx = PrecisionCtx(30, 5, 20)
    G = _group(15)
    for c in range(G.order):
        assert check_prop24(Q, Q.ideal(15), Q.ideal(2), c, "padic", ctx)["passed"]


def test_gamma_p_lower_closed_form():
    ctx = PrecisionCtx(30, 5, 20)
    for r, m in [(1, 4), (1, 3), (2, 7)]:
        a, b = gamma_p_lower(r, m, ctx), gamma_p_lower_closed(r, m, ctx)
        assert a.ord == Fraction(1, 2) - Fraction(r, m)
        assert muinf_equal(a, b, 18)


def test_ladder_telescopes():
    assert ladder_check(1, 7, PrecisionCtx(30, 5, 20))["passed"]


def test_fiber_product_is_p_power_over_real_subfield():
    # the real subfield of Q(zeta_5): products of exp X over the fiber of conjugation
    ctx = PrecisionCtx(30)
    arch, pad = fiber_product_ratio(5, [4], 1, ctx)
    assert pad is None
    assert arch.rad < mp.mpf(10) ** -20


@pytest.mark.parametrize("D, p", [(-1, 5), (-3, 7)])
def test_rgc_over_q(D, p):
    ctx = PrecisionCtx(30, p, 20)
    for sigma in (0, 1):
        row = verify_rGc_over_Q(D, p, sigma, ctx)
        assert row["ord_equal"] and row["passed"]


def test_rgc_fails_for_the_wrong_prime(monkeypatch):
    real = invariants.imag_quadratic_data

    def swapped(D, p):
        data = real(D, p)
        data["alpha"] = data["alpha"].conj()
        return data

    monkeypatch.setattr(invariants, "imag_quadratic_data", swapped)
    row = verify_rGc_over_Q(-1, 5, 0, PrecisionCtx(30, 5, 20))
    assert not row["passed"]


def test_rgc_rejects_inert_prime():
    with pytest.raises(ValueError, match="splitting"):
        verify_rGc_over_Q(-1, 7, 0, PrecisionCtx(30, 7, 20))


def test_choice_independence_over_q():
    ctx = PrecisionCtx(30, 3, 20)
    G = _group(3)
    for c in range(G.order):
        assert choice_independence(G, c, ctx=ctx)["passed"]


def test_choice_independence_real_quadratic():
    F = Field(5)
    G = RayClassGroup(F, F.ideal(F(7, -1)))
    rep = choice_independence(G, G.identity, ctx=PrecisionCtx(30))
    assert rep["passed"]
    assert {r["log_eps_multiple"] for r in rep["variants"][1:]} <= {"-1", "1", "-2", "2", "-3", "3"}
