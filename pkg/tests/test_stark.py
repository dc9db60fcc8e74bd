from fractions import Fraction

import pytest

from starkcheck import stark
from starkcheck.arith import PrecisionCtx
from starkcheck.quadfield import Field
from starkcheck.stark import (aggregation_coeffs, check_funeq, frobenius_degrees, gross_stark_check,
                              roots_of_unity_count, stark_pipeline)


def test_roots_of_unity():
    assert [roots_of_unity_count(Field(D)) for D in (-1, -3, -7, -15)] == [4, 6, 2, 2]


def test_funeq_real_subfield_of_q_zeta5():
    rep = check_funeq(Field(5), 5, 5, (), 1, PrecisionCtx(30))
    assert rep["checks"]["factorization_s0"] and rep["checks"]["zeta0_aggregation"] and rep["checks"]["zeta_deriv_aggregation"]
    assert rep["passed"]


def test_aggregation_over_q_is_orthogonality():
    # F = Q, K = Q(zeta_7): r(c, sigma) = |G| delta
    r = aggregation_coeffs(Field(1), 7, 7, (), 3)
    assert sorted(r.values()) == [0] * 5 + [6]


def test_aggregation_sums_to_fiber_size():
    r = aggregation_coeffs(Field(5), 5, 5, (), 1)
    assert all(isinstance(v, Fraction) for v in r.values())


@pytest.mark.parametrize("D, p", [(-1, 5), (-3, 7), (-7, 11)])
def test_gross_stark(D, p):
    rep = gross_stark_check(D, p, PrecisionCtx(30, p, 20))
    assert rep["passed"]
    for row in rep["per_sigma"]:
        assert row["ord_lhs"] == row["ord_rhs"]
        assert row["agreement_digits"] >= 20


def test_gross_stark_needs_split_prime():
    with pytest.raises(ValueError, match="splitting"):
        gross_stark_check(-1, 7, PrecisionCtx(30, 7, 20))


def test_frobenius_degrees_of_known_polynomial():
    F = Field(5)
    P = [F(1), F(-1, -4), F(5, 5), F(-1, -4), F(1)]
    # w = 5 mod (11, w - 4): coefficients reduce to 1, -17, 25, -17, 1
    degs = frobenius_degrees(P, F, 11, 4)
    assert sum(degs) == 4 and len(set(degs)) == 1


@pytest.fixture(scope="module")
def pipeline29():
    F = Field(5)
    return stark_pipeline(F, F.primes_above(29)[0], None, PrecisionCtx(40))


def test_stark_pipeline(pipeline29):
    rep = pipeline29
    assert rep["passed"], rep["checks"]
    assert rep["inputs"]["[H:F]"] == 4
    assert rep["rational_poly"][0] in ("1", "-1")
    assert any(row["order"] == 4 for row in rep["frobenius"])


def test_stark_reciprocity_detects_a_twist(monkeypatch):
    real = stark._frobenius_theta

    def twisted(F, G, xs, cosets, coset_of, tau, disc, iota, ctx):
        return real(F, G, xs, cosets, coset_of, G.inv(tau), disc, iota, ctx)

    monkeypatch.setattr(stark, "_frobenius_theta", twisted)
    F = Field(5)
    rep = stark_pipeline(F, F.primes_above(29)[0], None, PrecisionCtx(40))
    assert rep["checks"]["frobenius_degrees"]
    assert not rep["checks"]["frobenius_reciprocity"]


def test_pipeline_requires_split_place():
    F = Field(5)
    f = F.primes_above(29)[0]
    with pytest.raises(ValueError):
        # s_iota for the second place is nontrivial, so it does not split in the trivial kernel
        stark_pipeline(F, f, [0], PrecisionCtx(40), iota=1)
