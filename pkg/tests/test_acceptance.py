"""The thirteen acceptance criteria at their stated tolerances and time
budgets.  Each test records one pass/fail line, printed in the terminal
summary."""
import time

import mpmath as mp
import pytest

from conftest import record
from starkcheck.suites import EXAMPLE44_PERIODS, RunConfig, run_suite


def _run(num, title, suite, budget, **cfg):
    t0 = time.perf_counter()
    code, rep = run_suite(suite, RunConfig(**cfg))
    dt = time.perf_counter() - t0
    failed = [c["name"] for c in rep.get("checks", []) if not c["passed"] and c.get("status") != "gated"]
    ok = code == 0 and dt < budget
    record(num, title, ok, f"({dt:.1f} s, budget {budget} s{'; failed: ' + ', '.join(failed) if failed else ''})")
    assert code == 0, failed or rep.get("error")
    assert dt < budget
    return rep


def _max_field(rep, key):
    return max(mp.mpf(c[key]) for c in rep["checks"] if key in c)


def test_c01_zeta0_exact():
    rep = _run(1, "exact zeta(0, c_{r/m}) = 1/2 - r/m, m <= 50", "zeta0-exact", 5)
    assert rep["checks"][0]["max_m"] == 50


def test_c02_norm41_exact_layer():
    rep = _run(2, "norm-41 conductor over Q(sqrt 5): exact layer", "example44", 5)
    names = {c["name"]: c for c in rep["checks"]}
    assert all(names[n]["passed"] for n in names if names[n].get("status") != "gated")
    assert names["numerical identity for exp(X(c_1))"]["status"] == "gated"


def test_c02_norm41_numerical_identity_gated():
    # printed periods, kept verbatim; the identity needs the V-term provider
    assert EXAMPLE44_PERIODS == {
        "omega_id": ("-0.4929421793", "-0.8116152991"),
        "omega_sigma": ("-0.1395619319", "0.1323795194"),
        "omega_id_prime": ("-0.4443866005", "-0.3099403507"),
        "omega_rho_sigma_prime": ("-2.0247186165", "0.4533729269"),
    }
    pytest.skip("gated: requires a V-term provider for real quadratic X; not part of the pass bar")


def test_c03_closed_form_X():
    rep = _run(3, "X over Q against the closed form, 20 random (r, m)", "exp-formula", 60,
               digits=40, padic_digits=25)
    assert len(rep["checks"][0]["pairs"]) == 20
    assert mp.mpf(rep["checks"][0]["max_residual"]) < mp.mpf(10) ** -25


def test_c04_fiber_sums():
    rep = _run(4, "fiber sums of X and X_p over Q", "prop24", 120, digits=40, padic_digits=25)
    assert _max_field(rep, "max_residual") < mp.mpf(10) ** -25
    assert all(c["min_agreement_digits"] >= 25 for c in rep["checks"] if "min_agreement_digits" in c)
    cases = {c["case"] for c in rep["checks"]}
    assert len(cases) == 2


def test_c05_exp_formula():
    rep = _run(5, "exp_p(X_p) = Gamma_p (m/d)_0^(r/m-1/2) mod mu_infinity", "exp-formula", 60,
               digits=40, padic_digits=25)
    padic = [c for c in rep["checks"] if "precision" in c]
    assert len(padic) == 5 and all(c["precision"] == 25 for c in padic)


def test_c06_distribution():
    rep = _run(6, "distribution relation for Gamma_p, 10 instances", "distribution", 60, padic_digits=25)
    assert sum(1 for c in rep["checks"] if c["name"].startswith("gamma_p")) == 10


def test_c07_morita_laws():
    rep = _run(7, "Morita translation and reflection, p in {3, 5, 7, 13}", "pgamma-props", 30, seed=1)
    morita = [c for c in rep["checks"] if c["name"].startswith("Morita")]
    assert len(morita) == 8 and all(c["samples"] == 50 for c in morita)


def test_c08_dual_oracle():
    rep = _run(8, "L(0, chi) by the functional equation against exact zeta(0)", "dual-oracle", 300, digits=30)
    assert _max_field(rep, "residual") <= mp.mpf(10) ** -20


def test_c09_aggregation():
    _run(9, "L-function factorization and aggregation identities, Q(sqrt 5) in Q(zeta_5)", "funeq", 300,
         digits=30)


def test_c10_gross_stark():
    rep = _run(10, "Gross-Stark for Q(i), p = 5 and Q(sqrt -3), p = 7", "gross-stark", 240, padic_digits=20)
    assert len(rep["checks"]) == 4
    assert all(c["ord_lhs"] == c["ord_rhs"] and c["agreement_digits"] >= 20 for c in rep["checks"])


def test_c11_stark_pipeline():
    rep = _run(11, "Stark units over Q(sqrt 5), prime above 29, 60 digits", "stark", 600, digits=60)
    st = rep["stark"]
    assert st["rational_poly"][0] in ("1", "-1")
    assert mp.mpf(st["residuals"]["conjugate_log_max"]) < mp.mpf(10) ** -15
    assert st["checks"]["frobenius_reciprocity"]


def test_c12_choice_independence():
    rep = _run(12, "independence of (D, a_c, pi)", "indep", 120, digits=30, padic_digits=20)
    assert all(len(c["variants"]) == 3 for c in rep["checks"])


def test_c13_vanishing():
    rep = _run(13, "zeta(0, c) = 0 when <s_iota> = <s_iota s_iota'> over Q(sqrt 2)", "vanishing", 30)
    s = rep["checks"][0]["s"]
    assert any(x != "c1" for x in s)
