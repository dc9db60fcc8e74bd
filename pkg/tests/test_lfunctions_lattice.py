from math import gcd

import mpmath as mp
import pytest

from starkcheck.arith import PrecisionCtx
from starkcheck.invariants import class_of_r, closed_form_X
from starkcheck.lattice import integer_relation, lll, recognize_algebraic, recognize_in_quadratic
from starkcheck.lfunctions import all_L_values, hecke_L, partial_zeta0_numeric, partial_zeta_deriv0
from starkcheck.quadfield import Field
from starkcheck.rayclass import RayClassGroup
from starkcheck.shintani import zeta0_table

CTX = PrecisionCtx(30)


def _close(a, b, tol):
    with mp.workdps(45):
        return abs(a - b) < tol


def test_odd_quadratic_character_mod_4():
    Q = Field(1)
    G = RayClassGroup(Q, Q.ideal(4))
    chi = next(c for c in G.characters() if not c.is_trivial())
    L = hecke_L(chi, CTX)
    assert _close(L.value.mid, mp.mpf(1) / 2, mp.mpf(10) ** -25)


@pytest.mark.parametrize("m", [5, 12])
def test_zeta_derivative_over_q_matches_log_gamma(m):
    Q = Field(1)
    G = RayClassGroup(Q, Q.ideal(m))
    Lv = all_L_values(G, CTX)
    for r in range(1, m):
        if gcd(r, m) == 1:
            d = partial_zeta_deriv0(G, class_of_r(G, r), CTX, Lv)
            assert _close(d.mid, closed_form_X(r, m, CTX).mid, mp.mpf(10) ** -20)


def test_dual_oracle_norm_41():
    F = Field(5)
    G = RayClassGroup(F, F.ideal(F(7, -1)))
    z = zeta0_table(G)
    Lv = all_L_values(G, CTX)
    for c in range(G.order):
        b = partial_zeta0_numeric(G, c, CTX, Lv)
        v = mp.mpf(z[c].numerator) / z[c].denominator
        assert _close(b.mid, v, mp.mpf(10) ** -20)
        assert abs(b.mid - v) <= b.rad + mp.mpf(10) ** -25
    # sums and differences of zeta'(0, c) two ways
    d1, d2 = (partial_zeta_deriv0(G, c, CTX, Lv).mid for c in range(2))
    triv = next(k for k in Lv if not any(k))
    sgn = next(k for k in Lv if any(k))
    assert _close(d1 + d2, Lv[triv].derivative.mid, mp.mpf(10) ** -20)
    assert _close(abs(d1 - d2), abs(Lv[sgn].derivative.mid), mp.mpf(10) ** -20)


def test_lll_reduces():
    red = lll([[1, 0, 0, 1000], [0, 1, 0, 1414], [0, 0, 1, 1732]])
    assert max(abs(x) for x in red[0]) < 100


def test_integer_relation():
    with mp.workdps(50):
        c = integer_relation([mp.log(2), mp.log(3), mp.log(12)], 40)
    assert c is not None
    c = [-t for t in c] if c[2] < 0 else c
    assert c == [-2, -1, 1]


def test_cube_root_of_two():
    with mp.workdps(70):
        x = mp.cbrt(2)
        assert recognize_algebraic(x, 3, ctx=PrecisionCtx(60)) == [-2, 0, 0, 1]


def test_golden_ratio_in_q_sqrt5():
    F = Field(5)
    with mp.workdps(50):
        x = 7 + 3 * F.w_real(0)
        assert recognize_in_quadratic(x, F.w_real(0), 40) == (7, 3)
        assert recognize_in_quadratic(mp.pi, F.w_real(0), 40, 10 ** 6) is None
