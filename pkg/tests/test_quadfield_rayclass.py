from math import gcd

import pytest
from hypothesis import given, strategies as st

from starkcheck.padic import Padic
from starkcheck.quadfield import (Embedding, Field, embed, elements_of_norm, fundamental_totally_positive_unit,
                                  kronecker)
from starkcheck.rayclass import RayClassGroup, fiber, project
from starkcheck.shintani import zeta0_table


def test_parse_field():
    assert Field.parse("Q").degree == 1
    F = Field.parse("Q(sqrt 5)")
    assert F.D == 5 and F.disc == 5 and F.is_real
    assert Field.parse("Q(sqrt -3)").disc == -3
    with pytest.raises(ValueError):
        Field.parse("Q(sqrt 12)")


def test_totally_positive_units():
    F5, F2 = Field(5), Field(2)
    assert fundamental_totally_positive_unit(F5) == (F5(3) + F5.sqrtD()) / 2
    assert fundamental_totally_positive_unit(F2) == F2(3) + F2.sqrtD() * 2


def test_norm_of_conductor():
    F = Field(5)
    x = (F(13) - F.sqrtD()) / 2
    assert x.norm() == 41
    assert F.ideal(x).norm() == 41


def test_padic_embedding_of_sqrt5():
    F = Field(5)
    roots = set()
    for choice in (0, 1):
        v = embed(F.sqrtD(), Embedding.padic(F, 11, choice), None)
        assert isinstance(v, Padic)
        assert (v * v).equals(Padic.from_rational(5, 11, 20), 20)
        roots.add(v.residue_int() % 11)
    assert roots == {4, 7}


def test_inert_embedding():
    F = Field(5)
    with pytest.raises(ValueError):
        Embedding.padic(F, 7, require_split=True)
    assert Embedding.padic(F, 7).kind == "inert"


@given(st.integers(-50, 50), st.integers(3, 97).filter(lambda n: n % 2))
def test_kronecker_multiplicative(a, n):
    b = a + n
    assert kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n)


def test_units_of_imaginary_fields():
    # elements are listed up to sign
    assert 2 * len(elements_of_norm(Field(-1), 1)) == 4
    assert 2 * len(elements_of_norm(Field(-3), 1)) == 6
    assert 2 * len(elements_of_norm(Field(-7), 1)) == 2


def test_trivial_modulus_over_q_sqrt5():
    F = Field(5)
    assert RayClassGroup(F, F.unit_ideal()).order == 1


def test_ray_class_group_over_q():
    Q = Field(1)
    for m in (3, 7, 12, 15):
        G = RayClassGroup(Q, Q.ideal(m))
        assert G.order == sum(1 for r in range(1, m + 1) if gcd(r, m) == 1)
        # conjugation is the class of -1, i.e. of r = m - 1
        assert G.conjugation_class(0) == G.class_of_element(Q(m - 1))


def test_fiber_15_to_3():
    Q = Field(1)
    big, small = RayClassGroup(Q, Q.ideal(15)), RayClassGroup(Q, Q.ideal(3))
    c = small.class_of_element(Q(1))
    got = sorted(r for r in range(1, 16) if gcd(r, 15) == 1
                 and big.class_of_element(Q(r)) in fiber(big, small, c))
    assert got == [1, 4, 7, 13]


def test_fibers_have_constant_size():
    F = Field(5)
    p = F.primes_above(11)[0]
    big, small = RayClassGroup(F, p * F.ideal(2)), RayClassGroup(F, F.ideal(2))
    sizes = {len(fiber(big, small, c)) for c in range(small.order)}
    assert sizes == {big.order // small.order}
    assert all(project(big, small, big.mul(a, b)) == small.mul(project(big, small, a), project(big, small, b))
               for a in range(big.order) for b in range(big.order))


def test_fiber_sum_of_zeta0():
    # sum over the fiber equals zeta(0, c) - zeta(0, [q]^{-1} c) for q not dividing f
    Q = Field(1)
    small, big = RayClassGroup(Q, Q.ideal(5)), RayClassGroup(Q, Q.ideal(35))
    zs, zb = zeta0_table(small), zeta0_table(big)
    q = small.class_of_element(Q(7))
    for c in range(small.order):
        total = sum(zb[x] for x in fiber(big, small, c))
        assert total == zs[c] - zs[small.div(c, q)]


def test_example_modulus_of_norm_41():
    F = Field(5)
    G = RayClassGroup(F, F.ideal(F(7, -1)))
    assert G.order == 2
    assert G.class_of_element(F(3)) != G.identity
    assert G.cm_structure()["has_cm"]


def test_characters_orthogonal():
    F = Field(2)
    G = RayClassGroup(F, F.ideal(5))
    chars = G.characters()
    assert len(chars) == G.order
    for chi in chars:
        s = sum(complex(chi.numeric(c)) for c in range(G.order))
        assert abs(s - (G.order if chi.is_trivial() else 0)) < 1e-9
