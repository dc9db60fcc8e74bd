"""Narrow ray class groups over Q and real quadratic fields of class number one.

C_f is realized as ((O/f)^x x {+-1}^n) / <image of the global units>,
the class of a principal ideal (a) being the coset of (a mod f, signs(a)).
"""
from __future__ import annotations

from functools import cached_property
from itertools import product
from math import gcd

from .cyclo import Cyclo
from .quadfield import Field, FieldElement, Ideal

__all__ = [
    "RayClassGroup",
    "Character",
    "build_ray_class_group",
    "project",
    "fiber",
    "choose_ac",
    "choose_pi_q",
]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class RayClassGroup:
    """Narrow ray class group C_f.  Classes are the integers 0..order-1,
    0 being the identity."""

    def __init__(self, F: Field, f: Ideal):
        if F.degree == 2 and F.D < 0:
            raise ValueError("ray class groups are implemented for Q and real quadratic fields")
        if f.F is not F:
            raise ValueError("modulus is not an ideal of F")
        self.F, self.f = F, f
        self.n = F.degree
        self._build()

    # construction ---------------------------------------------------------
    def _residue(self, x: FieldElement) -> tuple[int, ...]:
        return self.f.reduce(x)

    def _elt(self, res) -> FieldElement:
        return self.F(*res) if self.n == 2 else self.F(res[0])

    def _mulres(self, r1, r2):
        return self._residue(self._elt(r1) * self._elt(r2))

    def _is_unit_res(self, x: FieldElement) -> bool:
        if self.n == 1:
            return gcd(int(x.a), self.f.hnf[0]) == 1
        return (self.f + Ideal.principal(x)).norm() == 1 if not x.is_zero() else self.f.norm() == 1

    def _build(self):
        F = self.F
        units = [self._residue(x) for x in self.f.residues() if self._is_unit_res(x)]
        units = sorted(set(units))
        signs_all = list(product((1, -1), repeat=self.n))
        pairs = [(u, s) for u in units for s in signs_all]
        one = (self._residue(F(1)), (1,) * self.n)
        gens = [(self._residue(F(-1)), (-1,) * self.n)]
        if self.n == 2:
            e = F.fundamental_unit
            gens.append((self._residue(e), e.signs()))
        S = {one}
        frontier = [one]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self._pmul(a, g)
                    if b not in S:
                        S.add(b)
                        nxt.append(b)
            frontier = nxt
        self._unit_image = S
        index: dict = {}
        canon: list = []
        pairs.sort(key=lambda pr: (pr != one, self._pair_sort_key(pr)))
        for pr in pairs:
            if pr in index:
                continue
            k = len(canon)
            canon.append(pr)
            for s in S:
                index[self._pmul(pr, s)] = k
        self._index = index
        self._canon = canon
        self.order = len(canon)
        self._table: dict[tuple[int, int], int] = {}

    def _pair_sort_key(self, pr):
        u, s = pr
        if self.n == 1:
            r = u[0] if u[0] else self.f.hnf[0]
            return (s != (1,), r)
        return (tuple(-x for x in s), u[1], u[0])

    def _pmul(self, a, b):
        return (self._mulres(a[0], b[0]), tuple(x * y for x, y in zip(a[1], b[1])))

    # elements and ideals ---------------------------------------------------
    def class_of_element(self, x: FieldElement) -> int:
        """Class of the principal ideal (x) for x coprime to f."""
        if x.F is not self.F:
            raise ValueError("element of another field")
        d = _lcm(x.a.denominator, x.b.denominator)
        if d != 1:
            if gcd(d, self.f.norm()) != 1:
                raise ValueError("denominator not coprime to the modulus")
            return self.div(self.class_of_element(x * d), self.class_of_element(self.F(d)))
        if x.is_zero() or not self._is_unit_res(x):
            raise ValueError(f"{x} is not coprime to the modulus")
        key = (self._residue(x), x.signs())
        return self._index[key]

    def class_of_ideal(self, a: Ideal) -> int:
        if not a.is_coprime(self.f):
            raise ValueError("ideal not coprime to the modulus")
        return self.class_of_element(a.generator())

    def class_of_pair(self, residue, signs) -> int:
        return self._index[(tuple(residue), tuple(signs))]

    @cached_property
    def representatives(self) -> list[FieldElement]:
        """Integral elements a_c with [(a_c)] = c, of small size."""
        return [self._rep_element(pr) for pr in self._canon]

    def _rep_element(self, pr) -> FieldElement:
        F = self.F
        res, signs = pr
        if self.n == 1:
            m = self.f.hnf[0]
            r = res[0] if res[0] else m
            return F(r if signs[0] > 0 else r - m)
        base = self._elt(res)
        best = None
        fb = self.f.basis()
        R = 1
        while best is None:
            for i in range(-R, R + 1):
                for j in range(-R, R + 1):
                    z = base + fb[0] * i + fb[1] * j
                    if not z.is_zero() and z.signs() == signs:
                        key = (abs(z.norm()), z.a, z.b)
                        if best is None or key < best[0]:
                            best = (key, z)
            R *= 2
        return best[1]

    def label(self, c: int) -> str:
        if self.n == 1:
            m = self.f.hnf[0]
            return f"c_{self.representatives[c].a}/{m}"
        return f"c{c + 1}"

    # group law -------------------------------------------------------------
    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        key = (a, b) if a <= b else (b, a)
        r = self._table.get(key)
        if r is None:
            r = self._index[self._pmul(self._canon[a], self._canon[b])]
            self._table[key] = r
        return r

    def pow(self, a: int, k: int) -> int:
        k %= self.exponent
        r, base = 0, a
        while k:
            if k & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            k >>= 1
        return r

    def inv(self, a: int) -> int:
        return self.pow(a, -1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul(x, a)
            k += 1
        return k

    @cached_property
    def exponent(self) -> int:
        e = 1
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self._index[self._pmul(self._canon[x], self._canon[a])]
                k += 1
            e = _lcm(e, k)
        return e

    @cached_property
    def structure(self) -> tuple[list[int], list[int], list[tuple[int, ...]]]:
        """(generators, orders, coordinates) with orders n_1 >= n_2 >= ...,
        n_{i+1} | n_i, and coordinates[c] the exponent vector of c."""
        gens: list[int] = []
        orders: list[int] = []
        sub = {0: ()}
        while len(sub) < self.order:
            # element of maximal order in G / sub
            best, best_ord = None, 0
            for a in range(self.order):
                if a in sub:
                    continue
                k, x = 1, a
                while x not in sub:
                    x = self.mul(x, a)
                    k += 1
                if k > best_ord:
                    best, best_ord = a, k
            # adjust so that best^k = identity exactly
            h = self.pow(best, best_ord)
            coords = sub[h]
            adj = 0
            for g, n, e in zip(gens, orders, coords):
                if e % best_ord:
                    raise RuntimeError("structure decomposition failed")
                adj = self.mul(adj, self.pow(g, -(e // best_ord)))
            g_new = self.mul(best, adj)
            gens.append(g_new)
            orders.append(best_ord)
            new_sub = {}
            for c, vec in sub.items():
                x = c
                for k in range(best_ord):
                    new_sub[x] = vec + (k,)
                    x = self.mul(x, g_new)
            sub = {c: v for c, v in new_sub.items()}
            sub = {c: v + (0,) * (len(gens) - len(v)) for c, v in sub.items()}
        coords = [sub[c] + (0,) * (len(gens) - len(sub[c])) for c in range(self.order)]
        return gens, orders, coords

    # conjugation classes ------------------------------------------------
    def conjugation_class(self, iota: int) -> int:
        """s_iota = [(nu)] with nu = 1 mod f, negative at iota only."""
        signs = tuple(-1 if i == iota else 1 for i in range(self.n))
        return self._index[(self._residue(self.F(1)), signs)]

    def conjugation_witness(self, iota: int, bound: int = 64) -> FieldElement:
        signs = tuple(-1 if i == iota else 1 for i in range(self.n))
        fb = self.f.basis()
        for R in range(1, bound + 1):
            for i in range(-R, R + 1):
                for j in range(-R, R + 1) if self.n == 2 else (0,):
                    z = self.F(1) + fb[0] * i + (fb[1] * j if self.n == 2 else 0)
                    if z.signs() == signs:
                        return z
        raise RuntimeError("search bound exceeded for conjugation witness")

    def subgroup(self, gens) -> frozenset[int]:
        S = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in S:
                        S.add(b)
                        nxt.append(b)
            frontier = nxt
        return frozenset(S)

    def cm_structure(self) -> dict:
        s = [self.conjugation_class(i) for i in range(self.n)]
        sub_s = self.subgroup(s)
        prods = [self.mul(a, b) for i, a in enumerate(s) for b in s[i + 1:]]
        sub_prod = self.subgroup(prods)
        return {
            "s": s,
            "subgroup_s": sorted(sub_s),
            "subgroup_prod": sorted(sub_prod),
            "has_cm": sub_prod < sub_s,
        }

    # characters -------------------------------------------------------------
    def characters(self) -> list["Character"]:
        gens, orders, _ = self.structure
        out = []
        for ks in product(*[range(n) for n in orders]):
            out.append(Character(self, tuple(ks)))
        return out

    def trivial_character(self) -> "Character":
        return Character(self, (0,) * len(self.structure[1]))

    def to_json(self) -> dict:
        gens, orders, _ = self.structure
        cm = self.cm_structure()
        return {
            "field": repr(self.F),
            "modulus": self.f.to_json(),
            "modulus_norm": self.f.norm(),
            "order": self.order,
            "invariants": orders,
            "classes": [
                {"index": c, "label": self.label(c), "representative": repr(self.representatives[c])}
                for c in range(self.order)
            ],
            "conjugation_classes": cm["s"],
            "has_cm": cm["has_cm"],
        }


def build_ray_class_group(F: Field, f) -> RayClassGroup:
    if not isinstance(f, Ideal):
        f = F.ideal(f)
    return RayClassGroup(F, f)


class Character:
    """chi(g_i) = zeta_{n_i}^{k_i} on the structure generators.  Values are
    returned as exponents e with chi(c) = zeta_N^e, N = group exponent."""

    __slots__ = ("G", "k")

    def __init__(self, G: RayClassGroup, k: tuple[int, ...]):
        self.G, self.k = G, tuple(k)

    @property
    def N(self) -> int:
        return self.G.exponent

    def exp_at(self, c: int) -> int:
        _, orders, coords = self.G.structure
        N = self.N
        return sum(ki * ei * (N // ni) for ki, ei, ni in zip(self.k, coords[c], orders)) % N

    def value(self, c: int) -> Cyclo:
        return Cyclo.zeta(self.N, self.exp_at(c))

    def numeric(self, c: int):
        import mpmath as mp
        e = self.exp_at(c)
        return mp.expjpi(mp.mpf(2 * e) / self.N)

    def sign_at(self, iota: int) -> int:
        e = self.exp_at(self.G.conjugation_class(iota))
        if e == 0:
            return 1
        if 2 * e == self.N:
            return -1
        raise RuntimeError("character value at a conjugation class is not +-1")

    def conj(self) -> "Character":
        _, orders, _ = self.G.structure
        return Character(self.G, tuple((-k) % n for k, n in zip(self.k, orders)))

    def is_trivial(self) -> bool:
        return all(x == 0 for x in self.k)

    def order(self) -> int:
        N = self.N
        e = 0
        for c in range(self.G.order):
            e = gcd(e, self.exp_at(c))
        return N // gcd(e, N) if e else 1

    def __mul__(self, o: "Character") -> "Character":
        _, orders, _ = self.G.structure
        return Character(self.G, tuple((a + b) % n for a, b, n in zip(self.k, o.k, orders)))

    def __eq__(self, o):
        return isinstance(o, Character) and o.G is self.G and o.k == self.k

    def __hash__(self):
        return hash(self.k)

    def __repr__(self):
        return f"Character{self.k}"


def project(big: RayClassGroup, small: RayClassGroup, c: int) -> int:
    """Natural surjection C_{fq} -> C_f."""
    if not small.f.divides(big.f):
        raise ValueError("moduli are not divisible")
    return small.class_of_element(big.representatives[c])


def fiber(big: RayClassGroup, small: RayClassGroup, c: int) -> list[int]:
    if not small.f.divides(big.f):
        raise ValueError("moduli are not divisible")
    return [x for x in range(big.order) if project(big, small, x) == c]


def narrow_class_group(F: Field) -> RayClassGroup:
    return RayClassGroup(F, F.unit_ideal())


def choose_ac(G: RayClassGroup, c: int, search: int = 6) -> Ideal:
    """Integral a with a*f in the narrow class of c; smallest norm wins."""
    F = G.F
    if F.degree == 1:
        return F.unit_ideal()
    C1 = narrow_class_group(F)
    target = C1.class_of_element(G.representatives[c])
    fgen = G.f.generator()
    best = None
    for i in range(-search, search + 1):
        for j in range(-search, search + 1):
            z = F(i, j)
            if z.is_zero():
                continue
            if C1.class_of_element(z * fgen) == target:
                I = Ideal.principal(z)
                key = (I.norm(), I.hnf)
                if best is None or key < best[0]:
                    best = (key, I)
    if best is None:
        raise RuntimeError("search bound exceeded in choose_ac")
    return best[1]


def choose_pi_q(F: Field, q: Ideal) -> FieldElement:
    """Totally positive generator of q^{h+}."""
    h_plus = narrow_class_group(F).order if F.degree == 2 else 1
    if F.degree == 1:
        return F(q.hnf[0] ** h_plus)
    g = (q ** h_plus).generator()
    if g.signs() == (-1, -1):
        g = -g
    if g.signs() != (1, 1):
        e = F.fundamental_unit
        if e.signs() in ((1, -1), (-1, 1)):
            g = g * e
            if g.signs() == (-1, -1):
                g = -g
    if not g.is_totally_positive():
        raise RuntimeError("no totally positive generator found")
    return g
