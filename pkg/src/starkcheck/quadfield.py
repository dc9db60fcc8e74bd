"""Q and quadratic fields Q(sqrt D): elements, integral ideals in HNF,
units and the real / p-adic embeddings."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd, isqrt

import mpmath as mp

from .padic import Padic, PadicExt

__all__ = [
    "Field",
    "FieldElement",
    "Ideal",
    "Embedding",
    "fundamental_totally_positive_unit",
    "embed",
    "kronecker",
    "elements_of_norm",
]


def _squarefree(n: int) -> bool:
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    n = abs(n)
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for n > 0."""
    if n <= 0:
        raise ValueError("n must be positive")
    res = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            res = -res
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                res = -res
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            res = -res
        a %= n
    return res if n == 1 else 0


def elements_of_norm(F: "Field", N: int) -> list["FieldElement"]:
    """Integral elements of an imaginary quadratic F with norm N, up to sign."""
    if F.D >= 0:
        raise ValueError("norm-form search is for imaginary quadratic fields")
    # N(a + b w) >= |D| b^2 / 4 and |a| <= sqrt(N) + |b|
    bmax = isqrt(4 * N // abs(F.D)) + 1
    amax = isqrt(N) + bmax + 1
    out = []
    for b in range(0, bmax + 1):
        for a in range(-amax, amax + 1):
            x = F(a, b)
            if x.norm() == N and -x not in out:
                out.append(x)
    return out


class Field:
    """Q (D = 1) or Q(sqrt D) with integral basis (1, w).

    w = (1 + sqrt D)/2 when D = 1 mod 4 and w = sqrt D otherwise, so
    w^2 = t*w + n with (t, n) = (1, (D-1)/4) or (0, D).
    """

    _cache: dict[int, "Field"] = {}

    def __new__(cls, D: int):
        D = int(D)
        if D in cls._cache:
            return cls._cache[D]
        if D == 0 or not _squarefree(D):
            raise ValueError(f"D must be squarefree and nonzero, got {D}")
        self = super().__new__(cls)
        self.D = D
        if D == 1:
            self.t, self.n = 0, 0
        elif D % 4 == 1:
            self.t, self.n = 1, (D - 1) // 4
        else:
            self.t, self.n = 0, D
        cls._cache[D] = self
        return self

    def __getnewargs__(self):
        return (self.D,)

    @classmethod
    def parse(cls, s: str) -> "Field":
        s = s.replace(" ", "")
        if s in ("Q", "QQ"):
            return cls(1)
        m = re.fullmatch(r"Q\(sqrt\(?(-?\d+)\)?\)", s)
        if not m:
            raise ValueError(f"cannot parse field {s!r}; use 'Q' or 'Q(sqrt D)'")
        return cls(int(m.group(1)))

    @property
    def degree(self) -> int:
        return 1 if self.D == 1 else 2

    @property
    def is_real(self) -> bool:
        return self.D >= 1

    @property
    def disc(self) -> int:
        if self.D == 1:
            return 1
        return self.D if self.D % 4 == 1 else 4 * self.D

    def __repr__(self):
        return "Q" if self.D == 1 else f"Q(sqrt {self.D})"

    def __reduce__(self):
        return (Field, (self.D,))

    # elements -----------------------------------------------------------
    def __call__(self, a, b=0) -> "FieldElement":
        return FieldElement(self, Fraction(a), Fraction(b))

    @property
    def w(self) -> "FieldElement":
        if self.D == 1:
            raise ValueError("Q has no generator w")
        return self(0, 1)

    def sqrtD(self) -> "FieldElement":
        return self(-1, 2) if self.t == 1 else self(0, 1)

    def w_real(self, index: int = 0):
        """Numerical image of w under embedding 0 (sqrt D > 0) or 1."""
        s = mp.sqrt(self.D) if index == 0 else -mp.sqrt(self.D)
        return (1 + s) / 2 if self.t == 1 else s

    @cached_property
    def fundamental_unit(self) -> "FieldElement":
        """Smallest unit > 1 under embedding 0 (real quadratic only)."""
        if self.D <= 1:
            raise ValueError("fundamental unit needs a real quadratic field")
        t, n = self.t, self.n
        b = 1
        while True:
            for sgn in (-1, 1):
                # a^2 + a*b*t - (b^2 n + sgn) = 0
                disc = b * b * t * t + 4 * (b * b * n + sgn)
                if disc >= 0:
                    r = isqrt(disc)
                    if r * r == disc and (r - b * t) % 2 == 0:
                        u = self((r - b * t) // 2, b)
                        if u.real(0) > 1:
                            return u
            b += 1

    # ideals ---------------------------------------------------------------
    def unit_ideal(self) -> "Ideal":
        return Ideal.from_generators(self, [self(1)])

    def ideal(self, *gens) -> "Ideal":
        return Ideal.from_generators(self, [g if isinstance(g, FieldElement) else self(g) for g in gens])

    def primes_above(self, q: int) -> list["Ideal"]:
        if self.D == 1:
            return [self.ideal(q)]
        roots = [r for r in range(q) if (r * r - self.t * r - self.n) % q == 0]
        if not roots:
            return [self.ideal(q)]
        out = []
        for r in roots:
            P = self.ideal(q, self(-r, 1))
            if P not in out:
                out.append(P)
        return out

    def split_type(self, q: int) -> str:
        if self.D == 1:
            return "split"
        if self.disc % q == 0:
            return "ramified"
        return "split" if len(self.primes_above(q)) == 2 else "inert"


@dataclass(frozen=True)
class FieldElement:
    F: Field
    a: Fraction
    b: Fraction = Fraction(0)

    def _c(self, o) -> "FieldElement":
        if isinstance(o, FieldElement):
            if o.F is not self.F:
                raise ValueError("elements of different fields")
            return o
        return FieldElement(self.F, Fraction(o), Fraction(0))

    def __add__(self, o):
        o = self._c(o)
        return FieldElement(self.F, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.F, -self.a, -self.b)

    def __sub__(self, o):
        return self + (-self._c(o))

    def __rsub__(self, o):
        return self._c(o) - self

    def __mul__(self, o):
        o = self._c(o)
        F = self.F
        a = self.a * o.a + self.b * o.b * F.n
        b = self.a * o.b + self.b * o.a + self.b * o.b * F.t
        return FieldElement(F, a, b)

    __rmul__ = __mul__

    def conj(self) -> "FieldElement":
        return FieldElement(self.F, self.a + self.b * self.F.t, -self.b)

    def norm(self) -> Fraction:
        F = self.F
        return self.a * self.a + self.a * self.b * F.t - self.b * self.b * F.n

    def trace(self) -> Fraction:
        return 2 * self.a + self.b * self.F.t if self.F.degree == 2 else self.a

    def inverse(self) -> "FieldElement":
        N = self.norm()
        if N == 0:
            raise ZeroDivisionError("zero element")
        c = self.conj()
        return FieldElement(self.F, c.a / N, c.b / N)

    def __truediv__(self, o):
        return self * self._c(o).inverse()

    def __rtruediv__(self, o):
        return self._c(o) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        r, base = self.F(1), self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def is_rational(self) -> bool:
        return self.b == 0

    def real(self, index: int = 0):
        """Image under the real embedding ``index`` (mpmath number)."""
        if self.F.D == 1:
            return mp.mpf(self.a.numerator) / self.a.denominator
        if self.F.D < 0:
            raise ValueError("imaginary quadratic field has no real embedding")
        return mp.mpf(self.a.numerator) / self.a.denominator + (
            mp.mpf(self.b.numerator) / self.b.denominator) * self.F.w_real(index)

    def embeddings(self) -> list:
        return [self.real(i) for i in range(self.F.degree)]

    def sign(self, index: int) -> int:
        """Exact sign under real embedding ``index``."""
        F = self.F
        if F.degree == 1:
            return (self.a > 0) - (self.a < 0)
        # a + b*w = x + y*sqrt D
        if F.t == 1:
            x, y = self.a + self.b / 2, self.b / 2
        else:
            x, y = self.a, self.b
        if index == 1:
            y = -y
        if x == 0 and y == 0:
            return 0
        if x >= 0 and y >= 0:
            return 1
        if x <= 0 and y <= 0:
            return -1
        cmp = x * x - y * y * F.D
        if x > 0:
            return 1 if cmp > 0 else -1
        return -1 if cmp > 0 else 1

    def signs(self) -> tuple[int, ...]:
        return tuple(self.sign(i) for i in range(self.F.degree))

    def is_totally_positive(self) -> bool:
        return all(s > 0 for s in self.signs())

    def coords(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def __repr__(self):
        if self.F.D == 1 or self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*w"

    def __eq__(self, o):
        if not isinstance(o, FieldElement):
            try:
                o = self._c(o)
            except (TypeError, ValueError):
                return NotImplemented
        return self.F is o.F and self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.F.D, self.a, self.b))


def _hnf2(vectors) -> tuple[int, int, int]:
    """HNF basis (A,0),(B,C) of the Z-lattice spanned by integer 2-vectors."""
    vecs = [(int(x), int(y)) for x, y in vectors]
    C, piv = 0, (0, 0)
    rest = []
    for x, y in vecs:
        if y == 0:
            rest.append(x)
            continue
        if C == 0:
            piv, C = (x, y), y
            continue
        # extended gcd on the y-coordinates
        g, s, t = _egcd(piv[1], y)
        new = (s * piv[0] + t * x, g)
        # the two leftovers with y = 0
        rest.append((y // g) * piv[0] - (piv[1] // g) * x)
        piv = new
        C = g
    if C < 0:
        piv, C = (-piv[0], -C), -C
    A = 0
    for x in rest:
        A = gcd(A, x)
    if C == 0 or A == 0:
        raise ValueError("lattice is not of full rank")
    B = piv[0] % A
    return A, B, C


def _egcd(a: int, b: int):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, s, t = _egcd(b, a % b)
    return g, t, s - (a // b) * t


class Ideal:
    """Nonzero integral ideal.

    Degree 1: the positive generator A.  Degree 2: HNF triple (A, B, C)
    for the Z-basis {A, B + C*w}, with 0 <= B < A and C | A, C | B.
    """

    __slots__ = ("F", "hnf")

    def __init__(self, F: Field, hnf: tuple[int, ...]):
        self.F, self.hnf = F, tuple(hnf)

    @classmethod
    def from_generators(cls, F: Field, gens) -> "Ideal":
        gens = [g if isinstance(g, FieldElement) else F(g) for g in gens]
        if not gens or all(g.is_zero() for g in gens):
            raise ValueError("zero ideal")
        for g in gens:
            if not g.is_integral():
                raise ValueError("ideal generators must be integral")
        if F.degree == 1:
            A = 0
            for g in gens:
                A = gcd(A, int(g.a))
            return cls(F, (A,))
        vecs = []
        for g in gens:
            for h in (g, g * F.w):
                vecs.append((h.a, h.b))
        return cls(F, _hnf2(vecs))

    @classmethod
    def principal(cls, x: FieldElement) -> "Ideal":
        return cls.from_generators(x.F, [x])

    def basis(self) -> list[FieldElement]:
        F = self.F
        if F.degree == 1:
            return [F(self.hnf[0])]
        A, B, C = self.hnf
        return [F(A), F(B, C)]

    def norm(self) -> int:
        if self.F.degree == 1:
            return self.hnf[0]
        return self.hnf[0] * self.hnf[2]

    def __mul__(self, other: "Ideal") -> "Ideal":
        if self.F.degree == 1:
            return Ideal(self.F, (self.hnf[0] * other.hnf[0],))
        prods = [x * y for x in self.basis() for y in other.basis()]
        return Ideal(self.F, _hnf2([(z.a, z.b) for z in prods]))

    def __pow__(self, k: int) -> "Ideal":
        r = self.F.unit_ideal()
        for _ in range(k):
            r = r * self
        return r

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal.from_generators(self.F, self.basis() + other.basis())

    def contains(self, x) -> bool:
        F = self.F
        x = x if isinstance(x, FieldElement) else F(x)
        if not x.is_integral():
            return False
        if F.degree == 1:
            return int(x.a) % self.hnf[0] == 0
        A, B, C = self.hnf
        if int(x.b) % C:
            return False
        k = int(x.b) // C
        return (int(x.a) - k * B) % A == 0

    def divides(self, other: "Ideal") -> bool:
        return other._divisible_by(self)

    def is_coprime(self, other: "Ideal") -> bool:
        return (self + other).norm() == 1

    def is_unit(self) -> bool:
        return self.norm() == 1

    def reduce(self, x: FieldElement) -> tuple[int, ...]:
        """Canonical representative of x mod this ideal (x integral)."""
        if self.F.degree == 1:
            return (int(x.a) % self.hnf[0],)
        A, B, C = self.hnf
        y = int(x.b)
        k = y // C
        return ((int(x.a) - k * B) % A, y - k * C)

    def residues(self) -> list[FieldElement]:
        """All residues of O modulo this ideal."""
        F = self.F
        if F.degree == 1:
            return [F(i) for i in range(self.hnf[0])]
        A, B, C = self.hnf
        return [F(x, y) for y in range(C) for x in range(A)]

    def factor(self) -> list[tuple["Ideal", int]]:
        """Prime ideal factorization."""
        out = []
        N = self.norm()
        for q in sorted(_factor(N)):
            for P in self.F.primes_above(q):
                e, J = 0, P
                while self._divisible_by(J):
                    e += 1
                    J = J * P
                if e:
                    out.append((P, e))
        return out

    def _divisible_by(self, J: "Ideal") -> bool:
        # J | I  <=>  I is contained in J
        return all(J.contains(z) for z in self.basis())

    def generator(self) -> FieldElement:
        """A generator of this (principal) ideal, for class number one fields."""
        F = self.F
        if F.degree == 1:
            return F(self.hnf[0])
        N = self.norm()
        if F.D < 0:
            cands = self._short_elements(mp.sqrt(N) + 1, mp.sqrt(N) + 1)
        else:
            eps = abs(F.fundamental_unit.real(0))
            bound = mp.sqrt(N * eps) * (1 + mp.mpf(10) ** -8)
            cands = self._short_elements(bound, bound)
        best = None
        for z in cands:
            if abs(z.norm()) == N:
                key = (abs(z.real(0) - z.real(1)) if F.D > 0 else 0, z.a, z.b)
                if best is None or key < best[0]:
                    best = (key, z)
        if best is None:
            raise ValueError(f"no generator found for ideal {self}; is it principal?")
        return best[1]

    def _short_elements(self, b0, b1) -> list[FieldElement]:
        F = self.F
        A, B, C = self.hnf
        out = []
        if F.D > 0:
            sq = mp.sqrt(F.D)
            ymax = int(mp.floor((b0 + b1) / sq / C)) + 1
            for k in range(-ymax, ymax + 1):
                y = k * C
                # sigma_0 = x + y*w0 in [-b0, b0]
                w0 = F.w_real(0)
                lo = int(mp.floor((-b0 - y * w0 - k * B) / A)) - 1
                hi = int(mp.ceil((b0 - y * w0 - k * B) / A)) + 1
                for m in range(lo, hi + 1):
                    z = F(m * A + k * B, y)
                    if not z.is_zero() and abs(z.real(1)) <= b1 and abs(z.real(0)) <= b0:
                        out.append(z)
        else:
            r = int(b0) + 2
            ymax = int(2 * r / mp.sqrt(-F.D) / C) + 1
            for k in range(-ymax, ymax + 1):
                for m in range(-(2 * r // A) - 2 - abs(k * B) // A, (2 * r // A) + 3 + abs(k * B) // A):
                    z = F(m * A + k * B, k * C)
                    if not z.is_zero() and z.norm() <= b0 * b0:
                        out.append(z)
        return out

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.F is other.F and self.hnf == other.hnf

    def __hash__(self):
        return hash((self.F.D, self.hnf))

    def __repr__(self):
        if self.F.degree == 1:
            return f"({self.hnf[0]})"
        return f"Ideal[{self.hnf[0]}, {self.hnf[1]}+{self.hnf[2]}w]"

    def to_json(self):
        return list(self.hnf)


def fundamental_totally_positive_unit(F: Field) -> FieldElement:
    """Generator eps_+ > 1 of the totally positive units."""
    if F.degree != 2 or F.D < 0:
        raise ValueError("totally positive unit group is trivial or undefined for this field")
    e = F.fundamental_unit
    if e.norm() == -1:
        return e * e
    return e


# ---------------------------------------------------------------------------
# embeddings


@dataclass(frozen=True)
class Embedding:
    """A real embedding (kind='real', index 0 or 1) or a p-adic one.

    For p-adic embeddings ``root`` is the residue mod p of the image of
    sqrt D (split case); inert primes map into Q_p(sqrt D).
    """

    kind: str
    index: int = 0
    p: int | None = None
    root: int | None = None

    @classmethod
    def real(cls, index: int = 0) -> "Embedding":
        return cls("real", index)

    @classmethod
    def padic(cls, F: Field, p: int, choice: int = 0, require_split: bool = False) -> "Embedding":
        if p == 2:
            raise ValueError("p = 2 is not supported")
        if F.D == 1:
            return cls("padic", p=p, root=0)
        if F.D % p == 0:
            raise ValueError(f"p = {p} ramifies in {F}; ramified embeddings are not supported")
        roots = sorted(r for r in range(p) if (r * r - F.D) % p == 0)
        if not roots:
            if require_split:
                raise ValueError(f"no root mod p: {p} is inert in {F}")
            return cls("inert", p=p)
        return cls("padic", p=p, root=roots[choice % 2])


def _hensel_sqrt(D: int, r: int, p: int, N: int) -> int:
    mod = p
    x = r
    while mod < p ** N:
        mod = min(mod * mod, p ** N)
        x = (x - (x * x - D) * pow(2 * x, -1, mod)) % mod
    return x % p ** N


def embed(x: FieldElement, e: Embedding, ctx=None):
    """Image of x under the embedding e (mpmath number, Padic or PadicExt)."""
    F = x.F
    if e.kind == "real":
        if ctx is not None:
            with mp.workdps(ctx.digits + 10):
                return x.real(e.index)
        return x.real(e.index)
    N = ctx.padic_digits if ctx is not None else 30
    p = e.p
    # x = u + v*sqrt D
    if F.D == 1 or x.b == 0:
        val = Padic.from_rational(x.a, p, N) if x.a != 0 else Padic.zero(p, N)
        return val if e.kind == "padic" else PadicExt.from_padic(val, F.D)
    if F.t == 1:
        u, v = x.a + x.b / 2, x.b / 2
    else:
        u, v = x.a, x.b
    if e.kind == "padic":
        s = _hensel_sqrt(F.D, e.root, p, N + 2)
        sp = Padic(p, 0, s, N + 2)
        res = sp * Padic.from_rational(v, p, N + 2) + (u if u != 0 else 0)
        return res
    pu = Padic.from_rational(u, p, N) if u != 0 else Padic.zero(p, N)
    pv = Padic.from_rational(v, p, N) if v != 0 else Padic.zero(p, N)
    return PadicExt(pu, pv, F.D)
