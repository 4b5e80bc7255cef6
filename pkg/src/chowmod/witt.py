"""Truncated big Witt vectors.

``W_m(k)`` is the group ``(1 + u k[u]) / (1 + u^{m+1} k[u])`` under series
multiplication, with the product ``star`` determined by
``(1 - a u) star (1 - b u) = 1 - a b u``.  A vector stores the coefficients
``c_1..c_m`` of its representative ``1 + c_1 u + ... + c_m u^m``.

Two independent product algorithms are provided: `star_ghost` (via ghost
coordinates, characteristic zero only) and `star_generators` (via the
decomposition into factors ``1 - a_n u^n``, any field).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .algebra.fields import Field, Rationals
from .algebra.poly import Poly


class TruncationMismatch(ValueError):
    pass


@dataclass(frozen=True)
class WittVector:
    field: Field
    m: int
    coeffs: tuple

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("truncation must be positive")
        if len(self.coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(self.coeffs)}")

    # -- constructors ------------------------------------------------------
    @classmethod
    def from_coeffs(cls, field: Field, m: int, coeffs) -> "WittVector":
        coeffs = [field.coerce(c) for c in coeffs][:m]
        coeffs += [field.zero] * (m - len(coeffs))
        return cls(field, m, tuple(coeffs))

    @classmethod
    def zero(cls, field: Field, m: int) -> "WittVector":
        return cls(field, m, (field.zero,) * m)

    @classmethod
    def one(cls, field: Field, m: int) -> "WittVector":
        """The ring unit, the class of ``1 - u``."""
        return cls.from_coeffs(field, m, [field.neg(field.one)])

    @classmethod
    def teichmuller(cls, field: Field, m: int, a) -> "WittVector":
        """The class of ``1 - a u``."""
        return cls.from_coeffs(field, m, [field.neg(field.coerce(a))])

    @classmethod
    def from_poly(cls, f: Poly, m: int) -> "WittVector":
        F = f.field
        if f[0] != F.one:
            raise ValueError("series must have constant term 1")
        return cls.from_coeffs(F, m, [f[i] for i in range(1, m + 1)])

    @classmethod
    def random(cls, field: Field, m: int, rng: random.Random) -> "WittVector":
        return cls(field, m, tuple(field.random_element(rng) for _ in range(m)))

    @classmethod
    def all(cls, field: Field, m: int):
        """Every element of ``W_m`` of a finite field."""
        import itertools

        for coeffs in itertools.product(list(field.elements()), repeat=m):
            yield cls(field, m, tuple(coeffs))

    # -- views -------------------------------------------------------------
    def series(self) -> list:
        """Coefficient list ``[1, c_1, ..., c_m]``."""
        return [self.field.one, *self.coeffs]

    def to_poly(self) -> Poly:
        return Poly(self.field, self.series())

    def is_zero(self) -> bool:
        return all(c == self.field.zero for c in self.coeffs)

    def format(self) -> str:
        return ",".join(self.field.format(c) for c in self.coeffs)

    def _check(self, other: "WittVector"):
        if other.m != self.m:
            raise TruncationMismatch(f"truncations {self.m} and {other.m}")
        if other.field != self.field:
            raise TruncationMismatch(f"fields {self.field} and {other.field}")

    # -- group structure -----------------------------------------------------
    def __add__(self, other: "WittVector") -> "WittVector":
        self._check(other)
        return WittVector(self.field, self.m, tuple(_series_mul(self.field, self.series(), other.series(), self.m)[1:]))

    def __neg__(self) -> "WittVector":
        return WittVector(self.field, self.m, tuple(_series_inv(self.field, self.series(), self.m)[1:]))

    def __sub__(self, other: "WittVector") -> "WittVector":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scalar(other)
        return star_generators(self, other)

    __rmul__ = __mul__

    def scalar(self, n: int) -> "WittVector":
        """``n``-fold sum (a power of the representing series)."""
        x = self if n >= 0 else -self
        n = abs(n)
        p = self.field.characteristic
        while p and n and n % p == 0:
            x = x._frobenius_power()
            n //= p
        if n == 1:
            return x
        result = WittVector.zero(self.field, self.m)
        while n:
            if n & 1:
                result = result + x
            x = x + x
            n >>= 1
        return result

    def _frobenius_power(self) -> "WittVector":
        """``p x`` in characteristic ``p``: ``f(u)^p = sum c_i^p u^(i p)``."""
        F, p = self.field, self.field.characteristic
        prime = F.order == p
        coeffs = [F.zero] * self.m
        for i in range(1, self.m // p + 1):
            c = self.coeffs[i - 1]
            if c != F.zero:
                coeffs[i * p - 1] = c if prime else F.pow(c, p)
        return WittVector(self.field, self.m, tuple(coeffs))

    def lower(self, m: int) -> "WittVector":
        """Image under the quotient map ``W_self.m -> W_m``."""
        if m > self.m:
            raise TruncationMismatch("can only lower the truncation")
        return WittVector(self.field, m, self.coeffs[:m])

    def raise_to(self, m: int) -> "WittVector":
        """The lift padding with zeros; ``raise_to(m).lower(self.m) == self``."""
        if m < self.m:
            raise TruncationMismatch("can only raise the truncation")
        return WittVector(self.field, m, self.coeffs + (self.field.zero,) * (m - self.m))


def _series_mul(F: Field, a: list, b: list, m: int) -> list:
    out = [F.zero] * (m + 1)
    for i, x in enumerate(a[: m + 1]):
        if x == F.zero:
            continue
        for j, y in enumerate(b[: m + 1 - i]):
            if y != F.zero:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _mul_binomial_inplace(F: Field, r: list, e: int, c) -> None:
    """``r <- r * (1 - c u^e)`` truncated to ``len(r)`` terms."""
    for k in range(len(r) - 1, e - 1, -1):
        if r[k - e] != F.zero:
            r[k] = F.sub(r[k], F.mul(c, r[k - e]))


def _series_inv(F: Field, a: list, m: int) -> list:
    """Inverse of a series with constant term 1, modulo ``u^{m+1}``."""
    out = [F.one] + [F.zero] * m
    for n in range(1, m + 1):
        acc = F.zero
        for i in range(1, min(n, len(a) - 1) + 1):
            acc = F.add(acc, F.mul(a[i], out[n - i]))
        out[n] = F.neg(acc)
    return out


def witt_add(x: WittVector, y: WittVector) -> WittVector:
    return x + y


def witt_neg(x: WittVector) -> WittVector:
    return -x


# -- ghost coordinates ---------------------------------------------------------

@dataclass(frozen=True)
class GhostVector:
    field: Field
    m: int
    entries: tuple

    def __mul__(self, other: "GhostVector") -> "GhostVector":
        F = self.field
        return GhostVector(F, self.m, tuple(F.mul(a, b) for a, b in zip(self.entries, other.entries)))

    def __add__(self, other: "GhostVector") -> "GhostVector":
        F = self.field
        return GhostVector(F, self.m, tuple(F.add(a, b) for a, b in zip(self.entries, other.entries)))


def ghost(x: WittVector) -> GhostVector:
    """Coefficients of ``-u f'(u) / f(u)``: ``gh_n = -n c_n - sum_{i<n} c_i gh_{n-i}``."""
    F = x.field
    c = x.series()
    gh = [F.zero] * (x.m + 1)
    for n in range(1, x.m + 1):
        acc = F.neg(F.mul(F.from_int(n), c[n]))
        for i in range(1, n):
            acc = F.sub(acc, F.mul(c[i], gh[n - i]))
        gh[n] = acc
    return GhostVector(F, x.m, tuple(gh[1:]))


def from_ghost(g: GhostVector) -> WittVector:
    """Inverse of `ghost` in characteristic zero (triangular solve)."""
    F = g.field
    if F.characteristic != 0:
        raise ValueError("ghost coordinates are not invertible in positive characteristic")
    gh = [F.zero, *g.entries]
    c = [F.one] + [F.zero] * g.m
    for n in range(1, g.m + 1):
        acc = gh[n]
        for i in range(1, n):
            acc = F.add(acc, F.mul(c[i], gh[n - i]))
        c[n] = F.neg(F.div(acc, F.from_int(n)))
    return WittVector(F, g.m, tuple(c[1:]))


def star_ghost(x: WittVector, y: WittVector) -> WittVector:
    """Product through ghost coordinates; characteristic zero only."""
    x._check(y)
    if x.field.characteristic != 0:
        raise ValueError("star_ghost needs a field of characteristic zero")
    return from_ghost(ghost(x) * ghost(y))


# -- generator decomposition -------------------------------------------------

@dataclass(frozen=True)
class GeneratorDecomposition:
    """``x = prod_{n=1}^m (1 - a_n u^n)`` modulo ``u^{m+1}``."""

    field: Field
    m: int
    entries: tuple


def to_generators(x: WittVector) -> GeneratorDecomposition:
    F, m = x.field, x.m
    r = x.series()
    out = []
    for n in range(1, m + 1):
        a = F.neg(r[n])
        out.append(a)
        if a != F.zero:
            # divide by (1 - a u^n)
            for k in range(n, m + 1):
                if r[k - n] != F.zero:
                    r[k] = F.add(r[k], F.mul(a, r[k - n]))
    return GeneratorDecomposition(F, m, tuple(out))


def from_generators(g: GeneratorDecomposition) -> WittVector:
    F, m = g.field, g.m
    r = [F.one] + [F.zero] * m
    for n, a in enumerate(g.entries, start=1):
        if a != F.zero:
            _mul_binomial_inplace(F, r, n, a)
    return WittVector(F, m, tuple(r[1:]))


def star_generators(x: WittVector, y: WittVector) -> WittVector:
    """Bilinear expansion of ``(1 - a u^i) star (1 - b u^j) = (1 - a^{j/d} b^{i/d} u^{ij/d})^d``."""
    x._check(y)
    F, m = x.field, x.m
    ga, gb = to_generators(x).entries, to_generators(y).entries
    if isinstance(F, Rationals):
        return WittVector(F, m, _star_rational(ga, gb, m))
    r = [F.one] + [F.zero] * m
    for i, a in enumerate(ga, start=1):
        if a == F.zero:
            continue
        for j, b in enumerate(gb, start=1):
            if b == F.zero:
                continue
            d = gcd(i, j)
            e = i * j // d
            if e <= m:
                c = F.mul(F.pow(a, j // d), F.pow(b, i // d))
                for _ in range(d):
                    _mul_binomial_inplace(F, r, e, c)
    return WittVector(F, m, tuple(r[1:]))


def _star_rational(ga, gb, m: int) -> tuple:
    """The generator expansion over Q in integers.

    With ``L`` the common denominator of the generators and ``S = L^2``, every
    term coefficient times ``S^e`` is the integer ``A^{j/d} B^{i/d} L^{2e - (i+j)/d}``
    (``A = a L``, ``B = b L``), so the series ``r(u / S)`` has integer
    coefficients.  Factors sharing the exponent ``e`` are multiplied as short
    polynomials in ``u^e`` before entering the series.
    """
    L = 1
    for a in ga + gb:
        L = lcm(L, a.denominator)
    A = [int(a * L) for a in ga]
    B = [int(b * L) for b in gb]
    groups: dict[int, list] = {}
    for i in range(1, m + 1):
        if not A[i - 1]:
            continue
        for j in range(1, m + 1):
            if not B[j - 1]:
                continue
            d = gcd(i, j)
            e = i * j // d
            if e > m:
                continue
            c = A[i - 1] ** (j // d) * B[j - 1] ** (i // d) * L ** (2 * e - (i + j) // d)
            n = m // e
            g = groups.setdefault(e, [1] + [0] * n)
            for _ in range(d):
                for k in range(n, 0, -1):
                    if g[k - 1]:
                        g[k] -= c * g[k - 1]
    r = [1] + [0] * m
    for e, g in groups.items():
        out = [0] * (m + 1)
        for k, rk in enumerate(r):
            if rk:
                for t in range(0, (m - k) // e + 1):
                    if g[t]:
                        out[k + t * e] += rk * g[t]
        r = out
    S = L * L
    return tuple(Fraction(r[k], S**k) for k in range(1, m + 1))


def witt_star(x: WittVector, y: WittVector) -> WittVector:
    return star_generators(x, y)


def star_polynomials(f: Poly, g: Poly) -> Poly:
    """Untruncated product of two polynomials with constant term 1.

    The product of polynomials of degrees ``a`` and ``b`` is a polynomial of
    degree at most ``a b``, so truncating there loses nothing.
    """
    m = max(1, f.degree * g.degree)
    return star_generators(WittVector.from_poly(f, m), WittVector.from_poly(g, m)).to_poly()


def additive_order(x: WittVector) -> int:
    """Smallest power ``N`` of the characteristic with ``N x = 0``."""
    p = x.field.characteristic
    if p == 0:
        raise ValueError("additive order is defined here for finite fields")
    n, y = 1, x
    while not y.is_zero():
        y = y.scalar(p)
        n *= p
    return n


# -- invariant suite -----------------------------------------------------------

def selftest(field: Field, m: int, trials: int = 40, seed: int = 0) -> dict:
    """Ring axioms and ghost/torsion checks on random (or exhaustive) inputs."""
    rng = random.Random(seed)
    checks = []

    def record(name, ok, counterexample=None):
        entry = {"name": name, "status": "pass" if ok else "fail"}
        if not ok:
            entry["counterexample"] = counterexample
        checks.append(entry)

    def sample():
        return WittVector.random(field, m, rng)

    def first_failure(pred, arity):
        for _ in range(trials):
            args = [sample() for _ in range(arity)]
            if not pred(*args):
                return [a.format() for a in args]
        return None

    unit = WittVector.one(field, m)
    zero = WittVector.zero(field, m)
    star = star_generators
    props = {
        "add_associative": (lambda a, b, c: (a + b) + c == a + (b + c), 3),
        "add_commutative": (lambda a, b: a + b == b + a, 2),
        "add_inverse": (lambda a: a + (-a) == zero, 1),
        "star_associative": (lambda a, b, c: star(star(a, b), c) == star(a, star(b, c)), 3),
        "star_commutative": (lambda a, b: star(a, b) == star(b, a), 2),
        "distributive": (lambda a, b, c: star(a, b + c) == star(a, b) + star(a, c), 3),
        "star_unit": (lambda a: star(unit, a) == a, 1),
        "generator_roundtrip": (lambda a: from_generators(to_generators(a)) == a, 1),
        "ghost_additive": (lambda a, b: ghost(a + b) == ghost(a) + ghost(b), 2),
    }
    if field.characteristic == 0:
        props["ghost_multiplicative"] = (lambda a, b: ghost(star(a, b)) == ghost(a) * ghost(b), 2)
        props["star_algorithms_agree"] = (lambda a, b: star_ghost(a, b) == star_generators(a, b), 2)
    for name, (pred, arity) in props.items():
        bad = first_failure(pred, arity)
        record(name, bad is None, bad)
    p = field.characteristic
    if p and field.order == p:
        # p^{k+1} kills W_{p^k}; check on the largest p-power truncation <= m
        k = 0
        while p ** (k + 1) <= m:
            k += 1
        n = p**k
        elems = list(WittVector.all(field, n)) if p**n <= 4096 else [WittVector.random(field, n, rng) for _ in range(trials)]
        bad = next((x.format() for x in elems if not x.scalar(p ** (k + 1)).is_zero()), None)
        record("p_torsion", bad is None, bad)
        record("order_of_unit", additive_order(WittVector.one(field, n)) == p ** (k + 1), n)
        frob = WittVector.from_poly(Poly(field, [1, -1]) ** (p**k), m)
        record("frobenius_identity", frob == WittVector.from_poly(Poly.monomial(field, p**k, -1) + Poly.one(field), m))
    return {"field": repr(field), "m": m, "checks": checks}
