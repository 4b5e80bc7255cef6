"""Zero-cycles on the affine line and the maps relating them to Witt vectors.

A closed point of A^1 is a finite `PlaceP1` (a monic irreducible polynomial).
Pushforwards along the multiplication map, power maps and polynomial maps
are computed from characteristic polynomials of multiplication operators on
residue algebras, so no extension-field arithmetic is needed; the resulting
polynomial is factored to read off places and multiplicities.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebra.factor import factor, is_irreducible
from .algebra.fields import Field
from .algebra.places import INF, PlaceP1
from .algebra.poly import Poly, RatFunc, charpoly_of_mult, companion_power_rows, det_poly_matrix, parse_poly


class SupportAtZero(ValueError):
    """A cycle meets the point ``u = 0`` where the operation is undefined."""


@dataclass(frozen=True)
class ZeroCycleA1:
    field: Field
    terms: tuple = dc_field(default=())

    # terms: sorted tuple of (PlaceP1, multiplicity) with nonzero multiplicities

    @classmethod
    def from_dict(cls, field: Field, terms: dict) -> "ZeroCycleA1":
        merged: dict[PlaceP1, int] = {}
        for P, e in terms.items():
            if P.is_infinite:
                raise ValueError("zero-cycles on A^1 have finite support")
            if P.poly.field != field:
                raise ValueError(f"place over {P.poly.field}, cycle over {field}")
            merged[P] = merged.get(P, 0) + e
        return cls(field, tuple(sorted(((P, e) for P, e in merged.items() if e), key=lambda pe: pe[0].sort_key())))

    @classmethod
    def zero(cls, field: Field) -> "ZeroCycleA1":
        return cls(field, ())

    @classmethod
    def place(cls, poly: Poly, mult: int = 1) -> "ZeroCycleA1":
        return cls.from_dict(poly.field, {PlaceP1(poly.monic()): mult})

    @classmethod
    def point(cls, field: Field, a, mult: int = 1) -> "ZeroCycleA1":
        return cls.from_dict(field, {PlaceP1.rational(field, a): mult})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other: "ZeroCycleA1") -> "ZeroCycleA1":
        d = self.as_dict()
        for P, e in other.terms:
            d[P] = d.get(P, 0) + e
        return ZeroCycleA1.from_dict(self.field, d)

    def __neg__(self) -> "ZeroCycleA1":
        return ZeroCycleA1(self.field, tuple((P, -e) for P, e in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int) -> "ZeroCycleA1":
        return ZeroCycleA1.from_dict(self.field, {P: n * e for P, e in self.terms})

    @property
    def degree(self) -> int:
        return sum(P.degree * e for P, e in self.terms)

    def is_effective(self) -> bool:
        return all(e > 0 for _, e in self.terms)

    def avoids_zero(self) -> bool:
        x = Poly.x(self.field)
        return all(P.poly != x for P, _ in self.terms)

    def require_off_zero(self):
        if not self.avoids_zero():
            raise SupportAtZero("cycle is supported at u = 0")

    def format(self, var: str = "u") -> str:
        if not self.terms:
            return "0"
        parts = []
        for P, e in self.terms:
            parts.append(f"{'-' if e < 0 else '+'} {abs(e)}*[{P.poly.format(var)}]")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"ZeroCycleA1({self.field!r}, {self.format()})"


_CYCLE_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*\[([^\]]+)\]")


def parse_cycle(field: Field, text: str, var: str = "u") -> ZeroCycleA1:
    """Read ``3*[u-1] + 1*[u^2+u+1]``; each bracket must hold an irreducible."""
    text = text.strip()
    if text in ("", "0"):
        return ZeroCycleA1.zero(field)
    consumed = 0
    terms: dict[PlaceP1, int] = {}
    for m in _CYCLE_TERM.finditer(text):
        if text[consumed:m.start()].strip():
            raise ValueError(f"cannot parse cycle near {text[consumed:m.start()]!r}")
        consumed = m.end()
        sign, count, body = m.groups()
        mult = int(count) if count else 1
        if sign == "-":
            mult = -mult
        poly = parse_poly(field, body, var=var).monic()
        if not is_irreducible(poly):
            raise ValueError(f"[{body}] is not an irreducible polynomial")
        P = PlaceP1(poly)
        terms[P] = terms.get(P, 0) + mult
    if text[consumed:].strip():
        raise ValueError(f"cannot parse cycle near {text[consumed:]!r}")
    return ZeroCycleA1.from_dict(field, terms)


# -- div and its inverse ---------------------------------------------------------

def div_witt(f: Poly) -> ZeroCycleA1:
    """Divisor of zeros of a polynomial with constant term 1."""
    F = f.field
    if f[0] != F.one:
        raise ValueError("div_witt expects constant term 1")
    _, facs = factor(f)
    return ZeroCycleA1.from_dict(F, {PlaceP1(g): e for g, e in facs})


def divisor_of_poly(f: Poly) -> ZeroCycleA1:
    """Divisor of zeros of any nonzero polynomial on A^1."""
    if f.degree < 1:
        return ZeroCycleA1.zero(f.field)
    _, facs = factor(f)
    return ZeroCycleA1.from_dict(f.field, {PlaceP1(g): e for g, e in facs})


def witt_of_cycle(alpha: ZeroCycleA1, rational: bool = False) -> Poly | RatFunc:
    """``prod (pi(u) / pi(0))^e``: the series with constant term 1 whose divisor is ``alpha``."""
    alpha.require_off_zero()
    F = alpha.field
    num, den = Poly.one(F), Poly.one(F)
    for P, e in alpha.terms:
        g = P.poly.scale(F.inv(P.poly[0]))
        if e > 0:
            num = num * g**e
        else:
            den = den * g ** (-e)
    if den.degree > 0:
        if not rational:
            raise ValueError("cycle is not effective; pass rational=True for the quotient")
        return RatFunc(num, den)
    return RatFunc(num) if rational else num


# -- pushforward along multiplication -------------------------------------------

def product_root_poly(pi: Poly, sigma: Poly) -> Poly:
    """Monic polynomial whose roots are all products ``a b`` (``pi(a) = 0``, ``sigma(b) = 0``).

    Computed as the norm from ``k[t]/pi`` of ``sum_j sigma_j u^j t^{n-j}``,
    i.e. the determinant of ``sum_j sigma_j u^j M_t^{n-j}`` over ``k[u]``.
    """
    F = pi.field
    n = sigma.degree
    k = pi.degree
    t = Poly.x(F)
    # matrices of t^{n-j} acting on k[t]/pi
    powers = [companion_power_rows(t.pow_mod(n - j, pi) if n - j else Poly.one(F), pi) for j in range(n + 1)]
    rows = []
    for r in range(k):
        row = []
        for c in range(k):
            coeffs = [F.mul(sigma[j], powers[j][r][c]) for j in range(n + 1)]
            row.append(Poly(F, coeffs))
        rows.append(row)
    return det_poly_matrix(rows, F).monic()


def _cycle_of_charpoly(R: Poly, mult: int) -> dict:
    _, facs = factor(R)
    return {PlaceP1(g): mult * e for g, e in facs}


@lru_cache(maxsize=65536)
def _conv_places(pi: Poly, sigma: Poly) -> tuple:
    return tuple(_cycle_of_charpoly(product_root_poly(pi, sigma), 1).items())


def mult_convolution(alpha: ZeroCycleA1, beta: ZeroCycleA1) -> ZeroCycleA1:
    """Pushforward of ``alpha x beta`` along ``(t, u) -> t u``."""
    alpha.require_off_zero()
    beta.require_off_zero()
    out: dict[PlaceP1, int] = {}
    for P, a in alpha.terms:
        for Q, b in beta.terms:
            for R, e in _conv_places(P.poly, Q.poly):
                out[R] = out.get(R, 0) + a * b * e
    return ZeroCycleA1.from_dict(alpha.field, out)


# -- power maps, inversion, polynomial maps --------------------------------------

def pushforward_polymap(alpha: ZeroCycleA1, f: Poly) -> ZeroCycleA1:
    """Pushforward along ``t -> f(t)`` (a finite map of the line when ``deg f >= 1``)."""
    if f.degree < 1:
        raise ValueError("pushforward along a constant map")
    out: dict[PlaceP1, int] = {}
    for P, e in alpha.terms:
        for R, m in _cycle_of_charpoly(charpoly_of_mult(f, P.poly), e).items():
            out[R] = out.get(R, 0) + m
    return ZeroCycleA1.from_dict(alpha.field, out)


def pushforward_power(alpha: ZeroCycleA1, d: int) -> ZeroCycleA1:
    """Pushforward along ``t -> t^d``."""
    if d < 1:
        raise ValueError("power must be positive")
    return pushforward_polymap(alpha, Poly.monomial(alpha.field, d))


def pullback_polymap(alpha: ZeroCycleA1, f: Poly) -> ZeroCycleA1:
    """Pullback along ``t -> f(t)``: ``[pi] -> div pi(f(t))``."""
    out: dict[PlaceP1, int] = {}
    for P, e in alpha.terms:
        for Q, m in divisor_of_poly(P.poly.compose(f)).terms:
            out[Q] = out.get(Q, 0) + e * m
    return ZeroCycleA1.from_dict(alpha.field, out)


def pullback_power(alpha: ZeroCycleA1, d: int) -> ZeroCycleA1:
    if d < 1:
        raise ValueError("power must be positive")
    return pullback_polymap(alpha, Poly.monomial(alpha.field, d))


def pullback_inversion(alpha: ZeroCycleA1) -> ZeroCycleA1:
    """Pullback along ``t -> 1/t``: ``[pi] -> [monic(u^deg pi * pi(1/u))]``."""
    alpha.require_off_zero()
    return ZeroCycleA1.from_dict(
        alpha.field, {PlaceP1(P.poly.reverse().monic()): e for P, e in alpha.terms}
    )


@dataclass(frozen=True)
class PolyMapP1:
    """Self-map of P^1 extending ``t -> f(t)``; it sends infinity to infinity."""

    f: Poly

    def __post_init__(self):
        if self.f.degree < 1:
            raise ValueError("constant map")

    @property
    def degree(self) -> int:
        return self.f.degree

    def pullback_infinity(self) -> dict:
        return {INF: self.f.degree}

    def pushforward(self, alpha: ZeroCycleA1) -> ZeroCycleA1:
        return pushforward_polymap(alpha, self.f)


def fiber_divisor(F: PolyMapP1 | Poly, point) -> dict:
    """Pullback of a point of P^1 as a divisor on P^1 (``{place: multiplicity}``).

    ``point`` is a field element or `INF`.  Finite fibres never meet infinity
    because the extension sends infinity to infinity with multiplicity ``deg f``.
    """
    if isinstance(F, Poly):
        F = PolyMapP1(F)
    f = F.f
    if point is INF or (isinstance(point, PlaceP1) and point.is_infinite):
        return F.pullback_infinity()
    K = f.field
    if isinstance(point, PlaceP1):
        target = point.poly
    else:
        target = Poly(K, [K.neg(K.coerce(point)), K.one])
    return dict(divisor_of_poly(target.compose(f)).terms)


def divisor_geq(D: dict, E: dict) -> bool:
    """Coefficientwise ``D >= E`` for divisors given as ``{place: multiplicity}``."""
    return all(D.get(P, 0) >= E.get(P, 0) for P in set(D) | set(E))
