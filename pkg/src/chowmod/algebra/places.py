"""Places of the projective line over a field and divisors built from them."""
from __future__ import annotations

from dataclasses import dataclass

from .factor import factor
from .poly import Poly, RatFunc


@dataclass(frozen=True)
class PlaceP1:
    """The point at infinity (``poly is None``) or the zero set of a monic irreducible."""

    poly: Poly | None = None

    def __post_init__(self):
        if self.poly is not None and (self.poly.degree < 1 or self.poly.lc != self.poly.field.one):
            raise ValueError("a finite place is given by a monic polynomial of positive degree")

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    @classmethod
    def infinity(cls) -> "PlaceP1":
        return cls(None)

    @classmethod
    def rational(cls, field, a) -> "PlaceP1":
        return cls(Poly(field, [field.neg(field.coerce(a)), field.one]))

    def root(self):
        """The coordinate of a degree-one finite place."""
        if self.poly is None or self.poly.degree != 1:
            raise ValueError("not a rational finite place")
        F = self.poly.field
        return F.neg(self.poly.coeffs[0])

    def sort_key(self):
        if self.poly is None:
            return (1, 0, "")
        return (0, self.poly.degree, repr(self.poly.coeffs))

    def format(self, var: str = "t") -> str:
        return "inf" if self.poly is None else f"[{self.poly.format(var)}]"

    def __repr__(self):
        return f"PlaceP1({self.format()})"


INF = PlaceP1(None)


def multiplicity(f: Poly, pi: Poly) -> int:
    """Largest ``e`` with ``pi^e | f``; ``f`` nonzero."""
    if f.is_zero():
        raise ValueError("multiplicity in the zero polynomial")
    e = 0
    while True:
        q, r = f.divmod(pi)
        if not r.is_zero():
            return e
        f = q
        e += 1


def valuation(f: RatFunc | Poly, P: PlaceP1) -> int:
    """Order of vanishing of ``f`` at ``P`` (negative for a pole)."""
    if isinstance(f, Poly):
        f = RatFunc(f)
    if f.is_zero():
        raise ValueError("valuation of the zero function")
    if P.is_infinite:
        return f.den.degree - f.num.degree
    return multiplicity(f.num, P.poly) - multiplicity(f.den, P.poly)


def divisor(f: RatFunc | Poly, bound=None) -> dict[PlaceP1, int]:
    """Principal divisor of a nonzero rational function on P^1."""
    if isinstance(f, Poly):
        f = RatFunc(f)
    if f.is_zero():
        raise ValueError("divisor of the zero function")
    out: dict[PlaceP1, int] = {}
    kwargs = {} if bound is None else {"bound": bound}
    for part, sign in ((f.num, 1), (f.den, -1)):
        if part.degree > 0:
            for g, e in factor(part, **kwargs)[1]:
                P = PlaceP1(g)
                out[P] = out.get(P, 0) + sign * e
    at_inf = f.den.degree - f.num.degree
    if at_inf:
        out[INF] = at_inf
    return {P: e for P, e in sorted(out.items(), key=lambda kv: kv[0].sort_key()) if e}


def zeros(f: RatFunc | Poly, bound=None) -> dict[PlaceP1, int]:
    return {P: e for P, e in divisor(f, bound).items() if e > 0}


def poles(f: RatFunc | Poly, bound=None) -> dict[PlaceP1, int]:
    return {P: -e for P, e in divisor(f, bound).items() if e < 0}


def degree_of_divisor(D: dict[PlaceP1, int]) -> int:
    return sum(P.degree * e for P, e in D.items())
