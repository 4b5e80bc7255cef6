"""Closed points of affine space and zero-cycles built from them.

A closed point is stored in a canonical form that depends only on the point:
a primitive element ``z = sum(lam_i * x_i)`` (the first one in a fixed search
order), its minimal polynomial over the base field, and every coordinate as
a polynomial in ``z`` of degree below that of the minimal polynomial.  Points
produced by evaluating coordinates in any residue algebra ``L[theta]/P`` are
brought to this form by linear algebra over the base field, which also yields
the degree of the map from the algebra onto the point.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..algebra.fields import Field
from ..algebra.linalg import solve
from ..algebra.poly import Poly
from .pairs import ModulusPair


class FaceContainment(ValueError):
    """A cycle lies inside a face it is being restricted to."""


class NotRepresentable(ValueError):
    """A point that the affine-coordinate representation cannot hold."""


def _candidate_weights(n: int, field: Field):
    yield from (tuple(int(i == j) for j in range(n)) for i in range(n))
    top = 4 if field.characteristic == 0 else min(field.characteristic, 4)
    seen = set()
    for total in range(2, 4 * n + 1):
        for lam in itertools.product(range(top), repeat=n):
            if sum(lam) == total and sum(1 for x in lam if x) >= 2 and lam not in seen:
                seen.add(lam)
                yield lam


def _vector(c: Poly, P: Poly, k: Field) -> list:
    L = P.field
    out = []
    for a in range(P.degree):
        out.extend(L.coords_over(c[a], k))
    return out


def canonical_point(k: Field, P: Poly, values) -> tuple["ClosedPoint", int]:
    """Canonical closed point for coordinates ``values`` in ``L[theta]/P``.

    ``P`` is irreducible over ``L``, an extension of ``k`` (or ``k`` itself).
    Returns the point and the degree of ``L[theta]/P`` over its residue field.
    """
    L = P.field
    values = [v % P for v in values]
    n = len(values)
    if n == 0:
        raise NotRepresentable("a point needs at least one coordinate")
    total = P.degree * L.dim_over(k)
    vecs = [_vector(v, P, k) for v in values]
    for lam in _candidate_weights(n, k):
        z = Poly.zero(L)
        for c, v in zip(lam, values):
            if c:
                z = z + v.scale(L.embed(k.from_int(c), k))
        powers = [Poly.one(L)]
        pvecs = [_vector(powers[0], P, k)]
        minpoly = None
        while len(powers) <= total:
            nxt = powers[-1] * z % P
            nvec = _vector(nxt, P, k)
            cols = _columns(pvecs)
            sol = solve(k, cols, nvec)
            if sol is not None:
                minpoly = Poly(k, [k.neg(a) for a in sol] + [k.one])
                break
            powers.append(nxt)
            pvecs.append(nvec)
        if minpoly is None:
            raise AssertionError("minimal polynomial search overran the algebra dimension")
        cols = _columns(pvecs)
        coords = []
        for vec in vecs:
            sol = solve(k, cols, vec)
            if sol is None:
                break
            coords.append(Poly(k, sol))
        else:
            return ClosedPoint(k, lam, minpoly, tuple(coords)), total // minpoly.degree
    raise NotRepresentable("no primitive element among the small coordinate combinations")


def _columns(vecs):
    return [list(row) for row in zip(*vecs)]


@dataclass(frozen=True)
class ClosedPoint:
    field: Field
    lam: tuple
    minpoly: Poly
    coords: tuple

    @classmethod
    def rational(cls, field: Field, values) -> "ClosedPoint":
        vals = [Poly.constant(field, field.coerce(v)) for v in values]
        point, e = canonical_point(field, Poly.x(field), vals)
        assert e == 1
        return point

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def is_rational(self) -> bool:
        return self.degree == 1

    def values(self) -> tuple:
        """Coordinates of a rational point as field elements."""
        if not self.is_rational():
            raise ValueError("point is not rational")
        return tuple(c[0] for c in self.coords)

    def coordinate_equals(self, i: int, value) -> bool:
        F = self.field
        return self.coords[i] == Poly.constant(F, F.coerce(value))

    def drop(self, i: int) -> tuple["ClosedPoint", int]:
        rest = self.coords[:i] + self.coords[i + 1:]
        return canonical_point(self.field, self.minpoly, list(rest))

    def reorder(self, order) -> "ClosedPoint":
        point, e = canonical_point(self.field, self.minpoly, [self.coords[i] for i in order])
        assert e == 1
        return point

    def map_coords(self, fn) -> tuple["ClosedPoint", int]:
        """Apply ``fn(list_of_coordinate_polys, minpoly) -> new list`` and re-canonicalize."""
        return canonical_point(self.field, self.minpoly, fn(list(self.coords), self.minpoly))

    def sort_key(self):
        return (self.degree, repr(self.minpoly.coeffs), self.lam, tuple(repr(c.coeffs) for c in self.coords))

    def format(self) -> str:
        if self.is_rational():
            return "(" + ", ".join(self.field.format(v) for v in self.values()) + ")"
        body = ", ".join(c.format("z") for c in self.coords)
        return f"[{self.minpoly.format('z')}]({body})"

    def __repr__(self):
        return f"ClosedPoint{self.format()}"


@dataclass(frozen=True)
class PointCycle:
    """Integer combination of closed points of ``X° x A^q``; coordinates ``(x_1..x_n; s_1..s_q)``."""

    pair: ModulusPair
    q: int
    terms: tuple = ()

    @classmethod
    def from_dict(cls, pair: ModulusPair, q: int, terms: dict) -> "PointCycle":
        for P in terms:
            if P.dim != pair.dim + q:
                raise ValueError(f"point of dimension {P.dim} in a cycle on {pair.dim}+{q} coordinates")
        items = sorted(((P, e) for P, e in terms.items() if e), key=lambda pe: pe[0].sort_key())
        return cls(pair, q, tuple(items))

    @classmethod
    def zero(cls, pair: ModulusPair, q: int) -> "PointCycle":
        return cls(pair, q, ())

    @classmethod
    def point(cls, pair: ModulusPair, q: int, values, mult: int = 1) -> "PointCycle":
        return cls.from_dict(pair, q, {ClosedPoint.rational(pair.field, values): mult})

    @property
    def field(self) -> Field:
        return self.pair.field

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "PointCycle"):
        if other.pair != self.pair or other.q != self.q:
            raise ValueError("cycles on different pairs or degrees")

    def __add__(self, other: "PointCycle") -> "PointCycle":
        self._check(other)
        d = self.as_dict()
        for P, e in other.terms:
            d[P] = d.get(P, 0) + e
        return PointCycle.from_dict(self.pair, self.q, d)

    def __neg__(self) -> "PointCycle":
        return PointCycle(self.pair, self.q, tuple((P, -e) for P, e in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n: int) -> "PointCycle":
        return PointCycle.from_dict(self.pair, self.q, {P: n * e for P, e in self.terms})

    @property
    def degree(self) -> int:
        return sum(P.degree * e for P, e in self.terms)

    def restrict(self, axis: int, value) -> "PointCycle":
        """Intersection with ``{coordinate axis = value}``; points must avoid it."""
        for P, _ in self.terms:
            if P.coordinate_equals(axis, value):
                raise FaceContainment(f"point {P.format()} lies on the face")
        pair, q = _pair_after_drop(self.pair, self.q, axis)
        return PointCycle.zero(pair, q)

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"{'-' if e < 0 else '+'} {abs(e)}*{P.format()}" for P, e in self.terms]
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"PointCycle(q={self.q}, {self.format()})"


def _pair_after_drop(pair: ModulusPair, q: int, axis: int):
    if axis < pair.dim:
        return pair.drop(axis), q
    if axis >= pair.dim + q:
        raise IndexError("axis out of range")
    return pair, q - 1
