"""Rational curves in ``X° x A^q`` given by a parametrization of the line."""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..algebra.fields import Field, parse_field, standard_extension
from ..algebra.places import INF, PlaceP1, zeros
from ..algebra.poly import Poly, RatFunc, parse_ratfunc
from .pairs import A1, ModulusPair
from .points import FaceContainment, NotRepresentable, PointCycle, _pair_after_drop, canonical_point


def residue_value(f: RatFunc, P: PlaceP1) -> Poly | None:
    """Value of ``f`` at a place, as a polynomial in ``theta`` modulo the place; None at a pole."""
    L = f.field
    if P.is_infinite:
        dn, dd = f.num.degree, f.den.degree
        if f.num.is_zero() or dn < dd:
            return Poly.zero(L)
        if dn > dd:
            return None
        return Poly.constant(L, L.div(f.num.lc, f.den.lc))
    den = f.den % P.poly
    if den.is_zero():
        return None
    g, s, _ = den.xgcd(P.poly)
    inv = s.scale(L.inv(g.lc))
    return f.num * inv % P.poly


def residue_modulus(P: PlaceP1, L: Field) -> Poly:
    return Poly.x(L) if P.is_infinite else P.poly


def eval_in_residue(Q: Poly, value: Poly, modulus: Poly) -> Poly:
    """``Q(value) mod modulus`` for ``Q`` over a subfield of the residue algebra's field."""
    L = modulus.field
    acc = Poly.zero(L)
    for c in reversed(Q.coeffs):
        acc = (acc * value + Poly.constant(L, L.embed(c, Q.field))) % modulus
    return acc


def compose_base_poly(Q: Poly, f: RatFunc) -> RatFunc:
    """``Q(f(t))`` for ``Q`` with coefficients in a subfield of ``f``'s field."""
    L = f.field
    acc = RatFunc(Poly.zero(L))
    for c in reversed(Q.coeffs):
        acc = acc * f + RatFunc.const(L, L.embed(c, Q.field))
    return acc


@dataclass(frozen=True)
class ParamCurve:
    """``t -> (x_1(t), ..., x_n(t); s_1(t), ..., s_q(t))`` with a multiplicity.

    ``field`` is the field of definition of the coefficients; when it is a
    proper extension of the pair's field the curve stands for its image
    under restriction of scalars (boundaries are pushed down accordingly).
    """

    pair: ModulusPair
    q: int
    coords: tuple
    mult: int = 1
    injective: bool = True

    def __post_init__(self):
        coords = tuple(self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.pair.dim + self.q:
            raise ValueError(f"expected {self.pair.dim + self.q} coordinates, got {len(coords)}")
        L = coords[0].field
        if any(c.field != L for c in coords):
            raise ValueError("coordinates over different fields")
        if not L.contains(self.pair.field):
            raise ValueError(f"{L} does not contain {self.pair.field}")
        if all(c.is_constant() for c in coords):
            raise ValueError("a curve needs a nonconstant coordinate")

    @classmethod
    def parse(cls, pair: ModulusPair, q: int, texts, field: Field | None = None, mult: int = 1,
              injective: bool = True) -> "ParamCurve":
        L = field or pair.field
        return cls(pair, q, tuple(parse_ratfunc(L, t, var="t") for t in texts), mult, injective)

    @property
    def field(self) -> Field:
        return self.coords[0].field

    @property
    def n(self) -> int:
        return self.pair.dim

    def cube_axis(self, j: int) -> int:
        """Index in ``coords`` of the ``j``-th cube coordinate (1-based)."""
        return self.pair.dim + j - 1

    def with_mult(self, mult: int) -> "ParamCurve":
        return ParamCurve(self.pair, self.q, self.coords, mult, self.injective)

    def format(self) -> str:
        xs = ", ".join(c.format("t") for c in self.coords[: self.n])
        ss = ", ".join(c.format("t") for c in self.coords[self.n:])
        return f"{self.mult}*[t -> ({xs}; {ss})]"

    def __repr__(self):
        return f"ParamCurve({self.format()})"

    # -- evaluation -----------------------------------------------------------
    def point_at(self, P: PlaceP1, drop: int | None = None):
        """Canonical point and degree factor of the curve at ``P``, or None off ``X° x A^q``."""
        L = self.field
        k = self.pair.field
        mod = residue_modulus(P, L)
        values = []
        for i, f in enumerate(self.coords):
            if i == drop:
                continue
            v = residue_value(f, P)
            if i < self.n:
                comps = self.pair.components_on(i)
                if v is None:
                    if self.pair.kinds[i] == A1 or any(c.place.is_infinite for c in comps):
                        return None
                    raise NotRepresentable("curve reaches infinity of a compact coordinate inside the interior")
                for c in comps:
                    if not c.place.is_infinite and eval_in_residue(c.place.poly, v, mod).is_zero():
                        return None
            elif v is None:
                return None
            values.append(v)
        return canonical_point(k, mod, values)

    def restrict(self, axis: int, value) -> PointCycle:
        """Intersection with ``{coordinate axis = value}`` as a point cycle (the axis removed)."""
        L = self.field
        g = self.coords[axis] - RatFunc.const(L, L.embed(self.pair.field.coerce(value), self.pair.field))
        if g.is_zero():
            raise FaceContainment(f"curve lies in {{coordinate {axis} = {value}}}")
        pair, q = _pair_after_drop(self.pair, self.q, axis)
        out: dict = {}
        for P, e in zeros(g).items():
            found = self.point_at(P, drop=axis)
            if found is None:
                continue
            point, factor = found
            out[point] = out.get(point, 0) + self.mult * e * factor
        return PointCycle.from_dict(pair, q, out)

    # -- generic injectivity --------------------------------------------------
    def map_degree(self, trials: int = 6, seed: int = 0) -> int:
        """Degree of the parametrization onto its image (1 for a birational one).

        For a test value ``a`` the gcd over coordinates of
        ``num_i(t) den_i(a) - num_i(a) den_i(t)`` vanishes on the fibre through
        ``a``; its degree is at least the map degree and equals 1 at a generic
        ``a`` exactly when the map is birational.
        """
        L = self.field
        T = L
        if L.order is not None and L.order < 32:
            e = 1
            while L.order**e < 32:
                e += 1
            T = standard_extension(L, e)
        rng = random.Random(seed)
        lift = [RatFunc(c.num.map_coeffs(T, lambda x: T.embed(x, L)), c.den.map_coeffs(T, lambda x: T.embed(x, L)))
                for c in self.coords]
        at_inf = [residue_value(c, INF) for c in lift]
        best = None
        tried = 0
        attempts = 0
        while tried < trials and attempts < 20 * trials:
            attempts += 1
            a = T.random_element(rng)
            vals = []
            for c in lift:
                d = c.den(a)
                if d == T.zero:
                    break
                vals.append((c.num(a), d))
            else:
                if all(v is not None and v[0] == T.div(n, d) for v, (n, d) in zip(at_inf, vals)):
                    continue
                G = Poly.zero(T)
                for c, (n, d) in zip(lift, vals):
                    G = G.gcd(c.num.scale(d) - c.den.scale(n))
                deg = G.degree
                best = deg if best is None else min(best, deg)
                tried += 1
        if best is None:
            raise ValueError("could not find a regular test value")
        return best

    def check_injective(self) -> None:
        if self.injective and self.map_degree() != 1:
            raise ValueError(f"parametrization declared injective has degree {self.map_degree()} onto its image")

    # -- JSON -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {"tuple": [c.format("t") for c in self.coords], "mult": self.mult, "q": self.q}

    @classmethod
    def from_json(cls, pair: ModulusPair, data: dict, field: Field | str | None = None) -> "ParamCurve":
        if isinstance(field, str):
            field = parse_field(field)
        return cls.parse(pair, int(data.get("q", 0)), data["tuple"], field=field, mult=int(data.get("mult", 1)),
                         injective=bool(data.get("injective", True)))
