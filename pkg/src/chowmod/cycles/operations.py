"""Boundaries, the shift Phi, the action of zero-cycles on the line, and
the two explicit homotopies at ``q = 0``."""
from __future__ import annotations

from dataclasses import dataclass

from ..algebra.factor import factor
from ..algebra.fields import ExtensionField, Field, RationalFunctionField
from ..algebra.places import PlaceP1
from ..algebra.poly import Poly, RatFunc
from ..divisors import ZeroCycleA1, div_witt
from .curves import ParamCurve
from .modulus import STAR, check_faces, check_modulus
from .pairs import A1, Component, ModulusPair
from .points import ClosedPoint, NotRepresentable, PointCycle, canonical_point


class WConditionViolated(ValueError):
    """The cycle meets ``X° x {0}`` or ``X° x {1}`` improperly."""


def _as_list(V):
    return list(V) if isinstance(V, (list, tuple)) else [V]


def _sum(cycles, pair, q) -> PointCycle:
    out = PointCycle.zero(pair, q)
    for c in cycles:
        out = out + c
    return out


# -- boundary -------------------------------------------------------------------

def boundary(V) -> PointCycle:
    """``sum_j (-1)^j (d_j^1 - d_j^0)`` applied to a curve, a list of curves or a point cycle."""
    items = _as_list(V)
    first = items[0]
    if first.q < 1:
        raise ValueError("boundary of a degree-0 cycle")
    F = first.pair.field
    out = PointCycle.zero(first.pair, first.q - 1)
    for W in items:
        for j in range(1, W.q + 1):
            a = W.pair.dim + j - 1
            face = W.restrict(a, F.one) - W.restrict(a, F.zero)
            out = out + (face if j % 2 == 0 else -face)
    return out


def restrict_all(V, axis: int, value) -> PointCycle:
    parts = [W.restrict(axis, value) for W in _as_list(V)]
    return _sum(parts, parts[0].pair, parts[0].q)


# -- the shift Phi --------------------------------------------------------------

def _phi_layout(pair: ModulusPair, q: int, axis: int | None):
    if axis is None:
        axis = pair.dim - 1
    if not pair.is_minus_cube_coordinate(axis):
        raise ValueError(f"coordinate {axis} is not a minus-cube coordinate")
    order = [i for i in range(pair.dim + q) if i != axis] + [axis]
    return axis, pair.drop(axis), order


def phi_shift(V, axis: int | None = None, check: bool = True):
    """Move the minus-cube coordinate to the last cube slot, with sign ``(-1)^(q+1)``.

    Accepts a curve or a point cycle on ``X (x) minus cube``; returns the same
    kind of object on ``X`` in degree ``q + 1``.
    """
    axis, base, order = _phi_layout(V.pair, V.q, axis)
    sign = -1 if V.q % 2 == 0 else 1
    if isinstance(V, PointCycle):
        out = {}
        for P, e in V.terms:
            R = P.reorder(order)
            out[R] = out.get(R, 0) + sign * e
        return PointCycle.from_dict(base, V.q + 1, out)
    if check:
        cube_axes = list(range(V.pair.dim, V.pair.dim + V.q)) + [axis]
        if not check_faces(V, axes=cube_axes):
            raise WConditionViolated("curve meets a face or X° x {0, 1} improperly")
        if not check_modulus(V, STAR).passed:
            raise ValueError("curve fails the modulus condition on the source pair")
    coords = tuple(V.coords[i] for i in order)
    return ParamCurve(base, V.q + 1, coords, sign * V.mult, V.injective)


@dataclass
class PhiHomotopyReport:
    lhs: PointCycle
    rhs: PointCycle
    literal: PointCycle

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    @property
    def literal_ok(self) -> bool:
        return self.literal == self.rhs


def verify_phi_homotopy(V: ParamCurve, axis: int | None = None) -> PhiHomotopyReport:
    """Compare ``d Phi(V) + Phi(d V)`` with ``i_1^* V - i_0^* V``.

    ``literal`` holds ``d Phi(V) - Phi(d V)``, which agrees with the right side
    whenever ``d V = 0`` (in particular in degree 0).
    """
    axis, base, _ = _phi_layout(V.pair, V.q, axis)
    F = V.pair.field
    dphi = boundary(phi_shift(V, axis))
    if V.q >= 1:
        phid = phi_shift(boundary(V), axis)
    else:
        phid = PointCycle.zero(base, V.q)
    rhs = V.restrict(axis, F.one) - V.restrict(axis, F.zero)
    return PhiHomotopyReport(dphi + phid, rhs, dphi - phid)


# -- action of zero-cycles on the line ------------------------------------------

def _residue_field(point: ClosedPoint) -> tuple[Field, list]:
    """The residue field of a point and its coordinates as elements there."""
    k = point.field
    if point.is_rational():
        return k, list(point.values())
    if not k.is_finite:
        raise NotRepresentable("non-rational points are handled over finite fields only")
    L = ExtensionField(point.minpoly, check=False)
    return L, [L.from_poly(c) for c in point.coords]


def _check_line_axis(pair: ModulusPair, axis: int | None) -> int:
    if axis is None:
        axis = pair.dim - 1
    if pair.kinds[axis] != A1 or pair.components_on(axis):
        raise ValueError(f"coordinate {axis} is not a plain affine line")
    return axis


@dataclass(frozen=True)
class Cylinder:
    """``base x A^1`` with the line inserted at position ``axis`` of the pair coordinates."""

    base: PointCycle
    axis: int
    mult: int = 1

    @property
    def pair(self) -> ModulusPair:
        p = self.base.pair
        kinds = p.kinds[: self.axis] + (A1,) + p.kinds[self.axis:]
        comps = tuple(Component(c.coord + (c.coord >= self.axis), c.place, c.coeff) for c in p.components)
        return ModulusPair(p.field, kinds, comps)

    def is_zero(self) -> bool:
        return self.mult == 0 or self.base.is_zero()

    def to_curves(self) -> list:
        pair = self.pair
        out = []
        for P, e in self.base.terms:
            L, vals = _residue_field(P)
            coords = [RatFunc.const(L, v) for v in vals]
            coords.insert(self.axis, RatFunc.t(L))
            out.append(ParamCurve(pair, self.base.q, tuple(coords), self.mult * e))
        return out


def witt_action(alpha: ZeroCycleA1, V, axis: int | None = None):
    """Pushforward of ``alpha x V`` along multiplication on the line coordinate.

    ``V`` may be a `PointCycle`, a `ParamCurve` (or list of them) or a
    `Cylinder`; the line coordinate is ``axis`` (default: last pair coordinate).
    """
    alpha.require_off_zero()
    if isinstance(V, Cylinder):
        return Cylinder(V.base, V.axis, V.mult * alpha.degree)
    if isinstance(V, PointCycle):
        return _act_on_points(alpha, V, _check_line_axis(V.pair, axis))
    out = []
    for W in _as_list(V):
        ax = _check_line_axis(W.pair, axis)
        for P, a in alpha.terms:
            out.append(_act_on_curve(P, a, W, ax))
    return out


def _act_on_points(alpha: ZeroCycleA1, Z: PointCycle, axis: int) -> PointCycle:
    k = Z.pair.field
    out: dict = {}
    for P, a in alpha.terms:
        for point, e in Z.terms:
            L, vals = _residue_field(point)
            pi = P.poly.map_coeffs(L, lambda c: L.embed(c, k))
            for rho, mult in factor(pi)[1]:
                values = [Poly.constant(L, v) for v in vals]
                values[axis] = Poly.x(L).scale(vals[axis])
                q, deg = canonical_point(k, rho, values)
                out[q] = out.get(q, 0) + a * e * mult * deg
    return PointCycle.from_dict(Z.pair, Z.q, out)


def _act_on_curve(P: PlaceP1, a: int, W: ParamCurve, axis: int) -> ParamCurve:
    k = W.pair.field
    if P.degree == 1:
        y = RatFunc.const(W.field, W.field.embed(P.root(), k))
        coords = list(W.coords)
        coords[axis] = coords[axis] * y
        return ParamCurve(W.pair, W.q, tuple(coords), a * W.mult, W.injective)
    if W.field != k or not k.is_finite:
        raise NotRepresentable("higher-degree action needs a curve defined over a finite base field")
    L = ExtensionField(P.poly, check=False)
    lift = [c.map_field(L, lambda x: L.embed(x, k)) for c in W.coords]
    lift[axis] = lift[axis] * RatFunc.const(L, L.generator)
    return ParamCurve(W.pair, W.q, tuple(lift), a * W.mult, W.injective)


# -- the homotopy killing div(1 + u^m k[u]) acting on points --------------------

def moebius_rotation(x: RatFunc) -> RatFunc:
    """The Moebius map ``x -> 1/(1 - x)``: 0 -> 1, 1 -> inf, inf -> 0."""
    return (RatFunc.const(x.field, x.field.one) - x).inverse()


@dataclass
class TildeReport:
    m_bound: int
    m_of_f: int
    fibre_zero: PointCycle
    cylinder: Cylinder
    fibre_one: PointCycle
    witt_image: PointCycle
    modulus_ok: bool
    phi_identity_ok: bool

    @property
    def zero_end_ok(self) -> bool:
        return self.fibre_zero.is_zero() and self.cylinder.is_zero()

    @property
    def one_end_ok(self) -> bool:
        return self.fibre_one == self.witt_image

    @property
    def ok(self) -> bool:
        return self.zero_end_ok and self.one_end_ok and self.modulus_ok and self.phi_identity_ok


def _order_at_zero_of_f_minus_one(f: Poly) -> int:
    g = f - Poly.one(f.field)
    if g.is_zero():
        raise ValueError("f = 1 gives no homotopy")
    return g.valuation_at_zero()


def homotopy_chain_tilde(Z: PointCycle, f: Poly, axis: int | None = None):
    """Build the curve ``t -> (x0, t, 1/(1 - f(t/u0)))`` for each point ``(x0, u0)`` of ``Z``.

    Returns the list of curves on ``X (x) A^1 (x) minus cube`` and a report
    checking both endpoint identities.  The intermediate curves are
    ``(x0, t, u0/t)``, ``(x0, t, t/u0)`` and ``(x0, t, f(t/u0))``; the last
    step applies `moebius_rotation` to the new coordinate.
    """
    if Z.q != 0:
        raise ValueError("the construction is implemented in degree 0")
    k = Z.pair.field
    if f.field != k or f[0] != k.one or f.degree < 1:
        raise ValueError("f must be a nonconstant polynomial over the base field with f(0) = 1")
    axis = _check_line_axis(Z.pair, axis)
    m_of_f = _order_at_zero_of_f_minus_one(f)
    target = Z.pair.tensor(ModulusPair.minus_cube(k))
    plain = Z.pair.tensor(ModulusPair.line(k, True))
    curves = []
    m_bound = 1
    for point, e in Z.terms:
        L, vals = _residue_field(point)
        u0 = vals[axis]
        if u0 == L.zero:
            raise ValueError("points must avoid u = 0")
        t = RatFunc.t(L)
        base = [RatFunc.const(L, v) for v in vals]
        base[axis] = t
        w = t * RatFunc.const(L, L.inv(u0))
        second = ParamCurve(plain, 0, tuple(base + [w]), e)
        m_bound = max(m_bound, _m_bound(second))
        fl = f.map_coeffs(L, lambda c: L.embed(c, k))
        fw = RatFunc(fl).compose(w)
        curves.append(ParamCurve(target, 0, tuple(base + [moebius_rotation(fw)]), e))
    if m_of_f < m_bound:
        raise ValueError(f"f - 1 vanishes to order {m_of_f} at 0, below the bound {m_bound}")
    last = target.dim - 1
    lhs1 = restrict_all(curves, last, k.zero) if curves else PointCycle.zero(Z.pair, 0)
    lhs2 = restrict_all(curves, last, k.one) if curves else PointCycle.zero(Z.pair, 0)
    i0 = Z.restrict(axis, k.zero)
    cyl = Cylinder(i0, axis, f.degree)
    rhs2 = witt_action(div_witt(f), Z, axis)
    modulus_ok = all(check_modulus(c, STAR).passed for c in curves)
    phi_ok = all(verify_phi_homotopy(c).ok for c in curves)
    return curves, TildeReport(m_bound, m_of_f, lhs1, cyl, lhs2, rhs2, modulus_ok, phi_ok)


def _m_bound(curve: ParamCurve) -> int:
    """Least ``m >= 1`` with the curve admissible after adding ``-m {0}`` on its last coordinate."""
    cert = check_modulus(curve, STAR)
    w = curve.coords[-1]
    from ..algebra.places import valuation

    need = 1
    for P, left, right in cert.entries:
        excess = left - right
        if excess <= 0:
            continue
        order = valuation(w, P) if not w.is_zero() else 0
        if order <= 0:
            raise ValueError("modulus failure away from the added divisor")
        need = max(need, -(-excess // order))
    return need


# -- powered generic translation ------------------------------------------------

@dataclass
class TranslationReport:
    d: int
    d_bound: int | None
    fibre_zero_ok: bool
    fibre_zero_each_ok: bool
    boundary_ok: bool
    boundary_sign_as_stated: bool
    modulus_pass: bool
    modulus_expected: bool
    avoids_w: bool

    @property
    def ok(self) -> bool:
        return (
            self.fibre_zero_ok
            and self.fibre_zero_each_ok
            and self.boundary_ok
            and self.modulus_pass == self.modulus_expected
            and self.avoids_w
        )


def _pair_over(pair: ModulusPair, K: Field) -> ModulusPair:
    k = pair.field
    comps = []
    for c in pair.components:
        place = c.place if c.place.is_infinite else PlaceP1(c.place.poly.map_coeffs(K, lambda x: K.embed(x, k)))
        comps.append(Component(c.coord, place, c.coeff))
    return ModulusPair(K, pair.kinds, tuple(comps))


def translation_axes(pair: ModulusPair) -> list:
    """Coordinates whose divisor sits at infinity only (the cube-like factors)."""
    return [i for i in range(pair.dim) if all(c.place.is_infinite for c in pair.components_on(i))]


def translation_bound(pair: ModulusPair, axes) -> int | None:
    """Least ``d`` for which the powered translation curves satisfy the modulus condition.

    The translated coordinates are linear in ``t`` with a simple pole at
    ``t = inf`` and the cube coordinate ``t^d`` has a pole of order ``d`` there;
    if an affine-only coordinate is translated, ``t = inf`` leaves the closure.
    Returns None when a finite component on a translated axis rules out every ``d``.
    """
    for i in axes:
        if any(not c.place.is_infinite and c.coeff > 0 for c in pair.components_on(i)):
            return None
    if any(pair.kinds[i] == A1 for i in axes):
        return 1
    left_at_inf = sum(c.coeff for i in axes for c in pair.components_on(i) if c.place.is_infinite)
    return max(1, left_at_inf)


def powered_translation(V: PointCycle, d: int, axes=None, direction=None, var: str = "v") -> list:
    """``h^d``: curves ``t -> (y0 - v * dir * t ; t^d)`` over ``k(v)``, one per point of ``V``."""
    pair = V.pair
    k = pair.field
    axes = translation_axes(pair) if axes is None else list(axes)
    if not axes:
        raise ValueError("no coordinate to translate")
    direction = [1] * len(axes) if direction is None else list(direction)
    if len(direction) != len(axes) or any(k.from_int(c) == k.zero for c in direction):
        raise ValueError("direction entries must be nonzero in the base field")
    K = RationalFunctionField(k, var)
    pairK = _pair_over(pair, K)
    t = RatFunc.t(K)
    v = RatFunc.const(K, K.generator)
    out = []
    for point, e in V.terms:
        if not point.is_rational():
            raise NotRepresentable("translation is implemented for rational points")
        coords = [RatFunc.const(K, K.embed(x, k)) for x in point.values()]
        for i, c in zip(axes, direction):
            coords[i] = coords[i] - v * t * RatFunc.const(K, K.from_int(c))
        coords.append(t ** d)
        out.append(ParamCurve(pairK, 1, tuple(coords), e))
    return out


def generic_translation_H(V: PointCycle, d: int, axes=None, direction=None, w=None):
    """``H = h^(d+1) - h^d`` and a report on its four defining properties."""
    if V.q != 0:
        raise ValueError("the translation homotopy is implemented in degree 0")
    if d < 1:
        raise ValueError("d must be positive")
    pair = V.pair
    k = pair.field
    axes = translation_axes(pair) if axes is None else list(axes)
    hi = powered_translation(V, d + 1, axes, direction)
    lo = powered_translation(V, d, axes, direction)
    H = hi + [c.with_mult(-c.mult) for c in lo]
    K = H[0].field
    pairK = _pair_over(pair, K)
    cube = pairK.dim
    VK = PointCycle.from_dict(pairK, 0, {
        ClosedPoint.rational(K, [K.embed(x, k) for x in P.values()]): e for P, e in V.terms
    })
    zero_fibre = restrict_all(H, cube, K.zero)
    each = all(restrict_all(h, cube, K.zero) == dd * VK for h, dd in ((hi, d + 1), (lo, d)))
    one_fibre = _direct_fibre(H, cube, 1)
    zero_direct = _direct_fibre(H, cube, 0)
    dH = boundary(H)
    endpoint = one_fibre - zero_direct
    d_bound = translation_bound(pair, axes)
    passes = all(check_modulus(c, STAR).passed for c in H)
    expected = d_bound is not None and d >= d_bound
    if w is None:
        w = [(i, e) for i in axes for e in (0, 1)]
    avoids = not any(P.coordinate_equals(i, K.from_int(e)) for P, _ in one_fibre.terms for i, e in w)
    report = TranslationReport(
        d=d,
        d_bound=d_bound,
        fibre_zero_ok=zero_fibre == VK,
        fibre_zero_each_ok=each,
        boundary_ok=dH == -endpoint,
        boundary_sign_as_stated=dH == endpoint,
        modulus_pass=passes,
        modulus_expected=expected,
        avoids_w=avoids,
    )
    return H, report


def _direct_fibre(curves, axis: int, eps: int) -> PointCycle:
    """Fibre of the cube coordinate ``t^d`` over ``eps``, found by factoring ``t^d - eps``
    over the base field and evaluating the other coordinates in the residue algebras."""
    first = curves[0]
    K = first.field
    k = K.base
    pair = first.pair
    out: dict = {}
    for c in curves:
        cube = c.coords[axis]
        d = cube.num.degree
        target = Poly.monomial(k, d) - Poly.constant(k, k.from_int(eps))
        for rho, mult in factor(target)[1]:
            rhoK = rho.map_coeffs(K, lambda x: K.embed(x, k))
            values = []
            for f in c.coords[:axis]:
                values.append(f.num.map_coeffs(K, lambda x: x) % rhoK)
            point, deg = canonical_point(K, rhoK, values)
            out[point] = out.get(point, 0) + c.mult * mult * deg
    return PointCycle.from_dict(pair, first.q - 1, out)
