"""The modulus condition and face properness for parametrized cycles.

For a curve ``nu: P^1 -> Xbar x (P^1)^q`` the condition compares, place by
place on the parameter line, the pullback of the pair's divisor (left) with
the pullback of the divisor at infinity of the cube coordinates (right).
Places where an affine-only coordinate has a pole lie outside the closure
and are skipped.  The naive variant takes the closure in ``Xbar x A^q``:
only places where every cube coordinate is finite count, and the right side
is zero there.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..algebra.places import PlaceP1, poles, valuation, zeros
from .curves import ParamCurve, compose_base_poly, eval_in_residue
from .pairs import A1
from .points import FaceContainment, PointCycle

STAR, NAIVE = "star", "naive"


class ContainedInBoundary(ValueError):
    """The cycle lies inside the support of the pair's divisor."""


@dataclass(frozen=True)
class ModulusCertificate:
    variant: str
    entries: tuple  # (where, left, right)

    @property
    def passed(self) -> bool:
        return all(left <= right for _, left, right in self.entries)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def failures(self) -> list:
        return [e for e in self.entries if e[1] > e[2]]

    def format(self) -> str:
        rows = [f"{_where(w)}: left={a} right={b}" for w, a, b in self.entries]
        return f"{self.verdict} ({self.variant})" + ("" if not rows else "\n  " + "\n  ".join(rows))

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "verdict": self.verdict,
            "places": [{"at": _where(w), "left": a, "right": b} for w, a, b in self.entries],
        }


def _where(w) -> str:
    if isinstance(w, PlaceP1):
        return w.format("t")
    return w.format()


def check_modulus(V, variant: str = STAR) -> ModulusCertificate:
    if variant not in (STAR, NAIVE):
        raise ValueError(f"unknown variant {variant!r}")
    if isinstance(V, PointCycle):
        return _check_points(V, variant)
    return _check_curve(V, variant)


def _check_points(Z: PointCycle, variant: str) -> ModulusCertificate:
    entries = []
    for point, _ in Z.terms:
        left = 0
        for c in Z.pair.components:
            if c.place.is_infinite:
                continue
            if eval_in_residue(c.place.poly, point.coords[c.coord], point.minpoly).is_zero():
                left += c.coeff
        entries.append((point, left, 0))
    return ModulusCertificate(variant, tuple(entries))


def _local_pullbacks(V: ParamCurve):
    """Per component: the rational function whose zeros are the pullback of that component."""
    out = []
    for c in V.pair.components:
        x = V.coords[c.coord]
        if c.place.is_infinite:
            if x.is_constant():
                continue
            out.append((c, x.inverse()))
        else:
            g = compose_base_poly(c.place.poly, x)
            if g.is_zero():
                raise ContainedInBoundary(f"curve lies in the divisor component {c.format()}")
            out.append((c, g))
    return out


def _check_curve(V: ParamCurve, variant: str) -> ModulusCertificate:
    pulls = _local_pullbacks(V)
    cubes = V.coords[V.n:]
    excluded = set()
    for i, kind in enumerate(V.pair.kinds):
        if kind == A1:
            excluded |= set(poles(V.coords[i]))
    cube_poles = set()
    for s in cubes:
        cube_poles |= set(poles(s))
    places = set(cube_poles)
    for _, g in pulls:
        places |= set(zeros(g))
    entries = []
    for P in sorted(places - excluded, key=lambda P: P.sort_key()):
        if variant == NAIVE and P in cube_poles:
            continue
        left = sum(c.coeff * max(0, valuation(g, P)) for c, g in pulls)
        right = 0 if variant == NAIVE else sum(max(0, -valuation(s, P)) for s in cubes)
        if left or right:
            entries.append((P, left, right))
    return ModulusCertificate(variant, tuple(entries))


def meets_support(V: ParamCurve) -> bool:
    """Whether the closure in ``Xbar x A^q`` meets the support of the pair's divisor."""
    cubes = V.coords[V.n:]
    cube_poles = set()
    for s in cubes:
        cube_poles |= set(poles(s))
    excluded = set()
    for i, kind in enumerate(V.pair.kinds):
        if kind == A1:
            excluded |= set(poles(V.coords[i]))
    for _, g in _local_pullbacks(V):
        for P in zeros(g):
            if P not in cube_poles and P not in excluded:
                return True
    return False


def check_faces(V, axes=None) -> bool:
    """Proper intersection with every face ``{s_j = eps}`` and every corner face.

    ``axes`` lists coordinate indices treated as cube directions (default: the
    cube coordinates).  A curve must not lie in a codimension-one face and must
    miss every face of codimension two or more; points must miss every face.
    """
    if axes is None:
        axes = list(range(V.pair.dim, V.pair.dim + V.q))
    axes = list(axes)
    if isinstance(V, PointCycle):
        return not any(P.coordinate_equals(a, e) for P, _ in V.terms for a in axes for e in (0, 1))
    F = V.pair.field
    for a in axes:
        for eps in (0, 1):
            try:
                section = V.restrict(a, F.from_int(eps))
            except FaceContainment:
                return False
            rest = [b - (b > a) for b in axes if b != a]
            for point, _ in section.terms:
                if any(point.coordinate_equals(b, e) for b in rest for e in (0, 1)):
                    return False
    return True
