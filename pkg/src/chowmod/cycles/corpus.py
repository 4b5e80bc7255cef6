"""Small fixed collections of cycles used by the invariant suites and the tests."""
from __future__ import annotations

import random

from ..algebra.fields import GF, QQ, Field
from ..algebra.poly import Poly
from .curves import ParamCurve
from .modulus import STAR, check_faces, check_modulus
from .pairs import ModulusPair
from .points import ClosedPoint, PointCycle, canonical_point

_PHI_TUPLES = [
    # (field, X description, q, coordinates x..., a, s...)  with a the minus-cube coordinate
    ("F3", "A1", 0, ["t", "t"]),
    ("F3", "A1", 0, ["t^2", "t"]),
    ("F3", "A1", 0, ["t", "t^2+t"]),
    ("F5", "A1", 0, ["t+1", "t^2+2"]),
    ("F5", "A1", 0, ["t^3", "t+3"]),
    ("Q", "A1", 0, ["t", "2*t"]),
    ("Q", "A1", 0, ["t^2", "t+3"]),
    ("F3", "A1{0}", 0, ["1/(t+1)", "t"]),
    ("F5", "A1{0}", 0, ["1/(t^2+2)", "t^2"]),
    ("Q", "A1{0}", 0, ["1/(t-1)", "t"]),
    ("F3", "A1", 1, ["t", "t^2+1", "t+2"]),
    ("F3", "A1", 1, ["t", "t+2", "t^2+2"]),
    ("F5", "A1", 1, ["t", "t^2+2", "t+2"]),
    ("F5", "A1", 1, ["t^2", "t+2", "t+4"]),
    ("F5", "A1", 1, ["t", "t^2+3", "t^3+2"]),
    ("Q", "A1", 1, ["t", "t^2+1", "t+2"]),
    ("Q", "A1", 1, ["t", "t+2", "t^2-3"]),
    ("Q", "A1", 1, ["t", "3*t+2", "t^2+t+5"]),
    ("F3", "A1{0}", 1, ["1/(t+1)", "t^2+1", "t"]),
    ("Q", "A1{0}", 1, ["1/(t+1)", "t^2+2", "t+3"]),
    ("F5", "A1{0}", 1, ["1/(t+1)", "t^2+2", "t+3"]),
    ("F3", "A1", 1, ["t", "t^2+t+2", "t^2+2"]),
]


def _field(name: str) -> Field:
    return QQ if name == "Q" else GF(int(name[1:]))


def _base_pair(F: Field, desc: str) -> ModulusPair:
    if desc == "A1":
        return ModulusPair.affine_line(F)
    if desc == "A1{0}":
        return ModulusPair.line(F, False, {0: 1})
    raise ValueError(desc)


def _phi_admissible(V: ParamCurve) -> bool:
    pair = V.pair
    axes = list(range(pair.dim, pair.dim + V.q)) + [pair.dim - 1]
    return check_faces(V, axes=axes) and check_modulus(V, STAR).passed


def phi_corpus(size: int = 20, seed: int = 11) -> list[ParamCurve]:
    """Curves on ``X (x) minus cube`` (last pair coordinate) meeting the faces and ``X° x {0,1}`` properly.

    The hand-written list is topped up with random degree-one cube curves so
    that at least half of the corpus has a nonzero boundary.
    """
    out = []
    for fname, desc, q, texts in _PHI_TUPLES:
        F = _field(fname)
        pair = _base_pair(F, desc).tensor(ModulusPair.minus_cube(F))
        V = ParamCurve.parse(pair, q, texts)
        if _phi_admissible(V):
            out.append(V)
    rng = random.Random(seed)
    while len(out) < size:
        F = rng.choice([GF(5), GF(7), QQ])
        pair = _base_pair(F, rng.choice(["A1", "A1{0}"])).tensor(ModulusPair.minus_cube(F))
        x = "t" if pair.components_on(0) == () else f"1/(t+{rng.randint(1, 4)})"
        a = f"t^2+{rng.randint(1, 4)}*t+{rng.randint(1, 4)}"
        s = f"{rng.randint(1, 4)}*t+{rng.randint(1, 4)}"
        V = ParamCurve.parse(pair, 1, [x, a, s])
        if _phi_admissible(V):
            out.append(V)
    return out[:size]


def tilde_corpus(count: int = 50, seed: int = 7) -> list[tuple[PointCycle, Poly]]:
    """Pairs ``(Z, f)``: point cycles on ``(A^1, {0}) (x) A^1`` and ``f`` with ``f(0) = 1``."""
    rng = random.Random(seed)
    out = []
    fields = [GF(2), GF(3), QQ]
    while len(out) < count:
        F = fields[len(out) % 3]
        pair = ModulusPair.line(F, False, {0: 1}).tensor(ModulusPair.affine_line(F))
        terms = {}
        for _ in range(rng.randint(1, 2)):
            if F.is_finite and rng.random() < 0.4:
                P = _random_quadratic_point(F, rng)
            else:
                x0 = _nonzero(F, rng)
                u0 = _nonzero(F, rng)
                P = ClosedPoint.rational(F, [x0, u0])
            terms[P] = terms.get(P, 0) + rng.choice([1, 1, 2, -1])
        Z = PointCycle.from_dict(pair, 0, terms)
        if Z.is_zero():
            continue
        m = rng.randint(1, 2)
        tail = [F.from_int(rng.randint(-2, 2)) for _ in range(rng.randint(0, 2))]
        lead = F.from_int(rng.choice([1, 2, -1]))
        f = Poly(F, [F.one] + [F.zero] * (m - 1) + tail + [lead])
        if f.degree < 1:
            continue
        out.append((Z, f))
    return out


def _nonzero(F: Field, rng):
    while True:
        a = F.from_int(rng.randint(-4, 4)) if not F.is_finite else F.random_element(rng)
        if a != F.zero:
            return a


def _random_quadratic_point(F: Field, rng) -> ClosedPoint:
    from ..algebra.factor import irreducibles

    quads = list(irreducibles(F, 2))
    P = rng.choice(quads)
    theta = Poly.x(F)
    while True:
        a, b = F.random_element(rng), F.random_element(rng)
        x = Poly(F, [a, b]) if rng.random() < 0.5 else Poly.constant(F, _nonzero(F, rng))
        u = theta.scale(_nonzero(F, rng)) + Poly.constant(F, F.random_element(rng))
        x_ok = not (x % P).is_zero()
        if x_ok:
            point, _ = canonical_point(F, P, [x, u])
            return point


def translation_corpus() -> list[PointCycle]:
    """Rational points on pairs of the shape ``X (x) cube(m_1) (x) ...``."""
    out = []
    for F in (QQ, GF(5)):
        for m in (-2, -1, 0, 1, 2, 3):
            out.append(PointCycle.point(ModulusPair.cube(F, m), 0, [0]))
        X = ModulusPair.line(F, False, {0: 1})
        for ms in ((1, 1), (2, -1), (1, 2), (-1, -1)):
            Y = X
            for mi in ms:
                Y = Y.tensor(ModulusPair.cube(F, mi))
            out.append(PointCycle.point(Y, 0, [1, 0, 2]))
        Y = X.tensor(ModulusPair.affine_line(F)).tensor(ModulusPair.cube(F, 2))
        out.append(PointCycle.point(Y, 0, [2, 1, 1]))
    return out


def modulus_corpus() -> list:
    """Curves and points on effective pairs for the naive-condition equivalence."""
    F3, F5 = GF(3), GF(5)
    items = []
    specs = [
        (ModulusPair.line(F3, False, {0: 1}), 1, ["t", "t"]),
        (ModulusPair.line(F3, False, {0: 2}), 1, ["t+1", "1/t"]),
        (ModulusPair.line(F3, False, {0: 1}), 1, ["t^2+1", "t"]),
        (ModulusPair.line(F3, False, {0: 1}), 1, ["1/(t+1)", "t"]),
        (ModulusPair.line(F3, True, {"inf": 1}), 1, ["t", "t"]),
        (ModulusPair.line(F3, True, {"inf": 2}), 1, ["t", "t"]),
        (ModulusPair.line(F3, True, {"inf": 1}), 1, ["t^2", "t+1"]),
        (ModulusPair.line(F3, True, {"inf": 1}), 1, ["1/(t^2+1)", "t"]),
        (ModulusPair.line(F5, True, {"inf": 1, 0: 1}), 1, ["t+1", "t^2"]),
        (ModulusPair.line(F5, True, {"inf": 1, 0: 1}), 1, ["(t+1)/(t+2)", "t"]),
        (ModulusPair.line(F5, True, {"inf": 1, 0: 1}), 1, ["(t+1)/(t+2)", "1/(t+1)"]),
        (ModulusPair.line(F5, False, {"x^2+2": 1}), 1, ["t", "t+1"]),
        (ModulusPair.line(F5, False, {"x^2+2": 1}), 1, ["t^2", "t+1"]),
        (ModulusPair.line(F5, False, {"x^2+2": 3}), 1, ["1/(t^2+2)", "t"]),
        (ModulusPair.line(F5, False, {1: 1}), 1, ["t^2+1", "t^3"]),
        (ModulusPair.line(F5, False, {1: 1}), 1, ["t+2", "1/(t+4)"]),
        (ModulusPair.line(F5, False, {1: 1}), 2, ["t", "t+2", "t^2+3"]),
        (ModulusPair.line(F5, False, {}), 1, ["t", "t+2"]),
        (ModulusPair.line(QQ, False, {0: 1}), 1, ["t^2+1", "t"]),
        (ModulusPair.line(QQ, False, {0: 1}), 1, ["t-1", "t"]),
        (ModulusPair.line(QQ, True, {"inf": 1}), 1, ["t", "1/t"]),
        (ModulusPair.line(QQ, True, {"inf": 2}), 2, ["t", "t^2", "t+3"]),
        (ModulusPair.line(QQ, True, {"inf": 1}), 1, ["1/t", "t+2"]),
        (ModulusPair.line(QQ, False, {"x^2-2": 1}), 1, ["t", "t+5"]),
        (ModulusPair.line(QQ, False, {"x^2-2": 1}), 1, ["1/(t^2-2)", "t"]),
    ]
    for pair, q, texts in specs:
        items.append(ParamCurve.parse(pair, q, texts))
    items.append(PointCycle.point(ModulusPair.line(F3, False, {0: 1}), 0, [1]))
    items.append(PointCycle.point(ModulusPair.line(F3, False, {0: 1}), 0, [0]))
    items.append(PointCycle.point(ModulusPair.line(F5, False, {1: 2}), 1, [1, 3]))
    items.append(PointCycle.point(ModulusPair.line(F5, False, {1: 2}), 1, [2, 3]))
    items.append(PointCycle.point(ModulusPair.line(QQ, False, {0: 3}), 0, [5]))
    return items
