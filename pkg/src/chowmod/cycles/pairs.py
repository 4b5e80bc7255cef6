"""Modulus pairs built from coordinate lines.

A pair lives on a product of lines, each either projective (``P1``) or
affine only (``A1``).  Its divisor is an integer combination of coordinate
divisors ``{x_i = P}`` where ``P`` is a place of the i-th line: a monic
irreducible over the base field, or infinity on a projective line.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..algebra.fields import Field, parse_field
from ..algebra.places import INF, PlaceP1
from ..algebra.poly import Poly, parse_poly

P1, A1 = "P1", "A1"


@dataclass(frozen=True)
class Component:
    coord: int
    place: PlaceP1
    coeff: int

    def format(self, var: str = "x") -> str:
        where = "inf" if self.place.is_infinite else self.place.poly.format(f"{var}{self.coord + 1}")
        return f"{self.coeff}*{{{var}{self.coord + 1}: {where}}}"


@dataclass(frozen=True)
class ModulusPair:
    field: Field
    kinds: tuple
    components: tuple = ()

    def __post_init__(self):
        merged: dict = {}
        for c in self.components:
            if not 0 <= c.coord < len(self.kinds):
                raise ValueError(f"component on missing coordinate {c.coord}")
            if c.place.is_infinite and self.kinds[c.coord] != P1:
                raise ValueError("infinity lies on a projective coordinate only")
            if not c.place.is_infinite and c.place.poly.field != self.field:
                raise ValueError("component place over another field")
            key = (c.coord, c.place)
            merged[key] = merged.get(key, 0) + c.coeff
        for k in self.kinds:
            if k not in (P1, A1):
                raise ValueError(f"coordinate kind must be P1 or A1, got {k!r}")
        comps = tuple(
            Component(i, P, e)
            for (i, P), e in sorted(merged.items(), key=lambda kv: (kv[0][0], kv[0][1].sort_key()))
            if e
        )
        object.__setattr__(self, "kinds", tuple(self.kinds))
        object.__setattr__(self, "components", comps)

    # -- constructors ---------------------------------------------------------
    @classmethod
    def line(cls, field: Field, compact: bool = True, divisor: dict | None = None) -> "ModulusPair":
        """One coordinate; ``divisor`` maps places (or field elements) to coefficients."""
        comps = []
        for where, e in (divisor or {}).items():
            comps.append(Component(0, _as_place(field, where), e))
        return cls(field, (P1 if compact else A1,), tuple(comps))

    @classmethod
    def cube(cls, field: Field, m: int) -> "ModulusPair":
        """``(P^1, m {inf})``; ``m = -1`` is the minus cube."""
        return cls.line(field, True, {INF: m})

    @classmethod
    def minus_cube(cls, field: Field) -> "ModulusPair":
        return cls.cube(field, -1)

    @classmethod
    def affine_line(cls, field: Field) -> "ModulusPair":
        return cls(field, (A1,))

    # -- structure ------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self.kinds)

    def is_effective(self) -> bool:
        return all(c.coeff >= 0 for c in self.components)

    def support(self) -> frozenset:
        return frozenset((c.coord, c.place) for c in self.components)

    def components_on(self, i: int) -> tuple:
        return tuple(c for c in self.components if c.coord == i)

    def tensor(self, other: "ModulusPair") -> "ModulusPair":
        if other.field != self.field:
            raise ValueError("tensor product of pairs over different fields")
        shift = self.dim
        moved = tuple(Component(c.coord + shift, c.place, c.coeff) for c in other.components)
        out = ModulusPair(self.field, self.kinds + other.kinds, self.components + moved)
        expected = self.support() | frozenset((i + shift, P) for i, P in other.support())
        assert out.support() == expected, "support of a tensor product is the union of supports"
        return out

    __matmul__ = tensor

    def drop(self, i: int) -> "ModulusPair":
        """Forget coordinate ``i`` together with its components."""
        comps = tuple(
            Component(c.coord - (c.coord > i), c.place, c.coeff) for c in self.components if c.coord != i
        )
        return ModulusPair(self.field, self.kinds[:i] + self.kinds[i + 1:], comps)

    def is_minus_cube_coordinate(self, i: int) -> bool:
        comps = self.components_on(i)
        return self.kinds[i] == P1 and len(comps) == 1 and comps[0].place.is_infinite and comps[0].coeff == -1

    def format(self) -> str:
        lines = " x ".join(self.kinds) or "pt"
        div = " + ".join(c.format() for c in self.components) or "0"
        return f"({lines}, {div})"

    def __repr__(self):
        return f"ModulusPair({self.field!r}, {self.format()})"

    # -- JSON -----------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "coords": list(self.kinds),
            "divisor": [
                {"coord": c.coord, "at": "inf" if c.place.is_infinite else c.place.poly.format("x"), "coeff": c.coeff}
                for c in self.components
            ],
        }

    @classmethod
    def from_json(cls, field: Field | str, data: dict) -> "ModulusPair":
        if isinstance(field, str):
            field = parse_field(field)
        comps = [Component(int(d["coord"]), _as_place(field, d["at"]), int(d["coeff"])) for d in data.get("divisor", [])]
        return cls(field, tuple(data["coords"]), tuple(comps))


def _as_place(field: Field, where) -> PlaceP1:
    if isinstance(where, PlaceP1):
        return where
    if isinstance(where, Poly):
        return PlaceP1(where.monic())
    if isinstance(where, str):
        text = where.strip()
        if text.lower() in ("inf", "infinity", "oo"):
            return INF
        if "x" in text:
            return PlaceP1(parse_poly(field, text, var="x").monic())
        return PlaceP1.rational(field, field.parse_element(text))
    return PlaceP1.rational(field, where)
