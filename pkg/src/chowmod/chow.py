"""Zero-cycles on ``(A^1, M{0})`` modulo boundaries of admissible curves.

Generators are the closed points of ``A^1 - {0}`` up to a degree bound; a
relation is the boundary of a curve ``t -> (x(t); s(t))`` in ``A^1 x cube``
that meets the faces properly and satisfies the modulus condition.  The
quotient is computed by Smith normal form and compared with the truncated
Witt group through the map sending a cycle to its monic-at-zero polynomial.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import asdict, dataclass, field as dc_field

from .algebra.factor import irreducibles
from .algebra.fields import Field, parse_field
from .algebra.places import PlaceP1
from .algebra.poly import Poly, RatFunc
from .cycles import ModulusPair, ParamCurve, check_faces, check_modulus, boundary
from .divisors import ZeroCycleA1, witt_of_cycle
from .snf import invariant_factors
from .witt import WittVector, additive_order, star_generators


class CapExceeded(RuntimeError):
    """An enumeration or matrix would exceed the configured size cap."""


@dataclass
class ChowComputationConfig:
    field: str | Field
    m: int
    deg_bound: int
    height: int
    out: str | None = None
    modulus: int | None = None
    cap: int = 20000
    x_family: str = "graph"

    def __post_init__(self):
        if isinstance(self.field, str):
            self.field = parse_field(self.field)
        if not self.field.is_finite:
            raise ValueError("the computation runs over finite fields")
        if self.m < 1 or self.deg_bound < 1 or self.height < 1:
            raise ValueError("m, deg_bound and height must be at least 1")
        if self.modulus is None:
            self.modulus = self.m + 1
        if self.modulus < 2:
            raise ValueError("the modulus multiplicity must be at least 2")
        if self.x_family not in ("graph", "poly"):
            raise ValueError("x_family is 'graph' or 'poly'")


@dataclass
class ChowReport:
    field: str
    m: int
    modulus: int
    deg_bound: int
    height: int
    generators: list
    candidates: int
    admissible: int
    relations: int
    discarded: int
    invariant_factors: list
    free_rank: int
    order: int | None
    expected_order: int
    relations_map_to_identity: bool
    surjective: bool
    witnesses: dict
    isomorphism: bool
    seconds: float
    log: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.relations_map_to_identity and self.surjective and self.order == self.expected_order

    def to_json(self) -> dict:
        return asdict(self)


def _polys_up_to(F: Field, deg: int, monic: bool = False):
    elems = list(F.elements())
    for d in range(deg + 1):
        if monic:
            for tail in itertools.product(elems, repeat=d):
                yield Poly(F, list(tail) + [F.one])
        else:
            for cs in itertools.product(elems, repeat=d + 1):
                if cs[-1] != F.zero:
                    yield Poly(F, list(cs))


def relation_candidates(F: Field, height: int, x_family: str = "graph"):
    """Curves ``(x(t); s(t))`` with ``s = a/b`` in lowest terms, ``max(deg a, deg b) <= height``."""
    t = Poly.x(F)
    if x_family == "graph":
        xs = [RatFunc(t)]
    else:
        xs = [RatFunc(p) for p in _polys_up_to(F, height, monic=True) if p.degree >= 1 and p.coeffs[0] == F.zero]
    dens = list(_polys_up_to(F, height, monic=True))
    nums = list(_polys_up_to(F, height))
    for x in xs:
        for b in dens:
            for a in nums:
                if a.degree < 1 and b.degree < 1:
                    continue
                if a.gcd(b).degree > 0:
                    continue
                yield x, RatFunc(a, b)


def count_candidates(F: Field, height: int, x_family: str = "graph") -> int:
    return sum(1 for _ in relation_candidates(F, height, x_family))


def generators(F: Field, deg_bound: int) -> list[Poly]:
    x = Poly.x(F)
    out = []
    for d in range(1, deg_bound + 1):
        out.extend(g for g in irreducibles(F, d) if g != x)
    return out


def _witt_image(cycle: ZeroCycleA1, m: int) -> WittVector:
    h = witt_of_cycle(cycle, rational=True)
    num = WittVector.from_poly(h.num.scale(h.field.inv(h.num[0])), m)
    den = WittVector.from_poly(h.den.scale(h.field.inv(h.den[0])), m)
    return num - den


def compute_ch0(config: ChowComputationConfig) -> ChowReport:
    start = time.perf_counter()
    F = config.field
    M = config.modulus
    m = M - 1
    pair = ModulusPair.line(F, False, {0: M})
    gens = generators(F, config.deg_bound)
    if len(gens) > config.cap:
        raise CapExceeded(f"{len(gens)} generators exceed the cap {config.cap}")
    index = {g: i for i, g in enumerate(gens)}
    log = [f"generators: {len(gens)} closed points of degree <= {config.deg_bound}"]
    n_cand = count_candidates(F, config.height, config.x_family)
    log.append(f"relation candidates: {n_cand}")
    if n_cand > 50 * config.cap:
        raise CapExceeded(f"{n_cand} candidate curves exceed the cap")
    rows = set()
    admissible = discarded = 0
    identity_ok = True
    for x, s in relation_candidates(F, config.height, config.x_family):
        V = ParamCurve(pair, 1, (x, s), 1, injective=False)
        if not check_faces(V) or not check_modulus(V).passed:
            continue
        admissible += 1
        d = boundary(V)
        vec = [0] * len(gens)
        outside = False
        cycle = {}
        for P, e in d.terms:
            g = P.minpoly
            if g not in index:
                outside = True
                break
            vec[index[g]] += e
            cycle[PlaceP1(g)] = e
        if outside:
            discarded += 1
            continue
        if not _witt_image(ZeroCycleA1.from_dict(F, cycle), m).is_zero():
            identity_ok = False
            log.append(f"relation off the identity: x={x.format()}, s={s.format()}")
        if any(vec):
            rows.add(tuple(vec))
        if len(rows) > config.cap:
            raise CapExceeded(f"more than {config.cap} distinct relations")
    log.append(f"admissible curves: {admissible}; relations kept: {len(rows)}; discarded (outside span): {discarded}")
    matrix = [list(r) for r in sorted(rows)]
    factors = invariant_factors(matrix) if matrix else []
    free_rank = len(gens) - len(factors)
    torsion = [d for d in factors if d > 1]
    order = None
    if free_rank == 0:
        order = 1
        for d in torsion:
            order *= d
    expected = F.order**m
    surjective, witnesses = _surjectivity(F, gens, m)
    report = ChowReport(
        field=repr(F),
        m=m,
        modulus=M,
        deg_bound=config.deg_bound,
        height=config.height,
        generators=[g.format("u") for g in gens],
        candidates=n_cand,
        admissible=admissible,
        relations=len(rows),
        discarded=discarded,
        invariant_factors=torsion,
        free_rank=free_rank,
        order=order,
        expected_order=expected,
        relations_map_to_identity=identity_ok,
        surjective=surjective,
        witnesses=witnesses,
        isomorphism=identity_ok and surjective and order == expected,
        seconds=round(time.perf_counter() - start, 3),
        log=log,
    )
    if config.out:
        with open(config.out, "w") as fh:
            json.dump(report.to_json(), fh, indent=2)
    return report


def _surjectivity(F: Field, gens: list, m: int):
    """Breadth-first closure of the generator images in ``W_m``, with witness combinations."""
    images = [_witt_image(ZeroCycleA1.place(g), m) for g in gens]
    zero = WittVector.zero(F, m)
    seen = {zero: {}}
    frontier = [zero]
    while frontier:
        nxt = []
        for w in frontier:
            for i, img in enumerate(images):
                for sign, step in ((1, img), (-1, -img)):
                    y = w + step
                    if y not in seen:
                        combo = dict(seen[w])
                        combo[i] = combo.get(i, 0) + sign
                        seen[y] = {k: v for k, v in combo.items() if v}
                        nxt.append(y)
        frontier = nxt
    total = F.order**m
    witnesses = {
        w.format(): " + ".join(f"{c}*[{gens[i].format('u')}]" for i, c in sorted(combo.items())) or "0"
        for w, combo in seen.items()
    }
    return len(seen) == total, witnesses


# -- operation tables ----------------------------------------------------------------

def witt_table(F: Field | str, m: int, cap: int = 4096) -> dict:
    """Addition and product tables of ``W_m(F)`` with axiom checks and additive orders."""
    if isinstance(F, str):
        F = parse_field(F)
    size = F.order**m
    if size > cap:
        raise CapExceeded(f"|W_{m}| = {size} exceeds the table cap {cap}")
    elems = list(WittVector.all(F, m))
    pos = {x: i for i, x in enumerate(elems)}
    add = [[pos[x + y] for y in elems] for x in elems]
    mul = [[pos[star_generators(x, y)] for y in elems] for x in elems]
    zero = pos[WittVector.zero(F, m)]
    unit = pos[WittVector.one(F, m)]
    idx = range(size)
    checks = {
        "add_associative": all(add[add[a][b]][c] == add[a][add[b][c]] for a in idx for b in idx for c in idx)
        if size <= 64 else None,
        "add_commutative": all(add[a][b] == add[b][a] for a in idx for b in idx),
        "add_zero": all(add[zero][a] == a for a in idx),
        "add_inverse": all(any(add[a][b] == zero for b in idx) for a in idx),
        "mul_commutative": all(mul[a][b] == mul[b][a] for a in idx for b in idx),
        "mul_unit": all(mul[unit][a] == a for a in idx),
        "mul_associative": all(mul[mul[a][b]][c] == mul[a][mul[b][c]] for a in idx for b in idx for c in idx)
        if size <= 64 else None,
        "distributive": all(mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]] for a in idx for b in idx for c in idx)
        if size <= 64 else None,
    }
    orders = {x.format(): additive_order(x) for x in elems}
    return {
        "field": repr(F),
        "m": m,
        "elements": [x.format() for x in elems],
        "add": add,
        "mul": mul,
        "zero": zero,
        "unit": unit,
        "checks": checks,
        "additive_orders": orders,
        "unit_order": additive_order(WittVector.one(F, m)),
        "exponent": max(orders.values()),
    }


def render_table(table: dict) -> str:
    names = table["elements"]
    width = max(len(n) for n in names) + 1
    lines = [f"W_{table['m']}({table['field']}): {len(names)} elements, unit = {names[table['unit']]}"]
    for title, key in (("+", "add"), ("*", "mul")):
        lines.append("")
        lines.append(title.rjust(width) + " |" + "".join(n.rjust(width) for n in names))
        lines.append("-" * (width + 2 + width * len(names)))
        for i, row in enumerate(table[key]):
            lines.append(names[i].rjust(width) + " |" + "".join(names[j].rjust(width) for j in row))
    lines.append("")
    lines.append("checks: " + ", ".join(f"{k}={v}" for k, v in table["checks"].items()))
    lines.append(f"additive order of the unit: {table['unit_order']}")
    return "\n".join(lines)
