"""Factorization of univariate polynomials.

Finite fields (prime fields and towers of extensions) use squarefree
decomposition, distinct-degree splitting and Cantor-Zassenhaus.  Over Q the
work is delegated to sympy, with a bound on the degree of the irreducible
factors that callers are allowed to receive.  Over a rational function field
only polynomials with constant coefficients, linear polynomials and (over
Q(v)) polynomials sympy can handle are supported.
"""
from __future__ import annotations

import random
from functools import lru_cache
from fractions import Fraction

from .fields import Field, Rationals, RationalFunctionField
from .poly import Poly

DEFAULT_DEGREE_BOUND = 4


class FactorizationIncomplete(ArithmeticError):
    """An irreducible factor exceeded the configured degree bound."""


def _x(F):
    return Poly.x(F)


def _pth_root_coeff(F: Field, a):
    # the Frobenius is bijective on a finite field: a^(1/p) = a^(q/p)
    return F.pow(a, F.order // F.characteristic)


def _pth_root(f: Poly) -> Poly:
    F = f.field
    p = F.characteristic
    return Poly(F, [_pth_root_coeff(F, f.coeffs[i]) for i in range(0, len(f.coeffs), p)])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree ``g_i`` with ``f = lc * prod g_i^{e_i}``, pairwise coprime."""
    F = f.field
    if f.is_zero():
        raise ValueError("squarefree decomposition of 0")
    f = f.monic()
    if f.degree == 0:
        return []
    p = F.characteristic
    out: dict[int, Poly] = {}

    def add(g, e):
        if g.degree > 0:
            out[e] = out[e] * g if e in out else g

    df = f.derivative()
    if df.is_zero():
        for g, e in squarefree_decomposition(_pth_root(f)):
            add(g, e * p)
        return sorted(((g.monic(), e) for e, g in out.items()), key=lambda ge: ge[1])
    c = f.gcd(df)
    w = f.exact_div(c)
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w.exact_div(y)
        add(z, i)
        i += 1
        w = y
        c = c.exact_div(y)
    if c.degree > 0:
        # remaining factor is a p-th power (only in positive characteristic)
        for g, e in squarefree_decomposition(_pth_root(c)):
            add(g, e * p)
    return sorted(((g.monic(), e) for e, g in out.items()), key=lambda ge: ge[1])


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split monic squarefree ``f`` into products of irreducibles of equal degree."""
    F = f.field
    q = F.order
    out = []
    x = _x(F)
    h = x
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.pow_mod(q, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f.exact_div(g)
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _random_poly(F, deg, rng):
    return Poly(F, [F.random_element(rng) for _ in range(deg + 1)])


def equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus: split monic squarefree ``f`` whose factors all have degree ``d``."""
    if f.degree == d:
        return [f]
    F = f.field
    q = F.order
    while True:
        a = _random_poly(F, f.degree - 1, rng)
        if a.degree < 1:
            continue
        if F.characteristic == 2:
            # trace map sum_{i<k d} a^(2^i) with q^d = 2^(k d)
            k = q.bit_length() - 1
            b = a % f
            t = b
            for _ in range(k * d - 1):
                b = b * b % f
                t = t + b
        else:
            t = a.pow_mod((q**d - 1) // 2, f) - Poly.one(F)
        g = f.gcd(t)
        if 0 < g.degree < f.degree:
            return equal_degree(g, d, rng) + equal_degree(f.exact_div(g), d, rng)


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: Poly) -> bool:
    F = f.field
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    if F.is_finite:
        f = f.monic()
        q, n = F.order, f.degree
        x = _x(F)
        if x.pow_mod(q**n, f) != x % f:
            return False
        for r in _prime_factors(n):
            h = x.pow_mod(q ** (n // r), f)
            if f.gcd(h - x).degree > 0:
                return False
        return True
    if isinstance(F, Rationals):
        factors = _factor_rationals(f, bound=None)
        return len(factors) == 1 and factors[0][1] == 1
    lc, factors = factor(f)
    return len(factors) == 1 and factors[0][1] == 1


@lru_cache(maxsize=1 << 16)
def _factor_finite(f: Poly, seed: int = 0) -> list[tuple[Poly, int]]:
    rng = random.Random(seed)
    out = []
    for g, e in squarefree_decomposition(f):
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                out.append((irr.monic(), e))
    return tuple(out)


def _factor_rationals(f: Poly, bound):
    import sympy

    u = sympy.Symbol("u")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * u**i for i, c in enumerate(f.coeffs))
    lc, facs = sympy.factor_list(sympy.Poly(expr, u, domain="QQ"))
    F = f.field
    out = []
    for g, e in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(g.all_coeffs())]
        g = Poly(F, coeffs).monic()
        if bound is not None and g.degree > bound:
            raise FactorizationIncomplete(
                f"factorization incomplete: irreducible factor {g.format()} exceeds degree bound {bound}"
            )
        out.append((g, int(e)))
    return out


def _factor_ratfunc(f: Poly, bound):
    F: RationalFunctionField = f.field
    base = F.base
    consts = [F.constant_value(c) for c in f.coeffs]
    if all(c is not None for c in consts):
        _, facs = factor(Poly(base, consts), bound=bound)
        return [(Poly(F, [F.embed(c, base) for c in g.coeffs]), e) for g, e in facs]
    if f.degree == 1:
        return [(f.monic(), 1)]
    if isinstance(base, Rationals):
        return _factor_ratfunc_sympy(f, bound)
    raise FactorizationIncomplete(f"factorization incomplete over {F}: {f.format()}")


def _factor_ratfunc_sympy(f: Poly, bound):
    import sympy

    F: RationalFunctionField = f.field
    u, v = sympy.symbols("u v")

    def to_expr(coeffs):
        return sum(sympy.Rational(c.numerator, c.denominator) * v**i for i, c in enumerate(coeffs))

    expr = sum(to_expr(c[0]) / to_expr(c[1]) * u**i for i, c in enumerate(f.coeffs))
    num, _ = sympy.fraction(sympy.together(expr))
    _, facs = sympy.factor_list(sympy.expand(num), u, v)
    out = []
    for g, e in facs:
        gp = sympy.Poly(g, u)
        if gp.degree() < 1:
            continue
        coeffs = []
        for c in reversed(gp.all_coeffs()):
            cp = sympy.Poly(c, v, domain="QQ")
            cnum = [Fraction(int(x.p), int(x.q)) for x in reversed(cp.all_coeffs())]
            coeffs.append(F.element(Poly(F.base, cnum)))
        g = Poly(F, coeffs).monic()
        if bound is not None and g.degree > bound:
            raise FactorizationIncomplete(f"factorization incomplete: {g.format()}")
        out.append((g, int(e)))
    return out


def factor(f: Poly, bound: int | None = DEFAULT_DEGREE_BOUND) -> tuple[object, list[tuple[Poly, int]]]:
    """``(lc, [(g, e), ...])`` with monic irreducible pairwise distinct ``g``.

    ``bound`` limits irreducible factor degrees over Q and Q(v); it is ignored
    over finite fields.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    F = f.field
    lc = f.lc
    if f.degree == 0:
        return lc, []
    if F.is_finite:
        facs = _factor_finite(f.monic())
    elif isinstance(F, Rationals):
        facs = _factor_rationals(f, bound)
    elif isinstance(F, RationalFunctionField):
        facs = _factor_ratfunc(f, bound)
    else:
        raise FactorizationIncomplete(f"no factorization routine for {F}")
    merged: dict[Poly, int] = {}
    for g, e in facs:
        merged[g] = merged.get(g, 0) + e
    return lc, sorted(merged.items(), key=lambda ge: (ge[0].degree, ge[0].coeffs.__repr__()))


def roots(f: Poly, L: Field | None = None) -> list[tuple[object, int]]:
    """Roots of ``f`` lying in ``L`` (default: the coefficient field), with multiplicity."""
    F = f.field
    if L is not None and L != F:
        f = Poly(L, [L.embed(c, F) for c in f.coeffs])
    _, facs = factor(f, bound=None if f.field.is_finite else DEFAULT_DEGREE_BOUND) if f.degree > 0 else (None, [])
    K = f.field
    return [(K.neg(g.coeffs[0]), e) for g, e in facs if g.degree == 1]


def irreducibles(F: Field, degree: int):
    """All monic irreducible polynomials of the given degree over a finite field."""
    import itertools

    elems = list(F.elements())
    for tail in itertools.product(elems, repeat=degree):
        g = Poly(F, list(tail) + [F.one])
        if is_irreducible(g):
            yield g
