"""Independent reference computations shared by the module and acceptance tests."""
from chowmod.algebra import Poly
from chowmod.algebra.places import INF, valuation
from chowmod.cycles import PointCycle, powered_translation


def support_oracle(V):
    """Closure in Xbar x A^q meets the divisor support, decided by gcds and degrees.

    Finite parameter places: a component's pulled-back numerator must keep a
    factor after removing everything shared with the cube (and affine-only)
    denominators.  The parameter place at infinity is decided by degrees.
    """
    F = V.pair.field
    if isinstance(V, PointCycle):
        hit = False
        for P, _ in V.terms:
            for c in V.pair.components:
                value = P.values()[c.coord]
                hit |= (not c.place.is_infinite) and c.place.poly(value) == F.zero
        return hit
    blockers = [s.den for s in V.coords[V.n:]]
    blockers += [V.coords[i].den for i, kind in enumerate(V.pair.kinds) if kind == "A1"]
    L = Poly.one(F)
    for b in blockers:
        L = L * b
    at_inf_blocked = any(s.num.degree > s.den.degree for s in V.coords[V.n:]) or any(
        V.coords[i].num.degree > V.coords[i].den.degree for i, kind in enumerate(V.pair.kinds) if kind == "A1"
    )
    for c in V.pair.components:
        x = V.coords[c.coord]
        a, b = x.num, x.den
        if c.place.is_infinite:
            N = b
            inf_hit = a.degree > b.degree
        else:
            pi = c.place.poly
            N = Poly.zero(F)
            for k, coef in enumerate(pi.coeffs):
                N = N + (a**k * b ** (pi.degree - k)).scale(coef)
            if a.degree > b.degree:
                inf_hit = False
            else:
                lim = F.div(a[b.degree], b.lc) if a.degree == b.degree else F.zero
                inf_hit = pi(lim) == F.zero
        g = N.gcd(L) if not L.is_constant() else Poly.one(F)
        while g.degree > 0:
            N = N // g
            g = N.gcd(L)
        if N.degree > 0 or (inf_hit and not at_inf_blocked):
            return True
    return False


def pole_order_bound(V, max_d=8):
    """Least d with the powered translation of V admissible, from valuations at t = inf.

    The translated coordinates and the cube coordinate t^d are polynomials in t,
    so only the parameter place at infinity can violate the condition; it is
    outside the closure when an affine-only coordinate has a pole there.
    """
    for d in range(1, max_d + 1):
        ok = True
        for c in powered_translation(V, d):
            if any(kind == "A1" and valuation(c.coords[i], INF) < 0 for i, kind in enumerate(c.pair.kinds)):
                continue
            left = sum(
                comp.coeff * max(0, -valuation(c.coords[comp.coord], INF))
                for comp in c.pair.components
                if comp.place.is_infinite
            )
            right = max(0, -valuation(c.coords[-1], INF))
            ok &= left <= right
        if ok:
            return d
    return None
