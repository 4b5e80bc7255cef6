import itertools
import random
from math import lcm

import pytest
from hypothesis import given, strategies as st

from chowmod.algebra import GF, QQ, Poly, roots
from chowmod.algebra.factor import irreducibles
from chowmod.algebra.fields import standard_extension
from chowmod.algebra.places import PlaceP1
from chowmod.divisors import (
    SupportAtZero,
    ZeroCycleA1,
    div_witt,
    fiber_divisor,
    mult_convolution,
    parse_cycle,
    product_root_poly,
    pullback_inversion,
    pullback_power,
    pushforward_power,
    witt_of_cycle,
)
from chowmod.witt import star_polynomials


def one_plus(F, tail):
    return Poly(F, [F.one] + [F.coerce(c) for c in tail])


def split_product_oracle(pi, sigma):
    """prod (x - a b) over roots a of pi and b of sigma, computed in a splitting field."""
    F = pi.field
    L = standard_extension(F, lcm(pi.degree, sigma.degree)) if lcm(pi.degree, sigma.degree) > 1 else F
    ra = [a for a, e in roots(pi, L) for _ in range(e)]
    rb = [b for b, e in roots(sigma, L) for _ in range(e)]
    assert len(ra) == pi.degree and len(rb) == sigma.degree
    out = Poly.one(L)
    for a, b in itertools.product(ra, rb):
        out = out * Poly(L, [L.neg(L.mul(a, b)), L.one])
    return out


class TestProductRootPoly:
    @pytest.mark.parametrize("p,da,db", [(2, 1, 2), (2, 2, 2), (2, 2, 3), (3, 2, 2), (3, 1, 3), (5, 2, 1)])
    def test_against_splitting_field(self, p, da, db):
        F = GF(p)
        nonzero = [g for g in itertools.chain(irreducibles(F, da)) if g[0] != 0][:4]
        others = [g for g in irreducibles(F, db) if g[0] != 0][:4]
        for pi, sigma in itertools.product(nonzero, others):
            R = product_root_poly(pi, sigma)
            oracle = split_product_oracle(pi, sigma)
            L = oracle.field
            assert Poly(L, [L.embed(c, F) for c in R.coeffs]) == oracle


class TestConvolution:
    def test_square_of_quadratic_point_f2(self):
        F = GF(2)
        a = parse_cycle(F, "[u^2+u+1]")
        assert mult_convolution(a, a) == parse_cycle(F, "2*[u+1] + [u^2+u+1]")

    def test_unit_is_point_one(self):
        F = GF(3)
        a = parse_cycle(F, "2*[u^2+1] - [u+1]")
        one = ZeroCycleA1.point(F, 1)
        assert mult_convolution(one, a) == a

    @given(st.lists(st.integers(0, 2), min_size=1, max_size=4), st.lists(st.integers(0, 2), min_size=1, max_size=4))
    def test_div_is_multiplicative(self, a, b):
        F = GF(3)
        f, g = one_plus(F, a), one_plus(F, b)
        assert div_witt(star_polynomials(f, g)) == mult_convolution(div_witt(f), div_witt(g))

    @given(st.lists(st.integers(0, 1), min_size=1, max_size=4), st.lists(st.integers(0, 1), min_size=1, max_size=4))
    def test_degree_is_multiplicative(self, a, b):
        F = GF(2)
        A, B = div_witt(one_plus(F, a)), div_witt(one_plus(F, b))
        assert mult_convolution(A, B).degree == A.degree * B.degree

    def test_bilinear(self):
        F = GF(5)
        rng = random.Random(1)
        pts = [ZeroCycleA1.point(F, a) for a in range(1, 5)] + [parse_cycle(F, "[u^2+2]")]
        for _ in range(10):
            a, b, c = (rng.choice(pts) for _ in range(3))
            assert mult_convolution(a + b, c) == mult_convolution(a, c) + mult_convolution(b, c)

    def test_support_at_zero_rejected(self):
        F = GF(2)
        with pytest.raises(SupportAtZero):
            mult_convolution(parse_cycle(F, "[u]"), parse_cycle(F, "[u+1]"))

    def test_rational_points_over_q(self):
        a = ZeroCycleA1.point(QQ, 2)
        b = parse_cycle(QQ, "[u^2-3]")
        assert mult_convolution(a, b) == parse_cycle(QQ, "[u^2-12]")


class TestWittOfCycle:
    @given(st.lists(st.integers(0, 2), min_size=1, max_size=5))
    def test_inverse_of_div(self, tail):
        F = GF(3)
        f = one_plus(F, tail)
        if f.degree < 1:
            return
        assert witt_of_cycle(div_witt(f)) == f

    def test_non_effective_needs_rational(self):
        F = GF(3)
        alpha = parse_cycle(F, "[u-1] - [u+1]")
        with pytest.raises(ValueError):
            witt_of_cycle(alpha)
        r = witt_of_cycle(alpha, rational=True)
        assert r.num == Poly(F, [1, -1]) and r.den == Poly(F, [1, 1])


class TestMaps:
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_projection_formula(self, d):
        F = GF(5)
        alpha = parse_cycle(F, "[u-2] + 2*[u^2+2]")
        assert pushforward_power(pullback_power(alpha, d), d) == d * alpha

    def test_inversion_is_an_involution(self):
        F = GF(3)
        alpha = parse_cycle(F, "[u^2+u+2] - [u-1]")
        assert pullback_inversion(pullback_inversion(alpha)) == alpha

    def test_fiber_of_square_map(self):
        F = GF(3)
        D = fiber_divisor(Poly(F, [0, 0, 1]), 1)
        assert D == {PlaceP1.rational(F, 1): 1, PlaceP1.rational(F, 2): 1}
        assert fiber_divisor(Poly(F, [0, 0, 1]), 0) == {PlaceP1.rational(F, 0): 2}


class TestParse:
    def test_roundtrip(self):
        F = GF(2)
        c = parse_cycle(F, "3*[u+1] + 1*[u^2+u+1]")
        assert parse_cycle(F, c.format()) == c
        assert c.degree == 5

    def test_reducible_bracket_rejected(self):
        with pytest.raises(ValueError):
            parse_cycle(GF(2), "[u^2+1]")
