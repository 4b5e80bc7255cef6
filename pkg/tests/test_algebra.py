import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chowmod.algebra import GF, QQ, Poly, RatFunc, factor, is_irreducible, parse_field, parse_poly, resultant, roots
from chowmod.algebra.factor import irreducibles
from chowmod.algebra.fields import norm, standard_extension, trace
from chowmod.algebra.linalg import nullspace, solve, sylvester_resultant
from chowmod.algebra.places import INF, PlaceP1, divisor, valuation


def coeff_lists(p, max_len=6):
    return st.lists(st.integers(0, p - 1), min_size=0, max_size=max_len)


def brute_irreducible(f):
    """Trial division by every monic polynomial of degree <= deg f / 2."""
    F = f.field
    elems = list(F.elements())
    for d in range(1, f.degree // 2 + 1):
        for tail in itertools.product(elems, repeat=d):
            g = Poly(F, list(tail) + [F.one])
            if (f % g).is_zero():
                return False
    return f.degree >= 1


def mobius(n):
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


class TestFields:
    @pytest.mark.parametrize("name", ["F4", "F8", "F9"])
    def test_extension_axioms_exhaustive(self, name):
        F = parse_field(name)
        elems = list(F.elements())
        assert len(elems) == F.order
        for a in elems:
            assert F.pow(a, F.order) == a
            if a != F.zero:
                assert F.mul(a, F.inv(a)) == F.one
        if F.order <= 4:
            for a, b, c in itertools.product(elems, repeat=3):
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))

    def test_multiplicative_group_is_cyclic(self):
        F = parse_field("F4")
        orders = []
        for a in F.elements():
            if a == F.zero:
                continue
            n, x = 1, a
            while x != F.one:
                x, n = F.mul(x, a), n + 1
            orders.append(n)
        assert max(orders) == 3

    def test_norm_is_power_map(self):
        L = standard_extension(GF(3), 2)
        for a in L.elements():
            # on F9 the norm is a -> a^(1 + 3)
            assert L.embed(norm(L, a), GF(3)) == L.pow(a, 4)
            assert L.embed(trace(L, a), GF(3)) == L.add(a, L.pow(a, 3))

    def test_parse_field_variants(self):
        assert parse_field("Q") == QQ
        assert parse_field("F5").order == 5
        assert parse_field("F9=F3[x]/(x^2+1)").order == 9
        K = parse_field("F3(v)")
        assert not K.is_finite


class TestPoly:
    @given(coeff_lists(5), coeff_lists(5), coeff_lists(5))
    def test_ring_axioms(self, a, b, c):
        F = GF(5)
        A, B, C = Poly(F, a), Poly(F, b), Poly(F, c)
        assert A * (B + C) == A * B + A * C
        assert (A * B) * C == A * (B * C)
        assert A - A == Poly.zero(F)

    @given(coeff_lists(7, 8), coeff_lists(7, 5))
    def test_division(self, a, b):
        F = GF(7)
        A, B = Poly(F, a), Poly(F, b)
        if B.is_zero():
            return
        q, r = A.divmod(B)
        assert q * B + r == A
        assert r.is_zero() or r.degree < B.degree

    @given(coeff_lists(3, 6), coeff_lists(3, 6))
    def test_xgcd_bezout(self, a, b):
        F = GF(3)
        A, B = Poly(F, a), Poly(F, b)
        if A.is_zero() and B.is_zero():
            return
        g, s, t = A.xgcd(B)
        assert s * A + t * B == g
        assert (A % g).is_zero() and (B % g).is_zero()

    def test_rational_coefficients(self):
        f = parse_poly(QQ, "x^2 - 1/4", var="x")
        assert f(Fraction(1, 2)) == 0
        assert f.derivative() == parse_poly(QQ, "2*x", var="x")

    def test_parse_and_format_roundtrip(self):
        F = GF(3)
        f = parse_poly(F, "u^3 + 2*u + 1", var="u")
        assert parse_poly(F, f.format("u"), var="u") == f

    def test_ratfunc_arithmetic(self):
        F = QQ
        t = RatFunc.t(F)
        f = (t + 1) / (t - 1)
        assert f * f.inverse() == RatFunc.const(F, 1)
        assert f.compose(t * t) == (t * t + 1) / (t * t - 1)


class TestResultant:
    @given(st.sampled_from([2, 3, 7]), coeff_lists(7, 6), coeff_lists(7, 6))
    def test_matches_sylvester(self, p, a, b):
        F = GF(p)
        A, B = Poly(F, [x % p for x in a]), Poly(F, [x % p for x in b])
        if A.degree < 1 or B.degree < 1:
            return
        assert resultant(A, B) == sylvester_resultant(A, B)

    def test_rationals(self):
        rng = random.Random(0)
        for _ in range(30):
            A = Poly(QQ, [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(2, 5))])
            B = Poly(QQ, [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(2, 5))])
            if A.degree >= 1 and B.degree >= 1:
                assert resultant(A, B) == sylvester_resultant(A, B)

    def test_vanishes_on_common_root(self):
        F = GF(11)
        A = parse_poly(F, "(x-3)*(x+1)", var="x")
        B = parse_poly(F, "(x-3)*(x^2+2)", var="x")
        assert resultant(A, B) == 0


class TestFactor:
    @pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (5, 2)])
    def test_irreducible_count_gauss(self, p, n):
        expected = sum(mobius(n // d) * p**d for d in range(1, n + 1) if n % d == 0) // n
        assert len(list(irreducibles(GF(p), n))) == expected

    @pytest.mark.parametrize("p,n", [(2, 4), (2, 6), (3, 4)])
    def test_irreducibility_against_trial_division(self, p, n):
        F = GF(p)
        for tail in itertools.product(range(p), repeat=n):
            f = Poly(F, list(tail) + [1])
            assert is_irreducible(f) == brute_irreducible(f)

    @given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 4), min_size=2, max_size=9))
    def test_factor_reconstructs(self, p, coeffs):
        F = GF(p)
        f = Poly(F, [c % p for c in coeffs])
        if f.degree < 1:
            return
        lc, facs = factor(f)
        prod = Poly.constant(F, lc)
        for g, e in facs:
            assert g.lc == F.one and brute_irreducible(g)
            prod = prod * g**e
        assert prod == f

    def test_factor_extension_field(self):
        F = parse_field("F4")
        f = Poly(F, [F.one, F.one, F.one])
        _, facs = factor(f)
        assert sorted(g.degree for g, _ in facs) == [1, 1]

    def test_factor_rationals(self):
        f = parse_poly(QQ, "(x^2+1)*(x-1/2)^2*(x^3-2)", var="x")
        _, facs = factor(f)
        assert sorted((g.degree, e) for g, e in facs) == [(1, 2), (2, 1), (3, 1)]

    @pytest.mark.parametrize("p", [2, 3, 5, 7])
    def test_roots_exhaustive(self, p):
        F = GF(p)
        rng = random.Random(p)
        for _ in range(40):
            f = Poly(F, [rng.randrange(p) for _ in range(rng.randint(2, 7))])
            if f.degree < 1:
                continue
            found = {a: e for a, e in roots(f)}
            for a in range(p):
                if f(a) == 0:
                    e, g = 0, f
                    lin = Poly(F, [F.neg(a), 1])
                    while (g % lin).is_zero():
                        g, e = g // lin, e + 1
                    assert found.get(a) == e
                else:
                    assert a not in found

    def test_roots_in_extension(self):
        L = standard_extension(GF(2), 2)
        f = Poly(GF(2), [1, 1, 1])
        assert len(roots(f, L)) == 2


class TestPlaces:
    @given(coeff_lists(5, 5), coeff_lists(5, 5))
    def test_principal_divisor_has_degree_zero(self, a, b):
        F = GF(5)
        num, den = Poly(F, a), Poly(F, b)
        if num.is_zero() or den.is_zero():
            return
        D = divisor(RatFunc(num, den))
        assert sum(P.degree * e for P, e in D.items()) == 0

    def test_valuation_at_infinity(self):
        F = QQ
        t = RatFunc.t(F)
        assert valuation(t**3 / (t + 1), PlaceP1.infinity()) == -2
        assert valuation((t - 2) ** 2, PlaceP1.rational(F, 2)) == 2
        assert INF.is_infinite


class TestLinalg:
    def test_solve_and_nullspace(self):
        F = GF(7)
        rows = [[1, 2, 3], [2, 4, 6]]
        x = solve(F, rows, [1, 2])
        assert [sum(F.mul(r, v) for r, v in zip(row, x)) % 7 for row in rows] == [1, 2]
        for v in nullspace(F, rows):
            assert all(sum(F.mul(r, c) for r, c in zip(row, v)) % 7 == 0 for row in rows)
        assert solve(F, rows, [1, 3]) is None
