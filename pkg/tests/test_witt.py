import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from chowmod.algebra import GF, QQ, Poly, parse_field
from chowmod.witt import (
    TruncationMismatch,
    WittVector,
    additive_order,
    from_generators,
    from_ghost,
    ghost,
    selftest,
    star_generators,
    star_ghost,
    star_polynomials,
    to_generators,
)

FIELDS = {"F2": GF(2), "F3": GF(3), "F4": parse_field("F4"), "Q": QQ}


def vectors(field, m):
    if field == QQ:
        elem = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    else:
        elem = st.sampled_from(list(field.elements()))
    return st.lists(elem, min_size=m, max_size=m).map(lambda c: WittVector.from_coeffs(field, m, c))


def linear_product(F, roots, m):
    """prod (1 - a u) over the given inverse roots, truncated at u^m."""
    f = Poly.one(F)
    for a in roots:
        f = f * Poly(F, [F.one, F.neg(a)])
    return WittVector.from_poly(f, m)


@pytest.mark.parametrize("name", ["F2", "F3", "F4", "Q"])
class TestRingAxioms:
    @given(data=st.data())
    def test_additive_group(self, name, data):
        F = FIELDS[name]
        a, b, c = (data.draw(vectors(F, 6)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a + (-a) == WittVector.zero(F, 6)

    @given(data=st.data())
    def test_multiplication(self, name, data):
        F = FIELDS[name]
        a, b, c = (data.draw(vectors(F, 5)) for _ in range(3))
        assert star_generators(a, b) == star_generators(b, a)
        assert star_generators(star_generators(a, b), c) == star_generators(a, star_generators(b, c))
        assert star_generators(a, b + c) == star_generators(a, b) + star_generators(a, c)
        assert star_generators(WittVector.one(F, 5), a) == a

    @given(data=st.data())
    def test_generator_roundtrip(self, name, data):
        a = data.draw(vectors(FIELDS[name], 7))
        assert from_generators(to_generators(a)) == a

    @given(data=st.data())
    def test_truncation_is_a_ring_map(self, name, data):
        F = FIELDS[name]
        a, b = data.draw(vectors(F, 6)), data.draw(vectors(F, 6))
        assert (a + b).lower(3) == a.lower(3) + b.lower(3)
        assert star_generators(a, b).lower(3) == star_generators(a.lower(3), b.lower(3))


class TestProductOracle:
    """Root-set definition: (prod 1 - a_i u) * (prod 1 - b_j u) = prod (1 - a_i b_j u)."""

    @pytest.mark.parametrize("name", ["F2", "F3", "F4", "Q"])
    def test_split_polynomials(self, name):
        F = FIELDS[name]
        rng = random.Random(0)
        pool = list(F.elements()) if F.is_finite else [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(9)]
        for _ in range(40):
            A = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
            B = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
            m = 8
            expected = linear_product(F, [F.mul(a, b) for a in A for b in B], m)
            assert star_generators(linear_product(F, A, m), linear_product(F, B, m)) == expected

    @given(st.lists(st.fractions(max_denominator=5), min_size=1, max_size=10),
           st.lists(st.fractions(max_denominator=5), min_size=1, max_size=10))
    def test_ghost_route_over_rationals(self, x, y):
        m = max(len(x), len(y))
        a, b = WittVector.from_coeffs(QQ, m, x), WittVector.from_coeffs(QQ, m, y)
        assert star_ghost(a, b) == star_generators(a, b)

    def test_star_polynomials_untruncated(self):
        F = GF(2)
        f = Poly(F, [1, 1, 1])
        assert star_polynomials(f, f) == Poly(F, [1, 1, 0, 1, 1])


class TestGhost:
    @given(st.lists(st.fractions(max_denominator=4), min_size=1, max_size=12))
    def test_roundtrip(self, c):
        x = WittVector.from_coeffs(QQ, len(c), c)
        assert from_ghost(ghost(x)) == x

    def test_logarithmic_derivative_definition(self):
        # ghost(1 - a u) = (a, a^2, a^3, ...)
        x = WittVector.teichmuller(QQ, 5, Fraction(2, 3))
        assert ghost(x).entries == tuple(Fraction(2, 3) ** n for n in range(1, 6))

    def test_positive_characteristic_has_no_inverse(self):
        with pytest.raises(ValueError):
            from_ghost(ghost(WittVector.one(GF(2), 3)))


class TestOrders:
    @pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
    def test_exhaustive_torsion(self, p, k):
        F, n = GF(p), p**k
        if p**n > 20000:
            pytest.skip("exhaustive range too large")
        for x in WittVector.all(F, n):
            assert x.scalar(p ** (k + 1)).is_zero()
        assert additive_order(WittVector.one(F, n)) == p ** (k + 1)

    def test_w3_f2_example(self):
        x = WittVector.from_poly(Poly(GF(2), [1, 0, 1]), 3)
        assert additive_order(x) == 2

    @pytest.mark.parametrize("name", ["F2", "F3", "F4", "Q"])
    def test_scalar_matches_repeated_addition(self, name):
        F = FIELDS[name]
        rng = random.Random(4)
        for _ in range(5):
            x = WittVector.random(F, 7, rng)
            total = WittVector.zero(F, 7)
            for n in range(10):
                assert x.scalar(n) == total
                assert x.scalar(-n) == -total
                total = total + x


class TestErrors:
    def test_truncation_mismatch(self):
        with pytest.raises(TruncationMismatch):
            WittVector.one(GF(2), 3) + WittVector.one(GF(2), 4)

    def test_constant_term_must_be_one(self):
        with pytest.raises(ValueError):
            WittVector.from_poly(Poly(GF(3), [2, 1]), 3)


@pytest.mark.parametrize("field,m", [(GF(2), 8), (GF(3), 9), (QQ, 6)])
def test_selftest_report(field, m):
    report = selftest(field, m, trials=10)
    assert report["checks"] and all(c["status"] == "pass" for c in report["checks"])


def test_generator_law_f4_exhaustive():
    F = parse_field("F4")
    for a, b in itertools.product(list(F.elements()), repeat=2):
        for m in (1, 4, 9):
            lhs = star_generators(WittVector.teichmuller(F, m, a), WittVector.teichmuller(F, m, b))
            assert lhs == WittVector.teichmuller(F, m, F.mul(a, b))
