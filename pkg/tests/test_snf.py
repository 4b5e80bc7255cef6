import itertools
import random
from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from chowmod.snf import int_det, inverse_unimodular, invariant_factors, random_unimodular, smith_normal_form


def determinantal_invariants(M):
    """s_k = D_k / D_{k-1} with D_k the gcd of all k x k minors (independent of elimination)."""
    A = np.array(M, dtype=object)
    m, n = A.shape
    out, prev = [], 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, int_det(A[np.ix_(rows, cols)]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def small_matrices(max_dim=4, bound=6):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


class TestSmithForm:
    @given(small_matrices())
    def test_decomposition(self, rows):
        M = np.array(rows, dtype=object)
        U, S, V = smith_normal_form(M)
        assert (U.dot(M).dot(V) == S).all()
        assert abs(int_det(U)) == 1 and abs(int_det(V)) == 1
        diag = [S[i, i] for i in range(min(S.shape))]
        off = S.copy()
        for i in range(min(S.shape)):
            off[i, i] = 0
        assert not off.any()
        nz = [d for d in diag if d]
        assert all(d > 0 for d in nz)
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))

    @given(small_matrices(max_dim=3))
    def test_matches_determinantal_divisors(self, rows):
        assert invariant_factors(rows) == determinantal_invariants(rows)

    def test_known_example(self):
        M = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
        assert invariant_factors(M) == [2, 6, 12]

    def test_large_entries_exact(self):
        M = [[10**30, 0], [0, 6 * 10**30]]
        assert invariant_factors(M) == [10**30, 6 * 10**30]

    def test_empty(self):
        assert invariant_factors(np.zeros((0, 3), dtype=object)) == []


class TestUnimodular:
    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_inverse(self, n):
        rng = random.Random(n)
        for _ in range(10):
            U = random_unimodular(n, rng)
            assert abs(int_det(U)) == 1
            assert (U.dot(inverse_unimodular(U)) == np.eye(n, dtype=int).astype(object)).all()

    def test_bareiss_against_numpy(self):
        rng = np.random.default_rng(0)
        for _ in range(20):
            A = rng.integers(-5, 6, size=(4, 4))
            assert int_det(A.tolist()) == round(np.linalg.det(A))
