"""Smith normal form of integer matrices with unimodular transforms.

Matrices are numpy object arrays of Python ints, so entries never overflow.
"""
from __future__ import annotations

import numpy as np


def as_int_matrix(M, shape=None) -> np.ndarray:
    A = np.array(M, dtype=object)
    if shape is not None:
        A = A.reshape(shape)
    if A.ndim != 2:
        A = A.reshape((A.shape[0] if A.ndim else 0, -1))
    return A


def identity(n: int) -> np.ndarray:
    I = np.zeros((n, n), dtype=object)
    for i in range(n):
        I[i, i] = 1
    return I


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=object)


def smith_normal_form(M):
    """Return ``(U, S, V)`` with ``U @ M @ V == S`` diagonal, ``s_1 | s_2 | ...``.

    Pivots are chosen with minimal absolute value to limit coefficient growth.
    """
    S = as_int_matrix(M).copy()
    m, n = S.shape
    U, V = identity(m), identity(n)
    t = 0
    while t < min(m, n):
        sub = S[t:, t:]
        nz = [(abs(sub[i, j]), i, j) for i in range(sub.shape[0]) for j in range(sub.shape[1]) if sub[i, j] != 0]
        if not nz:
            break
        _, i, j = min(nz)
        _swap_rows(S, U, t, t + i)
        _swap_cols(S, V, t, t + j)
        while True:
            done = True
            p = S[t, t]
            for i in range(t + 1, m):
                if S[i, t] != 0:
                    q = S[i, t] // p
                    S[i, :] -= q * S[t, :]
                    U[i, :] -= q * U[t, :]
                    if S[i, t] != 0:
                        done = False
            for j in range(t + 1, n):
                if S[t, j] != 0:
                    q = S[t, j] // p
                    S[:, j] -= q * S[:, t]
                    V[:, j] -= q * V[:, t]
                    if S[t, j] != 0:
                        done = False
            if not done:
                # a nonzero remainder is smaller than the pivot: move it in
                cands = [(abs(S[i, t]), i, t) for i in range(t + 1, m) if S[i, t] != 0]
                cands += [(abs(S[t, j]), t, j) for j in range(t + 1, n) if S[t, j] != 0]
                _, i, j = min(cands)
                if j == t:
                    _swap_rows(S, U, t, i)
                else:
                    _swap_cols(S, V, t, j)
                continue
            # divisibility: every remaining entry must be a multiple of the pivot
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if S[i, j] % p != 0),
                None,
            )
            if bad is None:
                break
            i, _ = bad
            S[t, :] += S[i, :]
            U[t, :] += U[i, :]
        if S[t, t] < 0:
            S[t, :] = -S[t, :]
            U[t, :] = -U[t, :]
        t += 1
    return U, S, V


def _swap_rows(S, U, a, b):
    if a != b:
        S[[a, b], :] = S[[b, a], :]
        U[[a, b], :] = U[[b, a], :]


def _swap_cols(S, V, a, b):
    if a != b:
        S[:, [a, b]] = S[:, [b, a]]
        V[:, [a, b]] = V[:, [b, a]]


def invariant_factors(M) -> list[int]:
    """Nonzero diagonal entries of the Smith form."""
    A = as_int_matrix(M)
    if A.size == 0:
        return []
    _, S, _ = smith_normal_form(A)
    return [int(S[i, i]) for i in range(min(S.shape)) if S[i, i] != 0]


def rank(M) -> int:
    return len(invariant_factors(M))


def int_det(M) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    A = [list(map(int, row)) for row in as_int_matrix(M)]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def inverse_unimodular(U) -> np.ndarray:
    """Exact inverse of a matrix with determinant +-1 (Gauss-Jordan over Z)."""
    A = as_int_matrix(U).copy()
    n = A.shape[0]
    inv = identity(n)
    for c in range(n):
        while True:
            rows = [r for r in range(c, n) if A[r, c] != 0]
            if not rows:
                raise ValueError("matrix is singular")
            piv = min(rows, key=lambda r: abs(A[r, c]))
            _swap_rows(A, inv, c, piv)
            clean = True
            for r in range(c + 1, n):
                if A[r, c] != 0:
                    q = A[r, c] // A[c, c]
                    A[r, :] -= q * A[c, :]
                    inv[r, :] -= q * inv[c, :]
                    if A[r, c] != 0:
                        clean = False
            if clean:
                break
        if abs(A[c, c]) != 1:
            raise ValueError("matrix is not unimodular")
    for c in range(n - 1, -1, -1):
        if A[c, c] == -1:
            A[c, :] = -A[c, :]
            inv[c, :] = -inv[c, :]
        for r in range(c):
            if A[r, c] != 0:
                q = A[r, c]
                A[r, :] -= q * A[c, :]
                inv[r, :] -= q * inv[c, :]
    return inv


def random_unimodular(n: int, rng, steps: int | None = None, bound: int = 2) -> np.ndarray:
    """Product of random elementary matrices and sign flips."""
    A = identity(n)
    if n == 0:
        return A
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            A[i, :] += rng.randint(-bound, bound) * A[j, :]
        elif rng.random() < 0.3:
            A[i, :] = -A[i, :]
    perm = list(range(n))
    rng.shuffle(perm)
    return A[perm, :]
