"""Dense Gaussian elimination over an exact `Field` (matrices are lists of rows)."""
from __future__ import annotations

from .fields import Field


def row_reduce(field: Field, rows):
    """Reduced row echelon form; returns ``(rref_rows, pivot_columns)``."""
    F = field
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != F.zero), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != F.zero:
                f = M[i][c]
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(field: Field, rows) -> int:
    return len(row_reduce(field, rows)[1])


def nullspace(field: Field, rows, ncols: int | None = None):
    """Basis of ``{x : M x = 0}`` as a list of vectors."""
    F = field
    if ncols is None:
        ncols = len(rows[0])
    R, pivots = row_reduce(F, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [F.zero] * ncols
        v[fcol] = F.one
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[fcol])
        basis.append(v)
    return basis


def solve(field: Field, rows, rhs):
    """One solution of ``M x = rhs`` or ``None`` when inconsistent."""
    F = field
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = row_reduce(F, aug)
    if ncols in pivots:
        return None
    x = [F.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[-1]
    return x


def det(field: Field, rows):
    F = field
    M = [list(r) for r in rows]
    n = len(M)
    result = F.one
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != F.zero), None)
        if piv is None:
            return F.zero
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            result = F.neg(result)
        result = F.mul(result, M[c][c])
        inv = F.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c] != F.zero:
                f = F.mul(M[i][c], inv)
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[c])]
    return result


def sylvester_matrix(p, q):
    """Sylvester matrix of two polynomials (rows of field elements)."""
    F = p.field
    m, n = p.degree, q.degree
    size = m + n
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(n):
        rows.append([F.zero] * i + pc + [F.zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([F.zero] * i + qc + [F.zero] * (size - n - 1 - i))
    return rows


def sylvester_resultant(p, q):
    """Resultant as the Sylvester determinant; an independent check of `resultant`."""
    F = p.field
    if p.degree == 0 and q.degree == 0:
        return F.one
    return det(F, sylvester_matrix(p, q))
