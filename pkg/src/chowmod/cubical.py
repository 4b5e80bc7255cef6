"""Cubical abelian groups, their chain complexes and integral homology.

A cubical group stores, for ``q = 0..N``, a free module ``Z^{rank(q)}`` with
face maps ``d_i^eps : A(q) -> A(q-1)`` and degeneracies
``pi_i : A(q-1) -> A(q)`` as integer matrices acting on column vectors.
The differential is ``d_q = sum_i (-1)^i (d_i^1 - d_i^0)``.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

import numpy as np

from .snf import (
    as_int_matrix,
    identity,
    inverse_unimodular,
    invariant_factors,
    random_unimodular,
    smith_normal_form,
    zeros,
)


class CubicalIdentityError(ValueError):
    """The structure maps violate a cubical identity."""


class ComplexError(ValueError):
    """Consecutive boundary maps do not compose to zero."""


def _eq(A, B) -> bool:
    return A.shape == B.shape and bool((A == B).all())


@dataclass
class CubicalGroup:
    """Finite-rank truncation of a cubical abelian group.

    ``faces[q][(i, eps)]`` has shape ``(rank[q-1], rank[q])`` and
    ``degeneracies[q][i]`` has shape ``(rank[q], rank[q-1])`` for
    ``1 <= i <= q``.  ``labels[q]`` optionally names the basis elements.
    """

    ranks: list[int]
    faces: dict = field(default_factory=dict)
    degeneracies: dict = field(default_factory=dict)
    labels: dict = field(default_factory=dict)

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def d(self, q, i, eps):
        return self.faces[q][(i, eps)]

    def pi(self, q, i):
        return self.degeneracies[q][i]

    # -- validation -------------------------------------------------------
    def identity_violations(self) -> list[str]:
        """Cubical identities checked as matrix equalities on the stored range."""
        bad = []
        for q in range(1, self.top + 1):
            I = identity(self.ranks[q - 1])
            for i in range(1, q + 1):
                for e in (0, 1):
                    if not _eq(self.d(q, i, e).dot(self.pi(q, i)), I):
                        bad.append(f"d_{i}^{e} pi_{i} != id in degree {q}")
        for q in range(2, self.top + 1):
            for i in range(1, q + 1):
                for j in range(i + 1, q + 1):
                    for e, f in itertools.product((0, 1), repeat=2):
                        lhs = self.d(q - 1, i, e).dot(self.d(q, j, f))
                        rhs = self.d(q - 1, j - 1, f).dot(self.d(q, i, e))
                        if not _eq(lhs, rhs):
                            bad.append(f"d_{i}^{e} d_{j}^{f} != d_{j-1}^{f} d_{i}^{e} in degree {q}")
            for i in range(1, q + 1):
                for j in range(1, q + 1):
                    for e in (0, 1):
                        if i == j:
                            continue
                        lhs = self.d(q, i, e).dot(self.pi(q, j))
                        if i < j:
                            rhs = self.pi(q - 1, j - 1).dot(self.d(q - 1, i, e))
                        else:
                            rhs = self.pi(q - 1, j).dot(self.d(q - 1, i - 1, e))
                        if not _eq(lhs, rhs):
                            bad.append(f"d_{i}^{e} pi_{j} mismatch in degree {q}")
            for i in range(1, q + 1):
                for j in range(i + 1, q + 1):
                    lhs = self.pi(q, j).dot(self.pi(q - 1, i))
                    rhs = self.pi(q, i).dot(self.pi(q - 1, j - 1))
                    if not _eq(lhs, rhs):
                        bad.append(f"pi_{j} pi_{i} != pi_{i} pi_{j-1} in degree {q}")
        return bad

    def check(self):
        bad = self.identity_violations()
        if bad:
            raise CubicalIdentityError("; ".join(bad[:5]))

    # -- change of basis --------------------------------------------------------
    def rebase(self, changes: list) -> "CubicalGroup":
        """Same cubical group in new bases: ``changes[q]`` maps new to old coordinates."""
        inv = [inverse_unimodular(C) if C.size else C for C in changes]
        faces = {
            q: {k: inv[q - 1].dot(M).dot(changes[q]) for k, M in fs.items()} for q, fs in self.faces.items()
        }
        degs = {
            q: {k: inv[q].dot(M).dot(changes[q - 1]) for k, M in ds.items()}
            for q, ds in self.degeneracies.items()
        }
        return CubicalGroup(list(self.ranks), faces, degs)


@dataclass
class ChainComplexOverZ:
    """``boundaries[q]`` is ``d_q : C_q -> C_{q-1}`` of shape ``(ranks[q-1], ranks[q])``."""

    ranks: list[int]
    boundaries: dict

    def boundary(self, q: int) -> np.ndarray:
        if q <= 0 or q >= len(self.ranks):
            rows = self.ranks[q - 1] if 0 < q <= len(self.ranks) else 0
            cols = self.ranks[q] if 0 <= q < len(self.ranks) else 0
            return zeros(rows, cols)
        return self.boundaries[q]

    def check(self):
        for q in range(2, len(self.ranks)):
            prod = self.boundary(q - 1).dot(self.boundary(q))
            if prod.size and (prod != 0).any():
                raise ComplexError(f"d_{q-1} d_{q} != 0")

    def to_json(self) -> dict:
        return {
            "degrees": [
                {"q": q, "rank": r, "boundary": [[int(x) for x in row] for row in self.boundary(q)] if q else []}
                for q, r in enumerate(self.ranks)
            ]
        }

    @classmethod
    def from_json(cls, data) -> "ChainComplexOverZ":
        if isinstance(data, str):
            data = json.loads(data)
        degrees = sorted(data["degrees"], key=lambda d: d["q"])
        if [d["q"] for d in degrees] != list(range(len(degrees))):
            raise ValueError("degrees must be 0, 1, ..., N")
        ranks = [int(d["rank"]) for d in degrees]
        bds = {}
        for d in degrees[1:]:
            q = d["q"]
            bds[q] = as_int_matrix(d["boundary"]).reshape((ranks[q - 1], ranks[q]))
        return cls(ranks, bds)


@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int
    torsion: tuple

    def order(self):
        """Cardinality, or ``None`` when infinite."""
        if self.free_rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def __add__(self, other: "HomologyGroup") -> "HomologyGroup":
        """Direct sum, normalised to invariant factors."""
        factors = list(self.torsion) + list(other.torsion)
        if not factors:
            return HomologyGroup(self.free_rank + other.free_rank, ())
        D = zeros(len(factors), len(factors))
        for i, f in enumerate(factors):
            D[i, i] = f
        return HomologyGroup(
            self.free_rank + other.free_rank, tuple(x for x in invariant_factors(D) if x > 1)
        )

    def format(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def alternating_differential(A: CubicalGroup, check: bool = True) -> ChainComplexOverZ:
    if check:
        A.check()
    bds = {}
    for q in range(1, A.top + 1):
        d = zeros(A.ranks[q - 1], A.ranks[q])
        for i in range(1, q + 1):
            sign = -1 if i % 2 else 1
            d = d + sign * (A.d(q, i, 1) - A.d(q, i, 0))
        bds[q] = d
    C = ChainComplexOverZ(list(A.ranks), bds)
    C.check()
    return C


def homology(C: ChainComplexOverZ, q: int) -> HomologyGroup:
    """``ker d_q / im d_{q+1}`` from the Smith forms of the two boundary maps."""
    if q > 0:
        C.check()
    n = C.ranks[q]
    rank_out = len(invariant_factors(C.boundary(q))) if q > 0 else 0
    inc = invariant_factors(C.boundary(q + 1))
    return HomologyGroup(n - rank_out - len(inc), tuple(x for x in inc if x > 1))


# -- reduced / degenerate splitting ------------------------------------------------

def reduced_projection(A: CubicalGroup, q: int) -> np.ndarray:
    """``P = (1 - pi_q d_q^0) ... (1 - pi_1 d_1^0)``, the projection onto ``A(q)_0``."""
    n = A.ranks[q]
    P = identity(n)
    for i in range(1, q + 1):
        P = (identity(n) - A.pi(q, i).dot(A.d(q, i, 0))).dot(P)
    return P


def split_degenerate(A: CubicalGroup, q: int):
    """``(P0, Pdegn)``: complementary projections onto ``A(q)_0`` and ``A(q)_degn``."""
    P0 = reduced_projection(A, q)
    return P0, identity(A.ranks[q]) - P0


def _image_basis(P: np.ndarray) -> np.ndarray:
    """Basis (columns) of the image of an integral idempotent, a direct summand."""
    n = P.shape[0]
    if n == 0 or P.shape[1] == 0:
        return zeros(n, 0)
    U, S, _ = smith_normal_form(P)
    r = sum(1 for i in range(min(S.shape)) if S[i, i] != 0)
    if any(S[i, i] != 1 for i in range(r)):
        raise CubicalIdentityError("projection image is not a direct summand")
    return inverse_unimodular(U)[:, :r]


def _coordinates(B: np.ndarray, X: np.ndarray) -> np.ndarray:
    """Solve ``B Y = X`` for ``B`` with unimodular completion (columns of a basis)."""
    n, r = B.shape
    if r == 0:
        return zeros(0, X.shape[1])
    U, S, V = smith_normal_form(B)
    # U B V = [I; 0] so B = U^{-1} [I; 0] V^{-1}; Y = V (U X)[:r]
    UX = U.dot(X)
    if UX.shape[0] > r and (UX[r:, :] != 0).any():
        raise CubicalIdentityError("subcomplex is not stable under the differential")
    return V.dot(UX[:r, :])


def subcomplex(C: ChainComplexOverZ, bases: list) -> ChainComplexOverZ:
    """Restriction of ``C`` to ``d``-stable submodules spanned by ``bases[q]`` columns."""
    ranks = [B.shape[1] for B in bases]
    bds = {}
    for q in range(1, len(ranks)):
        bds[q] = _coordinates(bases[q - 1], C.boundary(q).dot(bases[q])).reshape((ranks[q - 1], ranks[q]))
    return ChainComplexOverZ(ranks, bds)


@dataclass
class SplittingReport:
    ok: bool
    failures: list
    reduced: ChainComplexOverZ | None = None
    degenerate: ChainComplexOverZ | None = None


def verify_splitting(A: CubicalGroup) -> SplittingReport:
    """Idempotence, orthogonality, ranks and d-stability of both summands."""
    C = alternating_differential(A)
    failures = []
    proj = [split_degenerate(A, q) for q in range(A.top + 1)]
    for q, (P0, Pd) in enumerate(proj):
        n = A.ranks[q]
        if not _eq(P0.dot(P0), P0) or not _eq(Pd.dot(Pd), Pd):
            failures.append(f"projection not idempotent in degree {q}")
        if n and (P0.dot(Pd) != 0).any():
            failures.append(f"projections not orthogonal in degree {q}")
        for i in range(1, q + 1):
            if (A.d(q, i, 0).dot(P0) != 0).any():
                failures.append(f"image of P0 not in ker d_{i}^0 in degree {q}")
            if not _eq(Pd.dot(A.pi(q, i)), A.pi(q, i)):
                failures.append(f"Im pi_{i} not in the degenerate part in degree {q}")
        if q:
            d = C.boundary(q)
            P0p, Pdp = proj[q - 1]
            if not _eq(d.dot(P0), P0p.dot(d)) or not _eq(d.dot(Pd), Pdp.dot(d)):
                failures.append(f"projections do not commute with d in degree {q}")
    red_bases = [_image_basis(P0) for P0, _ in proj]
    deg_bases = [_image_basis(Pd) for _, Pd in proj]
    for q in range(A.top + 1):
        if red_bases[q].shape[1] + deg_bases[q].shape[1] != A.ranks[q]:
            failures.append(f"rank bookkeeping fails in degree {q}")
    if q == 0 and deg_bases[0].shape[1] != 0:
        failures.append("degree 0 has a degenerate part")
    if failures:
        return SplittingReport(False, failures)
    return SplittingReport(True, [], subcomplex(C, red_bases), subcomplex(C, deg_bases))


# -- concrete instances -------------------------------------------------------------

def _cube_points(q: int):
    return list(itertools.product((0, 1), repeat=q))


def _delta(i: int, eps: int, point: tuple) -> tuple:
    """The inclusion ``{0,1}^{q-1} -> {0,1}^q`` inserting ``eps`` at position ``i``."""
    return point[: i - 1] + (eps,) + point[i - 1:]


def _proj(i: int, point: tuple) -> tuple:
    return point[: i - 1] + point[i:]


def function_cubical_set(alphabet_size: int, top: int):
    """``X(q)`` = maps ``{0,1}^q -> S`` with ``X(f)(phi) = phi o f``.

    Elements are tuples of values indexed by the lexicographic list of cube
    points.  Returns ``(elements_by_degree, face, degeneracy)`` where ``face``
    and ``degeneracy`` act on elements.
    """
    pts = {q: _cube_points(q) for q in range(top + 1)}
    index = {q: {p: k for k, p in enumerate(pts[q])} for q in pts}
    S = range(alphabet_size)
    elems = {q: [tuple(v) for v in itertools.product(S, repeat=2**q)] for q in range(top + 1)}

    def face(q, i, eps, phi):
        return tuple(phi[index[q][_delta(i, eps, p)]] for p in pts[q - 1])

    def degeneracy(q, i, phi):
        return tuple(phi[index[q - 1][_proj(i, p)]] for p in pts[q])

    return elems, face, degeneracy


def cubical_group_from_set(elems: dict, face, degeneracy, top: int) -> CubicalGroup:
    """Free cubical abelian group on a cubical set given by its structure maps."""
    ranks = [len(elems[q]) for q in range(top + 1)]
    index = {q: {x: k for k, x in enumerate(elems[q])} for q in range(top + 1)}
    faces, degs = {}, {}
    for q in range(1, top + 1):
        faces[q] = {}
        for i in range(1, q + 1):
            for e in (0, 1):
                M = zeros(ranks[q - 1], ranks[q])
                for k, x in enumerate(elems[q]):
                    M[index[q - 1][face(q, i, e, x)], k] += 1
                faces[q][(i, e)] = M
        degs[q] = {}
        for i in range(1, q + 1):
            M = zeros(ranks[q], ranks[q - 1])
            for k, x in enumerate(elems[q - 1]):
                M[index[q][degeneracy(q, i, x)], k] += 1
            degs[q][i] = M
    return CubicalGroup(ranks, faces, degs, {q: list(elems[q]) for q in elems})


def saturate(generators: dict, face, degeneracy, top: int) -> dict:
    """Close a set of cubical-set elements under all faces and degeneracies up to ``top``."""
    elems = {q: set(generators.get(q, ())) for q in range(top + 1)}
    changed = True
    while changed:
        changed = False
        for q in range(top, 0, -1):
            for x in list(elems[q]):
                for i in range(1, q + 1):
                    for e in (0, 1):
                        y = face(q, i, e, x)
                        if y not in elems[q - 1]:
                            elems[q - 1].add(y)
                            changed = True
        for q in range(0, top):
            for x in list(elems[q]):
                for i in range(1, q + 2):
                    y = degeneracy(q + 1, i, x)
                    if y not in elems[q + 1]:
                        elems[q + 1].add(y)
                        changed = True
    return {q: sorted(elems[q]) for q in elems}


def random_instance(rng: random.Random, top: int = 3, alphabet_size: int = 2, max_gens: int = 3) -> CubicalGroup:
    """A saturated sub-cubical set of the function cubical set, randomly based."""
    full, face, degeneracy = function_cubical_set(alphabet_size, top)
    gens = {}
    for q in range(top + 1):
        pool = full[q]
        gens[q] = rng.sample(pool, min(len(pool), rng.randint(0, max_gens)))
    elems = saturate(gens, face, degeneracy, top)
    A = cubical_group_from_set(elems, face, degeneracy, top)
    changes = [random_unimodular(r, rng) for r in A.ranks]
    return A.rebase(changes)


def basis_change_complex(C: ChainComplexOverZ, rng: random.Random) -> ChainComplexOverZ:
    """``C`` rewritten in random unimodular bases of every chain group."""
    changes = [random_unimodular(r, rng) for r in C.ranks]
    inv = [inverse_unimodular(W) if W.size else W for W in changes]
    bds = {q: inv[q - 1].dot(C.boundary(q)).dot(changes[q]) for q in range(1, len(C.ranks))}
    return ChainComplexOverZ(list(C.ranks), bds)


def verify_instance(A: CubicalGroup, rng: random.Random) -> list[str]:
    """All engine checks on one cubical group; returns the list of failures."""
    try:
        C = alternating_differential(A)
    except (CubicalIdentityError, ComplexError) as exc:
        return [str(exc)]
    rep = verify_splitting(A)
    failures = list(rep.failures)
    B = basis_change_complex(C, rng)
    for q in range(len(C.ranks)):
        H = homology(C, q)
        if homology(B, q) != H:
            failures.append(f"homology changes under a basis change in degree {q}")
        if rep.ok and rep.reduced and homology(rep.reduced, q) + homology(rep.degenerate, q) != H:
            failures.append(f"H(full) != H(reduced) + H(degenerate) in degree {q}")
    return failures
