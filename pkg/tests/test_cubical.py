import json
import random

import numpy as np
import pytest

from chowmod.cubical import (
    ChainComplexOverZ,
    ComplexError,
    CubicalIdentityError,
    HomologyGroup,
    alternating_differential,
    basis_change_complex,
    cubical_group_from_set,
    function_cubical_set,
    homology,
    random_instance,
    verify_instance,
    verify_splitting,
)


def complex_from(ranks, bds):
    return ChainComplexOverZ(ranks, {q: np.array(M, dtype=object).reshape(ranks[q - 1], ranks[q]) for q, M in bds.items()})


class TestHomology:
    def test_multiplication_by_two(self):
        C = complex_from([1, 1], {1: [[2]]})
        assert homology(C, 0) == HomologyGroup(0, (2,))
        assert homology(C, 1) == HomologyGroup(0, ())

    def test_exact_complex(self):
        C = complex_from([1, 1], {1: [[1]]})
        assert [homology(C, q).format() for q in range(2)] == ["0", "0"]

    def test_circle(self):
        # one vertex, one edge with zero boundary
        C = complex_from([1, 1], {1: [[0]]})
        assert homology(C, 1).format() == "Z"

    def test_mixed_torsion(self):
        C = complex_from([2, 2, 1], {1: [[0, 0], [0, 0]], 2: [[2], [4]]})
        assert homology(C, 1) == HomologyGroup(1, (2,))

    def test_d_squared_must_vanish(self):
        C = complex_from([1, 1, 1], {1: [[1]], 2: [[1]]})
        with pytest.raises(ComplexError):
            homology(C, 1)

    def test_json_roundtrip(self, tmp_path):
        C = complex_from([2, 3], {1: [[1, 0, -1], [-1, 0, 1]]})
        path = tmp_path / "c.json"
        path.write_text(json.dumps(C.to_json()))
        D = ChainComplexOverZ.from_json(path.read_text())
        assert D.ranks == C.ranks and (D.boundary(1) == C.boundary(1)).all()

    def test_direct_sum_normalises(self):
        assert (HomologyGroup(0, (2,)) + HomologyGroup(1, (3,))) == HomologyGroup(1, (6,))


class TestCubicalGroups:
    def test_point_has_degenerate_homology(self):
        full, face, deg = function_cubical_set(1, 3)
        A = cubical_group_from_set(full, face, deg, 3)
        C = alternating_differential(A)
        assert [homology(C, q).format() for q in range(4)] == ["Z"] * 4
        rep = verify_splitting(A)
        assert rep.ok
        assert [homology(rep.reduced, q).format() for q in range(4)] == ["Z", "0", "0", "0"]
        assert [homology(rep.degenerate, q).format() for q in range(4)] == ["0", "Z", "Z", "Z"]

    @pytest.mark.parametrize("size", [2, 3])
    def test_codiscrete_set_is_contractible_below_top(self, size):
        top = 2
        full, face, deg = function_cubical_set(size, top)
        rep = verify_splitting(cubical_group_from_set(full, face, deg, top))
        assert rep.ok
        assert [homology(rep.reduced, q).format() for q in range(top)] == ["Z", "0"]

    def test_broken_identity_detected(self):
        full, face, deg = function_cubical_set(2, 2)
        A = cubical_group_from_set(full, face, deg, 2)
        A.faces[2][(1, 0)] = 2 * A.faces[2][(1, 0)]
        with pytest.raises(CubicalIdentityError):
            alternating_differential(A)

    def test_random_instances(self):
        rng = random.Random(11)
        for _ in range(15):
            assert verify_instance(random_instance(rng), rng) == []

    def test_basis_change_preserves_homology(self):
        rng = random.Random(2)
        C = complex_from([3, 3, 1], {1: [[0, 0, 0], [0, 2, 0], [0, 0, 0]], 2: [[0], [0], [0]]})
        for _ in range(5):
            B = basis_change_complex(C, rng)
            assert [homology(B, q) for q in range(3)] == [homology(C, q) for q in range(3)]
