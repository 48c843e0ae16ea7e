import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefhom.abelian import (
    AbelianInvariants,
    IntMatrix,
    cokernel_invariants,
    groups_isomorphic,
    invariant_factors,
    smith_normal_form,
)
from lefhom.exceptions import InvalidInputError

from oracles import determinantal_invariant_factors
from strategies import int_matrices


def check_snf(m: IntMatrix):
    d, u, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(u.det()) == 1
    assert abs(v.det()) == 1
    assert d.is_diagonal()
    diag = d.diagonal()
    assert all(x >= 0 for x in diag)
    # zeros trail and each nonzero divides the next
    for a, b in zip(diag, diag[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0)
    return d


def test_intmatrix_basics():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m[1, 2] == 6
    assert m.column(1) == (2, 5)
    assert m.T.to_rows() == [[1, 4], [2, 5], [3, 6]]
    assert m.apply((1, 0, -1)) == (-2, -2)
    assert IntMatrix.from_columns([(1, 4), (2, 5), (3, 6)], 2) == m
    with pytest.raises(InvalidInputError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(InvalidInputError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_det_matches_leibniz():
    from oracles import leibniz_det

    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(0, 4)
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert IntMatrix.from_rows(rows, n).det() == leibniz_det(rows)


def test_big_integers_do_not_overflow():
    big = 10**40
    m = IntMatrix.from_rows([[big, big + 1], [big - 1, big]])
    assert m.det() == 1
    assert check_snf(m).diagonal() == (1, 1)


class TestSmithNormalForm:
    def test_empty_relations(self):
        m = IntMatrix.zeros(0, 4)
        d, u, v = smith_normal_form(m)
        assert d.shape == (0, 4)
        assert u == IntMatrix.identity(0)
        assert v == IntMatrix.identity(4)

    def test_identity(self):
        assert smith_normal_form(IntMatrix.identity(3))[0] == IntMatrix.identity(3)

    def test_two_by_two(self):
        # gcd of entries is 2 and |det| is 8
        m = IntMatrix.from_rows([[2, 4], [6, 8]])
        d = check_snf(m)
        assert d.diagonal() == (2, 4)
        assert determinantal_invariant_factors(m.to_rows(), 2) == (2, 4)

    def test_rectangular(self):
        m = IntMatrix.from_rows([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]])
        assert check_snf(m).diagonal() == (1, 10, 30, 0)

    def test_random_against_determinantal_divisors(self):
        rng = random.Random(20240611)
        for _ in range(1200):
            r, c = rng.randint(0, 4), rng.randint(0, 4)
            rows = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(r)]
            m = IntMatrix.from_rows(rows, c)
            check_snf(m)
            assert invariant_factors(m) == determinantal_invariant_factors(rows, c)

    @settings(max_examples=500)
    @given(int_matrices(max_rows=5, max_cols=5, lo=-9, hi=9))
    def test_postconditions(self, m):
        check_snf(m)


class TestCokernel:
    def test_no_relations(self):
        assert cokernel_invariants(IntMatrix.zeros(0, 4)) == AbelianInvariants(4)

    def test_cyclic(self):
        assert cokernel_invariants(IntMatrix.from_rows([[5]])) == AbelianInvariants(0, (5,))

    def test_w11_presentation_is_trivial(self):
        rows = [[-1, 1, 3, 0], [0, 1, 1, 0], [1, 1, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
        assert determinantal_invariant_factors(rows, 4) == (1, 1, 1, 1)
        assert cokernel_invariants(IntMatrix.from_rows(rows)).is_trivial

    def test_unit_factors_dropped(self):
        g = cokernel_invariants(IntMatrix.from_rows([[1, 0, 0], [0, 6, 0]]))
        assert g == AbelianInvariants(1, (6,))

    @settings(max_examples=500)
    @given(int_matrices(max_rows=5, max_cols=4, lo=-6, hi=6), st.randoms(use_true_random=False))
    def test_invariant_under_row_operations(self, m, rnd):
        base = cokernel_invariants(m)
        rows = m.to_rows()
        if not rows:
            return
        rnd.shuffle(rows)
        i = rnd.randrange(len(rows))
        rows[i] = [-x for x in rows[i]]
        j = rnd.randrange(len(rows))
        if j != i:
            rows[j] = [a + b for a, b in zip(rows[j], rows[i])]
        assert cokernel_invariants(IntMatrix.from_rows(rows, m.cols)) == base

    @settings(max_examples=300)
    @given(int_matrices(max_rows=4, max_cols=4, lo=-5, hi=5))
    def test_free_rank_is_corank(self, m):
        g = cokernel_invariants(m)
        rank = len(invariant_factors(m))
        assert g.free_rank == m.cols - rank


class TestInvariants:
    def test_validation(self):
        with pytest.raises(InvalidInputError):
            AbelianInvariants(0, (1,))
        with pytest.raises(InvalidInputError):
            AbelianInvariants(0, (2, 3))
        with pytest.raises(InvalidInputError):
            AbelianInvariants(-1)
        assert AbelianInvariants.trivial().is_trivial

    def test_isomorphism(self):
        assert groups_isomorphic(AbelianInvariants(1), AbelianInvariants(1))
        assert not groups_isomorphic(AbelianInvariants(0, (2,)), AbelianInvariants(0, (3,)))

    def test_json_round_trip(self):
        g = AbelianInvariants(2, (2, 6))
        assert g.to_json() == {"free_rank": 2, "torsion": [2, 6]}
        assert AbelianInvariants.from_json(g.to_json()) == g

    @pytest.mark.parametrize(
        "g, text",
        [(AbelianInvariants(0), "0"), (AbelianInvariants(1, (4,)), "Z + Z_4"), (AbelianInvariants(3), "Z^3")],
    )
    def test_str(self, g, text):
        assert str(g) == text
