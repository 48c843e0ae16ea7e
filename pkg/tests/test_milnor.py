import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lefhom.abelian import IntMatrix
from lefhom.braid import BraidWord, concat, conjugate, inverse
from lefhom.exceptions import IndexRangeError, InvalidInputError, LatticeMismatchError, StrandMismatchError
from lefhom.milnor import (
    MilnorLattice,
    class_twist_apply,
    dehn_twist_matrix,
    epsilon,
    intersection,
    monodromy_of_classes,
    preserves_form,
    rho_matrix,
    transvection_matrix,
)

from oracles import mat_power
from strategies import braid_words


def lattice_and_word(max_m=5, max_len=8):
    @st.composite
    def build(draw):
        m = draw(st.integers(1, max_m))
        n = draw(st.sampled_from([2, 3]))
        return MilnorLattice(m, n), draw(braid_words(strands=m + 1, max_len=max_len))

    return build()


@st.composite
def classes(draw, lattice, lo=-4, hi=4):
    return lattice.vector(draw(st.lists(st.integers(lo, hi), min_size=lattice.m, max_size=lattice.m)))


class TestLattice:
    @pytest.mark.parametrize("n, s", [(2, 1), (3, -1), (4, 1), (5, -1)])
    def test_sign(self, n, s):
        assert MilnorLattice(4, n).sign == s
        assert (-1) ** epsilon(n) == (-1) ** n

    def test_sign_override(self):
        assert MilnorLattice(4, 2, -1).sign == -1
        with pytest.raises(InvalidInputError):
            MilnorLattice(4, 2, 0)
        with pytest.raises(InvalidInputError):
            MilnorLattice(4, 1)

    def test_form(self):
        assert MilnorLattice(3).form.to_rows() == [[0, 1, 0], [-1, 0, 1], [0, -1, 0]]

    def test_basis_range(self):
        with pytest.raises(IndexRangeError):
            MilnorLattice(3).basis(4)


class TestIntersection:
    def test_examples(self):
        lat = MilnorLattice(4)
        assert intersection(lat.basis(1), lat.basis(2)) == 1
        assert intersection(lat.basis(2), lat.basis(1)) == -1
        assert intersection(lat.basis(1), lat.basis(3)) == 0

    @settings(max_examples=200)
    @given(st.data())
    def test_alternating(self, data):
        lat = MilnorLattice(data.draw(st.integers(1, 6)))
        c = data.draw(classes(lat))
        d = data.draw(classes(lat))
        assert intersection(c, c) == 0
        assert intersection(c, d) == -intersection(d, c)
        omega = lat.form
        assert intersection(c, d) == sum(c.coords[i] * omega.apply(d.coords)[i] for i in range(lat.m))

    def test_mismatch(self):
        with pytest.raises(LatticeMismatchError):
            intersection(MilnorLattice(3).basis(1), MilnorLattice(4).basis(1))


class TestTwists:
    def test_orthogonal_unchanged(self):
        lat = MilnorLattice(4)
        assert class_twist_apply(lat.basis(1), lat.basis(3), 7) == lat.basis(1)

    def test_single_twist(self):
        lat = MilnorLattice(2, 2)
        # <e2, e1> = -1 so e2 -> e2 - e1
        assert class_twist_apply(lat.basis(2), lat.basis(1)).coords == (-1, 1)

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("k", [0, 1, 4])
    def test_b1_class(self, n, k):
        lat = MilnorLattice(4, n)
        s = lat.sign
        c = class_twist_apply(class_twist_apply(lat.basis(2), lat.basis(1)), lat.basis(3), k + 2)
        assert c.coords == (-s, 1, (k + 2) * s, 0)

    def test_matrix_example(self):
        lat = MilnorLattice(2, 2)
        assert dehn_twist_matrix(1, lat).to_rows() == [[1, -1], [0, 1]]

    @pytest.mark.parametrize("m", range(1, 7))
    @pytest.mark.parametrize("n", [2, 3])
    def test_matrix_shape(self, m, n):
        lat = MilnorLattice(m, n)
        s = lat.sign
        eye = IntMatrix.identity(m)
        for j in range(1, m + 1):
            t = dehn_twist_matrix(j, lat)
            expected = eye.to_rows()
            if j > 1:
                expected[j - 1][j - 2] = s
            if j < m:
                expected[j - 1][j] = -s
            assert t.to_rows() == expected
            nil = t - eye
            assert nil @ nil == IntMatrix.zeros(m, m)
            assert preserves_form(t, lat)
            assert t @ dehn_twist_matrix(j, lat, -1) == eye

    def test_index_range(self):
        with pytest.raises(IndexRangeError):
            dehn_twist_matrix(0, MilnorLattice(3))

    @settings(max_examples=300)
    @given(st.data())
    def test_power_matches_repeated_product(self, data):
        lat = MilnorLattice(data.draw(st.integers(1, 5)), data.draw(st.sampled_from([2, 3])))
        b = data.draw(classes(lat, -3, 3))
        c = data.draw(classes(lat))
        p = data.draw(st.integers(-10, 10))
        base = transvection_matrix(b, 1 if p >= 0 else -1).to_rows()
        oracle = mat_power(base, abs(p))
        expected = tuple(sum(oracle[i][j] * c.coords[j] for j in range(lat.m)) for i in range(lat.m))
        assert class_twist_apply(c, b, p).coords == expected


class TestRho:
    def test_empty_word(self):
        lat = MilnorLattice(3)
        assert rho_matrix(BraidWord(4, ()), lat) == IntMatrix.identity(3)

    def test_strand_mismatch(self):
        with pytest.raises(StrandMismatchError):
            rho_matrix(BraidWord(4, (1,)), MilnorLattice(4))

    @pytest.mark.parametrize("m", range(1, 7))
    @pytest.mark.parametrize("n", [2, 3])
    def test_braid_relations(self, m, n):
        lat = MilnorLattice(m, n)
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                if abs(i - j) == 1:
                    lhs, rhs = (i, j, i), (j, i, j)
                elif abs(i - j) >= 2:
                    lhs, rhs = (i, j), (j, i)
                else:
                    continue
                assert rho_matrix(BraidWord(m + 1, lhs), lat) == rho_matrix(BraidWord(m + 1, rhs), lat)

    def test_order_is_leftmost_first(self):
        lat = MilnorLattice(2)
        t1, t2 = dehn_twist_matrix(1, lat), dehn_twist_matrix(2, lat)
        assert rho_matrix(BraidWord(3, (1, 2)), lat) == t2 @ t1
        assert t2 @ t1 != t1 @ t2

    @settings(max_examples=500)
    @given(lattice_and_word())
    def test_symplectic_unimodular(self, lw):
        lat, word = lw
        mat = rho_matrix(word, lat)
        assert preserves_form(mat, lat)
        assert mat.det() == 1

    @settings(max_examples=300)
    @given(st.data())
    def test_anti_homomorphism(self, data):
        lat, u = data.draw(lattice_and_word())
        v = data.draw(braid_words(strands=lat.m + 1))
        assert rho_matrix(concat(u, v), lat) == rho_matrix(v, lat) @ rho_matrix(u, lat)
        assert rho_matrix(u, lat) @ rho_matrix(inverse(u), lat) == IntMatrix.identity(lat.m)

    @settings(max_examples=300)
    @given(st.data())
    def test_conjugation_identity(self, data):
        lat, gamma = data.draw(lattice_and_word(max_len=6))
        j = data.draw(st.integers(1, lat.m))
        phi = rho_matrix(gamma, lat)
        phi_inv = rho_matrix(inverse(gamma), lat)
        lhs = rho_matrix(conjugate(BraidWord(lat.m + 1, (j,)), gamma), lat)
        assert lhs == phi @ dehn_twist_matrix(j, lat) @ phi_inv
        assert lhs == transvection_matrix(lat.basis(j).transform(phi))

    @settings(max_examples=200)
    @given(lattice_and_word())
    def test_sign_equivariance(self, lw):
        lat, word = lw
        plus = MilnorLattice(lat.m, lat.n, 1)
        minus = MilnorLattice(lat.m, lat.n, -1)
        d = IntMatrix.from_rows([[(-1) ** i if i == j else 0 for j in range(lat.m)] for i in range(lat.m)])
        assert rho_matrix(word, minus) == d @ rho_matrix(word, plus) @ d


class TestMonodromyOfClasses:
    def test_single_cycle(self):
        lat = MilnorLattice(4, 3)
        for j in range(1, 5):
            assert monodromy_of_classes([lat.basis(j)]) == dehn_twist_matrix(j, lat)

    def test_empty(self):
        lat = MilnorLattice(3)
        assert monodromy_of_classes([], lat) == IntMatrix.identity(3)
        with pytest.raises(InvalidInputError):
            monodromy_of_classes([])

    def test_orthogonal_pair_commutes(self):
        lat = MilnorLattice(4)
        a, b = lat.basis(1), lat.basis(3) + lat.basis(4)
        assert intersection(a, b) == 0
        assert monodromy_of_classes([a, b]) == monodromy_of_classes([b, a])

    def test_first_cycle_applied_first(self):
        lat = MilnorLattice(3)
        a, b = lat.basis(1), lat.basis(2)
        assert monodromy_of_classes([a, b]) == transvection_matrix(b) @ transvection_matrix(a)

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("l", [1, 2, 5])
    def test_paper_monodromy(self, n, l):
        lat = MilnorLattice(4, n)
        s = lat.sign
        e = [lat.basis(j) for j in range(1, 5)]
        b1 = lat.vector((-s, 1, 2 * s, 0))
        b2 = e[1]
        b3 = lat.vector((s, 1, -2 * s, 0))
        mono = monodromy_of_classes([b1, b2, b3] + [e[1]] * l + [e[3]])
        assert mono.column(0) == (1, s * l, 0, 0)
        assert mono.column(1) == (3 * s, 9 * l + 1, -6 * s, -6)
        assert mono.column(2) == (0, -l * s, 1, s)
        assert mono.column(3) == (-2 * s, -6 * l, 4 * s, 5)

    def test_mismatch(self):
        with pytest.raises(LatticeMismatchError):
            monodromy_of_classes([MilnorLattice(3).basis(1)], MilnorLattice(3, 3))

