import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from symplectic_index import (
    BitVec,
    DimensionError,
    SympMatrix,
    direct_sum_embed,
    is_symplectic,
    mat_mul,
    mat_vec,
    symplectic_inner,
    symplectic_n3,
    sp_order,
)
from symplectic_index.transvect import Transvection

from conftest import dense, dense_vec, oracle_inner, oracle_is_symplectic, random_matrix, random_vec


@st.composite
def vec_pairs(draw, max_n=40):
    n = draw(st.integers(1, max_n))
    a = draw(st.integers(0, (1 << 2 * n) - 1))
    b = draw(st.integers(0, (1 << 2 * n) - 1))
    return BitVec(n, a), BitVec(n, b)


class TestBitVec:
    def test_basis_and_coords(self):
        e3 = BitVec.basis(2, 2)
        assert e3.to_list() == [0, 0, 1, 0]
        assert e3.bits == 4
        assert BitVec.from_list([0, 0, 1, 0]) == e3

    def test_padding_rejected(self):
        with pytest.raises(ValueError):
            BitVec(1, 0b100)
        with pytest.raises(ValueError):
            BitVec(0, 0)

    def test_add_is_xor(self):
        assert BitVec(2, 0b1010) + BitVec(2, 0b0110) == BitVec(2, 0b1100)
        with pytest.raises(DimensionError):
            BitVec(1, 1) + BitVec(2, 1)


class TestInner:
    def test_adjacent_basis_pair(self):
        assert symplectic_inner(BitVec.basis(1, 0), BitVec.basis(1, 1)) == 1

    def test_worked_example(self):
        v = BitVec.from_list([1, 1, 1, 0])
        w = BitVec.from_list([0, 1, 1, 1])
        assert oracle_inner(v, w) == 0
        assert symplectic_inner(v, w) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            symplectic_inner(BitVec(1, 1), BitVec(2, 1))

    @given(vec_pairs())
    def test_symmetric_and_alternating(self, pair):
        v, w = pair
        assert symplectic_inner(v, w) == symplectic_inner(w, v)
        assert symplectic_inner(v, v) == 0

    @given(vec_pairs(max_n=12))
    def test_matches_dense_form(self, pair):
        v, w = pair
        assert symplectic_inner(v, w) == oracle_inner(v, w)


class TestIsSymplectic:
    def test_identity(self, backend):
        assert is_symplectic(SympMatrix.identity(1))
        assert is_symplectic(SympMatrix.identity(7))

    def test_repeated_column(self, backend):
        assert not is_symplectic(SympMatrix(1, (1, 1)))

    def test_exhaustive_counts(self, backend, members):
        count1 = sum(is_symplectic(SympMatrix(1, (a, b))) for a in range(4) for b in range(4))
        assert count1 == len(members[1]) == 6
        count2 = 0
        for code in range(1 << 16):
            cols = tuple((code >> (4 * j)) & 15 for j in range(4))
            count2 += is_symplectic(SympMatrix(2, cols))
        assert count2 == len(members[2]) == 720

    def test_agrees_with_dense_oracle(self, backend):
        rnd = random.Random(5)
        for _ in range(300):
            n = rnd.randint(1, 4)
            S = random_matrix(rnd, n)
            assert is_symplectic(S) == oracle_is_symplectic(S)
        for _ in range(50):
            n = rnd.randint(1, 40)
            assert oracle_is_symplectic(symplectic_n3(n, rnd.randrange(sp_order(n))))


class TestMatrixOps:
    def test_mat_vec(self, backend):
        rnd = random.Random(11)
        assert mat_vec(SympMatrix.identity(3), BitVec(3, 0b101101)) == BitVec(3, 0b101101)
        S = random_matrix(rnd, 3)
        assert mat_vec(S, BitVec.basis(3, 0)) == S.column(0)
        for _ in range(200):
            S, v = random_matrix(rnd, 3), random_vec(rnd, 3)
            expect = dense(S) @ dense_vec(v) % 2
            assert mat_vec(S, v).to_list() == expect.tolist()

    def test_mat_mul_identity_and_involution(self, backend):
        rnd = random.Random(3)
        B = random_matrix(rnd, 3)
        assert mat_mul(SympMatrix.identity(3), B) == B
        A = Transvection(BitVec(3, 0b110101)).matrix()
        assert mat_mul(A, A) == SympMatrix.identity(3)

    def test_mat_mul_naive_oracle(self, backend):
        rnd = random.Random(7)
        for _ in range(1000):
            n = rnd.randint(1, 8)
            A, B = random_matrix(rnd, n), random_matrix(rnd, n)
            assert dense(mat_mul(A, B)).tolist() == (dense(A) @ dense(B) % 2).tolist()

    def test_closure(self, backend):
        rnd = random.Random(9)
        for _ in range(100):
            n = rnd.randint(1, 10)
            A = symplectic_n3(n, rnd.randrange(sp_order(n)))
            B = symplectic_n3(n, rnd.randrange(sp_order(n)))
            assert is_symplectic(mat_mul(A, B))

    def test_mat_mul_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            mat_mul(SympMatrix.identity(1), SympMatrix.identity(2))


class TestEmbed:
    def test_identity(self):
        assert direct_sum_embed(SympMatrix.identity(1)) == SympMatrix.identity(2)

    def test_block_placement(self):
        S = SympMatrix.from_columns([[1, 1], [0, 1]])
        E = direct_sum_embed(S)
        assert E.column(2).to_list() == [0, 0, 1, 1]
        expect = np.zeros((4, 4), dtype=np.int64)
        expect[:2, :2] = np.eye(2)
        expect[2:, 2:] = dense(S)
        assert dense(E).tolist() == expect.tolist()

    def test_preserves_membership(self, members):
        for cols in members[1]:
            assert is_symplectic(direct_sum_embed(SympMatrix(1, cols)))


def test_rows_round_trip():
    S = symplectic_n3(3, 123456)
    assert SympMatrix.from_rows(S.to_rows()) == S
    assert S.to_text().count("\n") == 5
