import random

import pytest

from symplectic_index import BitVec, complete_symplectic_basis, gs_basic_step, is_symplectic, symplectic_inner

from conftest import oracle_inner, oracle_is_symplectic


def e(n, j):
    return BitVec.basis(n, j)


def rank_gf2(vectors):
    basis = []
    for x in vectors:
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
    return len(basis)


def assert_symplectic_basis(basis, v):
    n = v.n
    assert basis.n == n
    vs = [p[0] for p in basis.pairs]
    ws = [p[1] for p in basis.pairs]
    assert vs[0] == v
    for j in range(n):
        for k in range(n):
            assert oracle_inner(vs[j], ws[k]) == (j == k)
            assert oracle_inner(vs[j], vs[k]) == 0
            assert oracle_inner(ws[j], ws[k]) == 0
    assert rank_gf2([x.bits for x in basis.vectors()]) == 2 * n


class TestBasicStep:
    def test_no_partner(self):
        assert gs_basic_step([e(1, 0)], e(1, 0)) == (None, [])

    def test_standard_basis(self):
        omega = [e(2, j) for j in range(4)]
        w, rest = gs_basic_step(omega, e(2, 0))
        assert w == e(2, 1)
        assert rest == [e(2, 2), e(2, 3)]
        for f in rest:
            assert symplectic_inner(f, e(2, 0)) == symplectic_inner(f, e(2, 1)) == 0

    def test_zero_dropped(self):
        w, rest = gs_basic_step([e(1, 0), e(1, 1), e(1, 0) + e(1, 1)], e(1, 0))
        assert w == e(1, 1)
        assert rest == []

    def test_pivot_must_be_member(self):
        with pytest.raises(ValueError):
            gs_basic_step([e(1, 1)], e(1, 0))

    def test_random_sets(self):
        rnd = random.Random(8)
        for _ in range(300):
            n = rnd.randint(1, 6)
            omega = [BitVec(n, rnd.getrandbits(2 * n)) for _ in range(rnd.randint(1, 3 * n))]
            v = rnd.choice(omega)
            w, rest = gs_basic_step(omega, v)
            if w is None:
                assert all(oracle_inner(v, f) == 0 for f in omega)
                continue
            assert oracle_inner(v, w) == 1
            for f in rest:
                assert oracle_inner(v, f) == oracle_inner(w, f) == 0
            before = rank_gf2([f.bits for f in omega])
            assert rank_gf2([f.bits for f in rest] + [v.bits, w.bits]) == before
            span_all = rank_gf2([f.bits for f in omega] + [f.bits for f in rest])
            assert span_all == before
            assert len(rest) <= len(set(omega)) - 2


class TestComplete:
    def test_first_partner(self):
        basis = complete_symplectic_basis(e(2, 0))
        assert basis.pairs[0] == (e(2, 0), e(2, 1))

    def test_n1_sum(self):
        v = BitVec.from_list([1, 1])
        assert_symplectic_basis(complete_symplectic_basis(v), v)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            complete_symplectic_basis(BitVec(2, 0))

    @pytest.mark.parametrize("n", [1, 2])
    def test_exhaustive(self, n):
        for bits in range(1, 1 << 2 * n):
            v = BitVec(n, bits)
            basis = complete_symplectic_basis(v)
            assert_symplectic_basis(basis, v)
            assert is_symplectic(basis.matrix())

    def test_random(self):
        rnd = random.Random(12)
        for _ in range(100):
            n = rnd.randint(1, 8)
            v = BitVec(n, rnd.randrange(1, 1 << 2 * n))
            basis = complete_symplectic_basis(v)
            assert_symplectic_basis(basis, v)
            assert oracle_is_symplectic(basis.matrix())
