import itertools

import pytest

from ringinv import geninv as gi
from ringinv import PreconditionError, linalg, make_ring
from ringinv.finite import tables


def test_inner_inverse_examples():
    Z6, Z4 = make_ring("zmod:6"), make_ring("zmod:4")
    assert [str(z) for z in gi.inner_inverses(Z6(3))] == ["1", "3", "5"]
    assert list(gi.inner_inverses(Z4(2))) == []
    for spec in ["zmod:6", "mat:2:z2", "mat:2:q"]:
        R = make_ring(spec)
        assert R.one in set(gi.inner_inverses(R.one))


def test_outer_inverse_examples():
    Z6 = make_ring("zmod:6")
    assert gi.is_outer_inverse(Z6(0), Z6(4))
    assert gi.is_outer_inverse(Z6(3), Z6(5))
    assert not gi.is_outer_inverse(Z6(2), Z6(1))


def test_group_inverse_examples():
    Z6 = make_ring("zmod:6")
    r = gi.group_inverse(Z6(2))
    assert r.inverse == Z6(2) and r.spectral_idempotent == Z6(3)
    Q = make_ring("mat:2:q")
    assert gi.group_inverse(Q("[[0,1],[0,0]]")) is None
    r = gi.group_inverse(Q.one)
    assert r.inverse == Q.one and r.spectral_idempotent.is_zero


def test_drazin_examples():
    Z4, Z6, Q = make_ring("zmod:4"), make_ring("zmod:6"), make_ring("mat:2:q")
    r = gi.drazin_inverse(Z4(2))
    assert (r.inverse, r.index) == (Z4(0), 2)
    r = gi.drazin_inverse(Q("[[0,1],[0,0]]"))
    assert r.inverse.is_zero and r.index == 2
    r = gi.drazin_inverse(Z6(5))
    assert (r.inverse, r.index, r.positive_index) == (Z6(5), 0, 1)


def test_drazin_rational_core_nilpotent():
    Q = make_ring("mat:3:q")
    a = Q("[[2,0,0],[0,0,1],[0,0,0]]")
    r = gi.drazin_inverse(a)
    assert r.inverse == Q("[[1/2,0,0],[0,0,0],[0,0,0]]")
    assert r.index == 2


def test_quasinilpotent_examples():
    Z4, Z6 = make_ring("zmod:4"), make_ring("zmod:6")
    assert gi.is_quasinilpotent(Z4(2))
    assert not gi.is_quasinilpotent(Z6(2))
    assert gi.is_quasinilpotent(Z6(0))


def test_gdrazin_examples():
    Z4, Z6 = make_ring("zmod:4"), make_ring("zmod:6")
    r = gi.generalized_drazin_inverse(Z4(2))
    assert (r.inverse, r.spectral_idempotent) == (Z4(0), Z4(1))
    r = gi.generalized_drazin_inverse(Z6(5))
    assert (r.inverse, r.spectral_idempotent) == (Z6(5), Z6(0))
    r = gi.generalized_drazin_inverse(Z6(1))
    assert (r.inverse, r.spectral_idempotent) == (Z6(1), Z6(0))


def test_mp_examples():
    Q, Z6 = make_ring("mat:2:q"), make_ring("zmod:6")
    a = Q("[[1,1],[0,0]]")
    assert gi.mp_inverse(a).inverse == Q("[[1/2,0],[1/2,0]]")
    assert gi.mp_inverse(Z6(2)).inverse == Z6(2)
    assert gi.mp_inverse(Q.zero).inverse == Q.zero
    assert gi.is_ep(Z6(2))
    assert not gi.is_ep(a)
    assert gi.is_ep(Q.one)


def test_mp_missing_over_z2():
    # [[1,1],[0,0]] has a a* = [[0,0],[0,0]] over Z_2, so no Moore-Penrose inverse
    M = make_ring("mat:2:z2")
    a = M("[[1,1],[0,0]]")
    assert gi.mp_inverse(a) is None
    with pytest.raises(PreconditionError):
        gi.is_ep(a)


def test_group_solver_matches_search(small_ring):
    t = tables(small_ring)
    for i, a in enumerate(t.elements):
        g = t.group_of(i)
        solved = gi.group_inverse_by_solving(a)
        assert (solved is None) == (g < 0)
        if solved is not None:
            assert t.idx(solved) == g
        via = gi.group_inverse_via_idempotent(a)
        assert via == solved


def test_drazin_matches_search(small_ring):
    t = tables(small_ring)
    for i, a in enumerate(t.elements):
        found = t.drazin_search(i)
        assert len(found) == 1
        r = gi.drazin_inverse(a)
        assert (t.idx(r.inverse), r.index) == found[0]
        gd = gi.generalized_drazin_inverse(a)
        assert gd.inverse == r.inverse and gd.spectral_idempotent == r.spectral_idempotent


def test_mp_formula_matches_search():
    for spec in ["mat:2:z2", "mat:2:z3", "zmod:12"]:
        t = tables(make_ring(spec))
        for i, a in enumerate(t.elements):
            assert t.mp[1][i] <= 1
            b = gi.mp_inverse_by_formula(a)
            if t.mp_of(i) < 0:
                assert b is None or not gi.is_mp_inverse(b, a)
            else:
                assert b == t.elt(t.mp_of(i))


def test_rational_mp_penrose_equations():
    Q = make_ring("mat:3:q")
    for entries in itertools.islice(itertools.product([0, 1, -2], repeat=9), 0, 19683, 97):
        a = Q([list(entries[0:3]), list(entries[3:6]), list(entries[6:9])])
        r = gi.mp_inverse(a)
        assert r is not None and gi.is_mp_inverse(r.inverse, a)


def test_rational_group_inverse_rank_condition():
    Q = make_ring("mat:2:q")
    for entries in itertools.product([0, 1, 2], repeat=4):
        a = Q([list(entries[:2]), list(entries[2:])])
        r = gi.group_inverse(a)
        rank1 = linalg.rank(Q.field, Q.matrix(a))
        rank2 = linalg.rank(Q.field, Q.matrix(a * a))
        assert (r is not None) == (rank1 == rank2)
