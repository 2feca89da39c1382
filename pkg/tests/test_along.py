import itertools

import pytest

from ringinv import along as al
from ringinv import ConsistencyError, NotEnumerableError, NotRegularError, PreconditionError, make_ring
from ringinv.finite import tables
from ringinv.ideals import left_ideal, right_ideal


@pytest.fixture
def Z6():
    return make_ring("zmod:6")


@pytest.fixture
def M2():
    return make_ring("mat:2:z2")


def test_is_inverse_along_examples(Z6):
    assert al.is_inverse_along(Z6(3), Z6(5), Z6(3))
    assert al.is_inverse_along(Z6(0), Z6(4), Z6(0))
    assert not al.is_inverse_along(Z6(2), Z6(5), Z6(3))


@pytest.mark.parametrize("route", al.ROUTES)
def test_routes_on_z6(Z6, route):
    assert al.inverse_along(Z6(5), Z6(3), route=route).inverse == Z6(3)
    assert al.inverse_along(Z6(2), Z6(3), route=route) is None
    assert al.inverse_along(Z6(1), Z6(1), route=route).inverse == Z6(1)


@pytest.mark.parametrize("route", al.ROUTES)
def test_routes_on_m2(M2, route):
    a, d = M2("[[1,1],[1,1]]"), M2("[[1,0],[0,0]]")
    assert al.inverse_along(a, d, route=route).inverse == M2("[[1,0],[0,0]]")


def test_corner_witnesses(Z6):
    r = al.inverse_along_corner(Z6(5), Z6(3), Z6(3))
    assert r.witnesses["x"] == Z6(3) and r.witnesses["y"] == Z6(3)


def test_unit_formula_example(Z6):
    r = al.inverse_along_unit_formula(Z6(5), Z6(3), Z6(3))
    assert r.witnesses["left_unit"] == Z6(1)
    assert al.inverse_along_unit_formula(Z6(2), Z6(3), Z6(3)) is None


def test_bad_inputs():
    Z4 = make_ring("zmod:4")
    with pytest.raises(NotRegularError):
        al.inverse_along_corner(Z4(1), Z4(2))
    Z6 = make_ring("zmod:6")
    with pytest.raises(PreconditionError):
        al.inverse_along_corner(Z6(1), Z6(3), Z6(2))
    with pytest.raises(PreconditionError):
        al.inverse_along(Z6(1), Z6(3), route="nope")
    with pytest.raises(NotEnumerableError):
        al.inverse_along_definitional(make_ring("mat:2:q").one, make_ring("mat:2:q").one)


def test_routes_agree_exhaustively(small_ring):
    t = tables(small_ring)
    for d in t.regular:
        D = t.elt(d)
        for a in range(t.n):
            A = t.elt(a)
            expect = al.inverse_along_definitional(A, D)
            for route in ("corner", "unit", "dxd"):
                got = al.inverse_along(A, D, route=route)
                assert (got is None) == (expect is None)
                if got is not None:
                    assert got.inverse == expect.inverse
            for db in t.inner[d][1:4]:
                got = al.inverse_along_corner(A, D, t.elt(db))
                assert (got is None) == (expect is None)
                assert got is None or got.inverse == expect.inverse


@pytest.mark.parametrize("spec", ["mat:2:q", "mat:3:q"])
def test_routes_agree_over_rationals(spec):
    Q = make_ring(spec)
    k = Q.k
    vals = [0, 1, -1, 2]
    cells = list(itertools.product(vals, repeat=k * k))
    picks = cells[:: max(1, len(cells) // 40)]

    def mat(c):
        return Q([list(c[i * k:(i + 1) * k]) for i in range(k)])

    for ca, cd in itertools.product(picks, picks[:12]):
        a, d = mat(ca), mat(cd)
        c = al.inverse_along(a, d, "corner")
        u = al.inverse_along(a, d, "unit")
        x = al.inverse_along(a, d, "dxd")
        assert (c is None) == (u is None) == (x is None)
        if c is not None:
            assert c.inverse == u.inverse == x.inverse
            assert al.is_inverse_along(c.inverse, a, d)


def test_rational_example_by_hand():
    Q = make_ring("mat:2:q")
    a, d = Q("[[2,3],[5,7]]"), Q("[[1,1],[1,1]]")
    b = al.inverse_along(a, d).inverse
    # dad = 17 d, so a||d = d / 17
    assert b == Q("[[1/17,1/17],[1/17,1/17]]")


def test_invertibles_along(Z6):
    assert al.invertibles_along(Z6(3)) == [Z6(1), Z6(3), Z6(5)]
    assert al.invertibles_along(Z6(1)) == [Z6(1), Z6(5)]
    assert al.invertibles_along(Z6(0)) == list(Z6.elements())


def test_set_decompositions(Z6, M2):
    assert al.along_set_decomposition(Z6(3), Z6(3), "idempotent") == [Z6(1), Z6(3), Z6(5)]
    assert al.along_set_decomposition(Z6(1), Z6(1), "left") == [Z6(1), Z6(5)]
    p = M2("[[1,0],[0,0]]")
    for side in ("left", "right", "idempotent"):
        assert al.along_set_decomposition(p, p, side) == al.invertibles_along(p)


def test_decompositions(Z6):
    r = al.decompose_along(Z6(5), Z6(3), Z6(3), "left")
    assert (r.s, r.t) == (Z6(3), Z6(2))
    r = al.decompose_along(Z6(3), Z6(3), Z6(3), "idempotent")
    assert (r.s, r.t) == (Z6(3), Z6(0))
    assert al.decompose_along(Z6(2), Z6(3), Z6(3), "left") is None


def test_equivalence_report(Z6):
    rep = al.check_equivalences(Z6(5), Z6(3), Z6(3))
    assert rep.value is True and all(rep.regular_block.values())
    rep = al.check_equivalences(Z6(5), Z6(0), Z6(3))
    assert rep.value is False and not any(rep.regular_block.values())
    with pytest.raises(PreconditionError):
        al.check_equivalences(Z6(1), Z6(2), Z6(3))


def test_reverse_order_law(Z6, M2):
    assert al.reverse_order_law_holds(Z6(3))
    assert al.reverse_order_law_holds(Z6(1))
    assert not al.reverse_order_law_holds(M2("[[0,1],[0,0]]"))


def test_reverse_order_law_fails_along_idempotent(M2):
    # d = diag(0,1) is idempotent, hence group invertible, yet the law fails
    p = M2("[[0,0],[0,1]]")
    a, b = al.reverse_order_law_counterexample(p)
    assert al.inverse_along_definitional(a, p) is not None
    assert al.inverse_along_definitional(b, p) is not None
    assert (a * b).is_zero
    assert al.inverse_along_definitional(a * b, p) is None


def test_reverse_order_law_forces_group_inverse(M2):
    from ringinv.geninv import group_inverse

    for d in M2.elements():
        if al.reverse_order_law_holds(d):
            assert group_inverse(d) is not None


def test_unit_translation(Z6, M2):
    assert al.translate_by_unit(Z6(5), Z6(3), Z6(5)).ok
    rep = al.translate_by_unit(M2("[[1,1],[1,1]]"), M2("[[1,0],[0,0]]"), M2("[[1,1],[0,1]]"))
    assert rep.ok
    with pytest.raises(PreconditionError):
        al.translate_by_unit(Z6(5), Z6(3), Z6(2))


def test_commuting(Z6, M2):
    assert al.is_commuting_along(Z6(5), Z6(3)).commuting
    rep = al.is_commuting_along(M2("[[1,1],[1,1]]"), M2("[[1,0],[0,0]]"))
    assert rep.consistent and not rep.commuting
    assert al.is_commuting_along(M2.one, M2.one).commuting


def test_inner_criteria(Z6):
    rep = al.inner_inverse_criteria(Z6(5), Z6(3))
    assert (rep.inner, rep.right_direct_sum, rep.left_direct_sum) == (False, False, False)
    rep = al.inner_inverse_criteria(Z6(3), Z6(3))
    assert rep.inner and rep.right_direct_sum and rep.left_direct_sum


def test_classical_from_inner(Z6):
    assert all(al.classical_from_inner(Z6(2), "group").values())
    assert all(al.classical_from_inner(Z6(2), "mp").values())
    assert all(al.classical_from_inner(Z6(1), "group").values())


def test_same_ideals_same_inverse(small_ring):
    t = tables(small_ring)
    for d1, d2 in itertools.combinations(t.regular, 2):
        D1, D2 = t.elt(d1), t.elt(d2)
        if right_ideal(D1) == right_ideal(D2) and left_ideal(D1) == left_ideal(D2):
            assert t.along_set(d1) == t.along_set(d2)
            assert all(t.along_of(a, d1) == t.along_of(a, d2) for a in range(t.n))


def test_uniqueness_asserted(small_ring):
    t = tables(small_ring)
    assert int(t.along[1].max()) <= 1


def test_inverse_along_satisfies_definition(small_ring):
    t = tables(small_ring)
    for a, d in itertools.product(range(t.n), repeat=2):
        b = t.along_of(a, d)
        if b >= 0:
            assert al.is_inverse_along(t.elt(b), t.elt(a), t.elt(d))
