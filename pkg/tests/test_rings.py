import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringinv import NotEnumerableError, RingSpecError, make_ring


@pytest.mark.parametrize(
    "spec, size",
    [("zmod:6", 6), ("zmod:2", 2), ("mat:2:z2", 16), ("mat:1:z7", 7), ("mat:3:z2", 512)],
)
def test_finite_specs(spec, size):
    R = make_ring(spec)
    assert R.spec == spec
    assert R.cardinality == size
    assert len(list(R.elements())) == size


@pytest.mark.parametrize("spec", ["mat:2:zX", "zmod:1", "zmod:0", "mat:0:z2", "mat:2:z4", "ring:5", "zmod:-3", ""])
def test_malformed_specs(spec):
    with pytest.raises(RingSpecError):
        make_ring(spec)


def test_rationals_not_enumerable():
    R = make_ring("mat:2:q")
    assert not R.enumerable
    with pytest.raises(NotEnumerableError):
        list(R.elements())


def test_enumeration_cap():
    assert make_ring("mat:3:z3").enumerable
    assert not make_ring("mat:3:z3", cap=1000).enumerable


@pytest.mark.parametrize("spec, literal", [("zmod:6", "7"), ("zmod:6", "-1"), ("mat:2:z3", "[[4,-1],[0,2]]")])
def test_literals_reduce(spec, literal):
    R = make_ring(spec)
    x = R(literal)
    assert R(str(x)) == x


@pytest.mark.parametrize("spec, literal", [("zmod:6", "x"), ("mat:2:z2", "[[1,0]]"), ("mat:2:q", "[[1,0],[0,a]]")])
def test_bad_literals(spec, literal):
    with pytest.raises(RingSpecError):
        make_ring(spec)(literal)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=80, deadline=None)
@given(st.lists(rationals, min_size=4, max_size=4))
def test_rational_matrix_print_parse(entries):
    R = make_ring("mat:2:q")
    x = R([entries[:2], entries[2:]])
    assert R(str(x)) == x


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 50), st.integers(-1000, 1000))
def test_modular_print_parse(n, v):
    R = make_ring(f"zmod:{n}")
    assert R(str(R(v))) == R(v)
    assert R.index_of(R(v)) == v % n


@pytest.mark.parametrize("spec", [f"zmod:{n}" for n in range(2, 13)] + ["mat:2:z2"])
def test_ring_axioms_exhaustive(spec):
    R = make_ring(spec)
    els = list(R.elements())
    for x, y, z in itertools.product(els, repeat=3):
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z
    for x in els:
        assert x + R.zero == x and x * R.one == x == R.one * x
        assert x + (-x) == R.zero


@pytest.mark.parametrize("spec", ["zmod:12", "mat:2:z2", "mat:2:z3"])
def test_involution_axioms(spec):
    R = make_ring(spec)
    els = list(R.elements())
    for x in els:
        assert x.star().star() == x
    for x, y in itertools.product(els[:40], repeat=2):
        assert (x + y).star() == x.star() + y.star()
        assert (x * y).star() == y.star() * x.star()


def test_index_roundtrip():
    R = make_ring("mat:2:z3")
    for i in range(R.cardinality):
        assert R.index_of(R.element_at(i)) == i


def test_matrix_index_order():
    R = make_ring("mat:2:z2")
    assert str(R.element_at(0)) == "[[0,0],[0,0]]"
    assert str(R.element_at(1)) == "[[0,0],[0,1]]"
    assert str(R.element_at(8)) == "[[1,0],[0,0]]"


def test_int_coercion():
    R = make_ring("mat:2:q")
    x = R("[[1,2],[3,4]]")
    assert x - 1 == R("[[0,2],[3,3]]")
    assert 2 * x == x + x
    assert x ** 0 == R.one
