import pytest
from hypothesis import given
from hypothesis import strategies as st

from klchar.laurent import ONE, V, V_INV, ZERO, LaurentPoly

polys = st.dictionaries(st.integers(-6, 6), st.integers(-50, 50), max_size=6).map(LaurentPoly)


def test_examples():
    assert V.bar() == V_INV
    assert (V + V_INV) * V == V**2 + 1
    assert (V**3 - 2 * V).eval_at_one() == -1
    assert str(ONE + V**2) == "1 + v^2"
    assert str(V**3) == "v^3"
    assert not ZERO


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, polys)
def test_bar_is_a_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one()


@given(polys)
def test_serialize_round_trip(a):
    assert LaurentPoly.parse(a.serialize()) == a
    assert hash(LaurentPoly.parse(a.serialize())) == hash(a)


@given(polys)
def test_self_dual_completion(a):
    # the completion differs from a by something in v Z[v] and is bar-invariant
    c = a.self_dual_completion()
    assert c.bar() == c
    assert all(e > 0 for e, _ in (a - c))


def test_big_integers():
    big = LaurentPoly({1: 10**40})
    assert (big * big)[2] == 10**80


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        LaurentPoly.parse("1^x")
