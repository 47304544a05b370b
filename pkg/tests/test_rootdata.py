import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klchar.errors import DatumError
from klchar.rootdata import (
    build_root_datum,
    coxeter_number,
    dominance_leq,
    height,
    inner_product,
    is_dominant,
    pairing,
    parse_descriptor,
    positive_roots,
    rho,
)
from oracles import positive_roots_closure


def test_a1_basics():
    rd = build_root_datum("A", 1)
    assert rd.x_rank == 1
    assert rd.simple_roots == ((2,),)
    assert pairing(rd.simple_roots[0], rd.simple_coroots[0]) == 2
    assert rho(rd) == (2,)


def test_cartan_matrices():
    assert build_root_datum("A", 2).cartan == ((2, -1), (-1, 2))
    assert build_root_datum("B", 2).cartan == ((2, -1), (-2, 2))
    assert build_root_datum("G", 2).cartan == ((2, -3), (-1, 2))


@pytest.mark.parametrize(
    "series,rank,count,h",
    [("A", 1, 1, 2), ("A", 2, 3, 3), ("B", 2, 4, 4), ("G", 2, 6, 6), ("C", 3, 9, 6), ("D", 4, 12, 6), ("F", 4, 24, 12), ("E", 6, 36, 12), ("E", 8, 120, 30)],
)
def test_root_counts_and_coxeter(series, rank, count, h):
    rd = build_root_datum(series, rank)
    assert len(positive_roots(rd)) == count
    assert len(positive_roots_closure(rd.cartan)) == count
    assert coxeter_number(rd) == h
    assert coxeter_number(rd) == 1 + max(sum(r) for r in positive_roots_closure(rd.cartan))


def test_a2_positive_roots():
    rd = build_root_datum("A", 2)
    roots = {r for r, _ in positive_roots(rd)}
    a1, a2 = rd.simple_roots
    assert roots == {a1, a2, tuple(x + y for x, y in zip(a1, a2))}


@pytest.mark.parametrize("bad", [("G", 3), ("A", 0), ("D", 3), ("E", 5), ("H", 3), ("B", 1)])
def test_invalid_series(bad):
    with pytest.raises(DatumError):
        build_root_datum(*bad)


def test_parse_descriptor():
    assert parse_descriptor("A2sc").descriptor == "A2sc"
    assert parse_descriptor("B2adj").lattice_flavor == "adjoint"
    assert parse_descriptor("G2").lattice_flavor == "simply_connected"
    with pytest.raises(DatumError):
        parse_descriptor("Q7")


def test_pairings():
    rd = build_root_datum("A", 2)
    assert pairing(rd.simple_roots[0], rd.simple_coroots[1]) == -1
    for co in rd.simple_coroots:
        assert pairing(rho(rd), co) == 2


@pytest.mark.parametrize("desc", ["A2sc", "B2sc", "G2sc", "B2adj", "C3sc"])
def test_rho_pairs_to_one_with_simple_coroots(desc):
    rd = parse_descriptor(desc)
    assert all(pairing(rho(rd), co) == 2 for co in rd.simple_coroots)


def test_dominance_examples():
    rd = build_root_datum("A", 1)
    assert dominance_leq(rd, (1,), (1,))
    assert dominance_leq(rd, (1,), (3,))
    assert not dominance_leq(rd, (0,), (1,))
    assert is_dominant(rd, (0,))
    assert not is_dominant(rd, (-1,))


@pytest.mark.parametrize("desc", ["A2sc", "B2sc", "G2sc"])
def test_dominance_is_a_partial_order(desc):
    rd = parse_descriptor(desc)
    rng = random.Random(7)
    pts = [tuple(rng.randint(-3, 3) for _ in range(2)) for _ in range(40)]
    for a in pts:
        assert dominance_leq(rd, a, a)
        for b in pts:
            if a != b and dominance_leq(rd, a, b):
                assert not dominance_leq(rd, b, a)
                for c in pts:
                    if dominance_leq(rd, b, c):
                        assert dominance_leq(rd, a, c)


def test_height_increases_along_roots():
    rd = build_root_datum("G", 2)
    for r, _ in positive_roots(rd):
        assert height(rd, r) > 0


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["A2sc", "B2sc", "G2sc", "C3sc"]), st.data())
def test_inner_product_is_w_invariant(desc, data):
    rd = parse_descriptor(desc)
    vec = st.lists(st.integers(-5, 5), min_size=rd.x_rank, max_size=rd.x_rank)
    a, b = data.draw(vec), data.draw(vec)
    for root, co in zip(rd.simple_roots, rd.simple_coroots):
        ra = [x - pairing(a, co) * y for x, y in zip(a, root)]
        rb = [x - pairing(b, co) * y for x, y in zip(b, root)]
        assert inner_product(rd, ra, rb) == inner_product(rd, a, b)


def test_short_roots_have_norm_two():
    rd = build_root_datum("B", 2)
    norms = sorted(inner_product(rd, r, r) for r in rd.simple_roots)
    assert norms == [2, 4]
