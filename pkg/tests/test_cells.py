import pytest

from klchar.cells import (
    build_cell_graph,
    cell_partition,
    cells_report,
    extend_to_wext,
    humphreys_cell,
    verify_edge,
    w_lambda,
)
from klchar.errors import GuardError, OutOfTruncationError


def partition(c, L, gens="affine"):
    return cell_partition(c, build_cell_graph(c, L, gens))


def test_trivial_bound(ctx):
    c = ctx("A1sc")
    g = build_cell_graph(c, 0)
    assert g.vertices == [c.group.identity] and g.edges[c.group.identity] == set()
    assert partition(c, 0).members == [[c.group.identity]]


def test_a1_edges(ctx):
    c = ctx("A1sc")
    G = c.group
    g = build_cell_graph(c, 6)
    assert G.gens[0] in g.edges[G.identity]
    for x in g.vertices:
        if x != G.identity:
            assert G.identity not in g.edges[x]
    for (x, y) in g.witnesses:
        assert verify_edge(c, g, x, y)


@pytest.mark.parametrize("L", range(4, 11))
def test_a1_two_cells(ctx, L):
    c = ctx("A1sc")
    part = partition(c, L)
    assert [len(m) for m in part.members] == [1, 2 * L]
    assert part.complete == [True, False]


def test_finite_a2(ctx):
    c = ctx("A2sc")
    G = c.group
    part = partition(c, 3, "finite")
    assert [len(m) for m in part.members] == [1, 4, 1]
    assert part.members[2] == [G.longest_element(G.finite_gens)]
    assert all(part.complete)


@pytest.mark.parametrize("desc", ["A1sc", "A2sc"])
def test_complete_cells_are_stable(ctx, desc):
    c = ctx(desc)
    for L in range(0, 7):
        small, big = partition(c, L), partition(c, L + 2)
        for members, ok in zip(small.members, small.complete):
            if ok:
                cid = big.cell_id(members[0])
                assert set(big.members[cid]) & set(small.cell_of) == set(members)


@pytest.mark.parametrize("desc", ["A2sc", "B2sc"])
def test_identity_is_a_singleton(ctx, desc):
    c = ctx(desc)
    part = partition(c, 5)
    assert part.members[0] == [c.group.identity] and part.complete[0]


def test_extension_to_extended_group(ctx):
    c = ctx("A1sc")
    G = c.group
    part = partition(c, 6)
    om = [o for o in G.omega_group() if o != G.identity][0]
    assert extend_to_wext(c, part, om) == part.cell_id(G.identity)
    assert extend_to_wext(c, part, G.multiply(om, G.gens[0])) == part.cell_id(G.gens[0])
    assert extend_to_wext(c, part, G.multiply(G.gens[0], om)) == part.cell_id(G.gens[1])
    with pytest.raises(OutOfTruncationError):
        extend_to_wext(c, part, G.from_word([0, 1] * 5))


def test_humphreys(ctx):
    c = ctx("A1sc")
    G = c.group
    part = partition(c, 10)
    rep = humphreys_cell(c, (6,), 5, part)
    assert rep.element == G.gens[0] and rep.cell == 1 and rep.orbit == "[1,1]"
    assert humphreys_cell(c, (0,), 5, part).orbit == "[2]"
    rel = humphreys_cell(c, (0,), 5, part, mode="relative")
    assert rel.element == G.identity and rel.cell == 0
    assert "conjectur" in rel.note
    with pytest.raises(GuardError):
        humphreys_cell(c, (6,), 2, part)
    a2 = ctx("A2sc")
    rep = humphreys_cell(a2, (0, 0), 5, partition(a2, 4))
    assert rep.orbit is None and rep.cell == 0


def test_w_lambda(ctx):
    c = ctx("A2sc")
    G = c.group
    assert w_lambda(c, (0, 0)) == G.identity
    x = w_lambda(c, (1, 1))
    W = G.finite_elements()
    t = G.translation((1, 1))
    assert G.length(x) == min(G.length(G.multiply(G.multiply(u, t), v)) for u in W for v in W)


def test_report_shape(ctx):
    c = ctx("A1sc")
    rep = cells_report(c, partition(c, 2), ["w"])
    assert rep == {
        "bound": 2,
        "cells": [
            {"id": 0, "members": ["e"], "complete": True},
            {"id": 1, "members": ["s0", "s1", "s0s1", "s1s0"], "complete": False},
        ],
        "warnings": ["w"],
    }
