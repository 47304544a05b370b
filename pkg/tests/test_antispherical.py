import random

import pytest

from klchar.errors import DatumError
from klchar.laurent import ONE, V, V_INV


def test_action_rules(ctx):
    c = ctx("A1sc")
    M, G = c.module, c.group
    e, s0 = G.identity, G.gens[0]
    assert M.as_mult_gen({e: ONE}, 1) == {e: -V}
    assert M.as_mult_gen({e: ONE}, 0) == {s0: ONE}
    assert M.as_mult_gen({s0: ONE}, 0) == {e: ONE, s0: V_INV - V}


def test_canonical_examples(ctx):
    c = ctx("A1sc")
    M, G = c.module, c.group
    e, s0, s0s = G.identity, G.gens[0], G.from_word([0, 1])
    assert M.as_canonical(e) == {e: ONE}
    assert M.as_canonical(s0) == {s0: ONE, e: V}
    assert M.as_canonical(s0s) == {s0s: ONE, s0: V}
    assert M.antispherical_value(e, s0) == 1
    assert M.antispherical_poly(s0, s0).eval_at_one() == 1
    assert M.antispherical_poly(s0s, s0) == 0 * ONE


def test_rejects_non_minimal(ctx):
    c = ctx("A1sc")
    with pytest.raises(DatumError):
        c.module.as_canonical(c.group.gens[1])


@pytest.mark.parametrize("desc,bound", [("A1sc", 8), ("A2sc", 6), ("B2sc", 5), ("G2sc", 5)])
def test_two_paths_agree(ctx, desc, bound):
    c = ctx(desc)
    M, G = c.module, c.group
    reps = G.enumerate_min_reps([], bound)
    for w in reps:
        for y in reps:
            assert M.antispherical_poly(y, w).eval_at_one() == M.antispherical_value(y, w)


@pytest.mark.parametrize("desc", ["A1sc", "A2sc", "B2sc"])
def test_canonical_is_self_dual_with_degree_bounds(ctx, desc):
    c = ctx(desc)
    M, G = c.module, c.group
    for w in G.enumerate_min_reps([], 5):
        n = M.as_canonical(w)
        assert M.bar(n) == n
        for y, f in n.items():
            if y != w:
                assert f.min_exp > 0 and f.max_exp <= G.length(w) - G.length(y)


@pytest.mark.parametrize("desc", ["A1sc", "A2sc"])
def test_module_quadratic_relation(ctx, desc):
    c = ctx(desc)
    M, G = c.module, c.group
    for w in G.enumerate_min_reps([], 6):
        for s in G.affine_gens:
            n = {w: ONE}
            twice = M.as_mult_gen(M.as_mult_gen(n, s), s)
            # H_s^2 = 1 + (v^-1 - v) H_s
            expected = dict(n)
            for y, f in M.as_mult_gen(n, s).items():
                expected[y] = expected.get(y, 0 * ONE) + f * (V_INV - V)
            assert twice == {y: f for y, f in expected.items() if f}


def test_projection_intertwines_action(ctx):
    c = ctx("A2sc")
    M, G, H = c.module, c.group, c.hecke
    rng = random.Random(3)
    ball = G.ball(5)
    for x in rng.sample(ball, 25):
        for s in G.affine_gens:
            assert M.project(H.mult_right_gen({x: ONE}, s)) == M.as_mult_gen(M.project({x: ONE}), s)


def test_projection_of_kl_basis_is_canonical(ctx):
    c = ctx("B2sc")
    M, G, H = c.module, c.group, c.hecke
    for w in G.enumerate_min_reps([], 5):
        assert M.project(H.kl_element(w)) == M.as_canonical(w)
