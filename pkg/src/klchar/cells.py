"""Two-sided cells of the affine Weyl group, truncated to a length ball.

The preorder is generated by single steps: ``x -> y`` whenever ``KL(y)``
occurs in ``KL(s) KL(x)`` or ``KL(x) KL(s)``.  Cells inside the ball are the
strongly connected components of that graph; a cell is flagged incomplete
when one of its members has an edge leaving the ball, since the true cell may
then be larger.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .characters import to_fundamental_domain
from .context import Context
from .errors import DatumError, GuardError, OutOfTruncationError
from .hecke import HeckeElt, _accumulate
from .rootdata import coxeter_number, is_dominant
from .weyl import ExtElt

# Nilpotent-orbit labels (partitions) for cells, keyed by datum descriptor and
# the reduced word of the cell's minimal member.  Only A1 ships: for SL2 the
# identity cell has T(0) = trivial module (support the whole nilpotent cone,
# regular orbit) and the other cell contains the Steinberg-type tiltings
# T(lam), lam >= p - 1, which are projective over G_1 (support {0}).
ORBIT_TABLES: dict[str, dict[tuple[int, ...], str]] = {
    "A1sc": {(): "[2]", (0,): "[1,1]"},
    "A1adj": {(): "[2]", (0,): "[1,1]"},
}

CONJECTURE_NOTE = "predicted support per the Humphreys conjecture (conjectural statement)"


@dataclass
class CellGraph:
    bound: int
    vertices: list[ExtElt]
    edges: dict[ExtElt, set[ExtElt]]
    witnesses: dict[tuple[ExtElt, ExtElt], tuple[str, int]]
    escapes: set[ExtElt] = field(default_factory=set)
    gens: tuple[int, ...] = ()


@dataclass
class CellPartition:
    bound: int
    cell_of: dict[ExtElt, int]
    members: list[list[ExtElt]]
    complete: list[bool]

    def cell_id(self, x: ExtElt) -> int:
        try:
            return self.cell_of[x]
        except KeyError:
            raise OutOfTruncationError(f"element lies outside the ball of radius {self.bound}") from None


def _to_basis(ctx: Context, h: HeckeElt, element) -> HeckeElt:
    G = ctx.group
    rest = dict(h)
    out: HeckeElt = {}
    while rest:
        top = max(rest, key=G.sort_key)
        c = rest[top]
        out[top] = c
        for z, g in element(top).items():
            _accumulate(rest, z, -(c * g))
    return out


def _products(ctx: Context, x: ExtElt, gens: Sequence[int], element) -> list[tuple[ExtElt, str, int]]:
    H = ctx.hecke
    out = []
    kx = element(x)
    for s in gens:
        for side, prod_ in (("left", H.left_mult_kl_gen(s, kx)), ("right", H.right_mult_kl_gen(kx, s))):
            for y in _to_basis(ctx, prod_, element):
                out.append((y, side, s))
    return out


def build_cell_graph(ctx: Context, bound: int, gens: str = "affine", provider=None, workers: int = 1) -> CellGraph:
    """Edge graph on the ball of radius ``bound`` (``gens`` is "affine" or "finite")."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    G = ctx.group
    gen_list = G.affine_gens if gens == "affine" else G.finite_gens
    element = provider.element if provider is not None else ctx.hecke.kl_element
    vertices = G.ball(bound, gen_list)
    inside = set(vertices)
    for x in vertices:
        element(x)  # warm the memo in length order
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda x: _products(ctx, x, gen_list, element), vertices))
    else:
        results = [_products(ctx, x, gen_list, element) for x in vertices]
    edges: dict[ExtElt, set[ExtElt]] = {x: set() for x in vertices}
    witnesses = {}
    escapes = set()
    for x, res in zip(vertices, results):
        for y, side, s in res:
            if y in inside:
                edges[x].add(y)
                witnesses.setdefault((x, y), (side, s))
            else:
                escapes.add(x)
    return CellGraph(bound, vertices, edges, witnesses, escapes, tuple(gen_list))


def verify_edge(ctx: Context, g: CellGraph, x: ExtElt, y: ExtElt) -> bool:
    side, s = g.witnesses[(x, y)]
    H = ctx.hecke
    kx = H.kl_element(x)
    prod_ = H.left_mult_kl_gen(s, kx) if side == "left" else H.right_mult_kl_gen(kx, s)
    return y in H.to_kl_basis(prod_)


def _sccs(vertices: list[ExtElt], edges: dict[ExtElt, set[ExtElt]]) -> list[list[ExtElt]]:
    """Tarjan's algorithm, iterative."""
    index: dict[ExtElt, int] = {}
    low: dict[ExtElt, int] = {}
    on_stack: set[ExtElt] = set()
    stack: list[ExtElt] = []
    comps = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(edges[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            nxt = next(it, None)
            if nxt is None:
                work.pop()
                if work:
                    low[work[-1][0]] = min(low[work[-1][0]], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        u = stack.pop()
                        on_stack.discard(u)
                        comp.append(u)
                        if u == v:
                            break
                    comps.append(comp)
            elif nxt not in index:
                index[nxt] = low[nxt] = counter
                counter += 1
                stack.append(nxt)
                on_stack.add(nxt)
                work.append((nxt, iter(edges[nxt])))
            elif nxt in on_stack:
                low[v] = min(low[v], index[nxt])
    return comps


def cell_partition(ctx: Context, g: CellGraph) -> CellPartition:
    G = ctx.group
    comps = [sorted(c, key=G.sort_key) for c in _sccs(g.vertices, g.edges)]
    comps.sort(key=lambda c: G.sort_key(c[0]))
    cell_of = {x: i for i, c in enumerate(comps) for x in c}
    complete = [not any(x in g.escapes for x in c) for c in comps]
    return CellPartition(g.bound, cell_of, comps, complete)


def extend_to_wext(ctx: Context, part: CellPartition, x: ExtElt) -> int:
    """Cell of ``x`` in W_ext: the cell of its affine part."""
    _, a = ctx.group.omega_decompose(x)
    return part.cell_id(a)


def cells_report(ctx: Context, part: CellPartition, warnings: list[str] | None = None) -> dict:
    G = ctx.group
    return {
        "bound": part.bound,
        "cells": [
            {"id": i, "members": [G.word_string(x) for x in m], "complete": c}
            for i, (m, c) in enumerate(zip(part.members, part.complete))
        ],
        "warnings": list(warnings or []),
    }


def w_lambda(ctx: Context, lam: Sequence[int]) -> ExtElt:
    """The minimal-length element of W t_lam W."""
    G = ctx.group
    W = G.finite_elements()
    t = G.translation(lam)
    cands = {G.multiply(G.multiply(u, t), v) for u, v in product(W, W)}
    return min(cands, key=G.sort_key)


@dataclass
class HumphreysReport:
    mode: str
    element: ExtElt
    cell: int
    complete: bool
    members: list[ExtElt]
    orbit: str | None
    note: str = CONJECTURE_NOTE


def humphreys_cell(ctx: Context, lam: Sequence[int], p: int, part: CellPartition, mode: str = "traditional") -> HumphreysReport:
    lam = tuple(lam)
    h = coxeter_number(ctx.rd)
    if p <= h:
        raise GuardError(f"the support predictor assumes p > h (p={p}, h={h})")
    if not is_dominant(ctx.rd, lam):
        raise DatumError(f"expected a dominant weight, got {lam}")
    G = ctx.group
    if mode == "traditional":
        bp, w = to_fundamental_domain(ctx, lam, p)
        x = G.multiply(w, G.longest_element(bp.J))
    elif mode == "relative":
        x = w_lambda(ctx, lam)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    cid = extend_to_wext(ctx, part, x)
    members = part.members[cid]
    table = ORBIT_TABLES.get(ctx.descriptor)
    orbit = None
    if table is not None:
        orbit = table.get(tuple(G.reduced_word(members[0])))
    return HumphreysReport(mode, x, cid, part.complete[cid], members, orbit)
