"""The affine Hecke algebra over Z[v, v^-1] and its Kazhdan-Lusztig basis.

Normalization: ``(H_s + v)(H_s - v^-1) = 0`` and ``KL(s) = H_s + v``, so that
``KL(w) = H_w + sum_{y < w} h_{y,w} H_y`` with ``h_{y,w}`` in ``v Z[v]``.

Elements are plain dicts ``{ExtElt: LaurentPoly}`` in the standard basis.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from typing import Mapping, Protocol

from .errors import IncompleteProviderError
from .laurent import ONE, V, V_INV, LaurentPoly
from .weyl import ExtElt, WeylGroup

HeckeElt = dict[ExtElt, LaurentPoly]

_V_MINUS_VINV = V - V_INV


def _accumulate(out: dict, key, value: LaurentPoly) -> None:
    cur = out.get(key)
    new = value if cur is None else cur + value
    if new:
        out[key] = new
    elif cur is not None:
        del out[key]


def scale(h: Mapping[ExtElt, LaurentPoly], c: LaurentPoly) -> HeckeElt:
    return {y: c * f for y, f in h.items() if c * f}


def add(h1: Mapping, h2: Mapping, sign: int = 1) -> dict:
    out = dict(h1)
    for y, f in h2.items():
        _accumulate(out, y, f if sign == 1 else -f)
    return out


class HeckeAlgebra:
    """Hecke algebra of the (extended) affine Weyl group of ``group``.

    KL elements are memoized in ``self.kl_memo``; the memo can be persisted
    with :mod:`klchar.cache`.
    """

    def __init__(self, group: WeylGroup):
        self.group = group
        self.kl_memo: dict[ExtElt, HeckeElt] = {group.identity: {group.identity: ONE}}
        self._bar_memo: dict[ExtElt, HeckeElt] = {}
        self._lock = threading.Lock()

    @property
    def descriptor(self) -> str:
        return self.group.rd.descriptor

    # -- standard basis ------------------------------------------------------

    def mult_right_gen(self, h: Mapping[ExtElt, LaurentPoly], s: int) -> HeckeElt:
        """h * H_s."""
        G = self.group
        out: HeckeElt = {}
        for w, c in h.items():
            ws = G.right_mult(w, s)
            _accumulate(out, ws, c)
            if G.length(ws) < G.length(w):
                _accumulate(out, w, c * (V_INV - V))
        return out

    def mult_left_gen(self, s: int, h: Mapping[ExtElt, LaurentPoly]) -> HeckeElt:
        """H_s * h."""
        G = self.group
        out: HeckeElt = {}
        for w, c in h.items():
            sw = G.left_mult(s, w)
            _accumulate(out, sw, c)
            if G.length(sw) < G.length(w):
                _accumulate(out, w, c * (V_INV - V))
        return out

    def _times_standard(self, h: Mapping[ExtElt, LaurentPoly], y: ExtElt) -> HeckeElt:
        G = self.group
        om, a = G.omega_decompose(y)
        out = {G.multiply(x, om): c for x, c in h.items()}
        for s in G.reduced_word(a):
            out = self.mult_right_gen(out, s)
        return out

    def multiply(self, h1: Mapping[ExtElt, LaurentPoly], h2: Mapping[ExtElt, LaurentPoly]) -> HeckeElt:
        out: HeckeElt = {}
        for y, c in h2.items():
            for x, f in self._times_standard(h1, y).items():
                _accumulate(out, x, f * c)
        return out

    def standard(self, w: ExtElt) -> HeckeElt:
        return {w: ONE}

    # -- bar involution ------------------------------------------------------

    def _bar_standard(self, y: ExtElt) -> HeckeElt:
        res = self._bar_memo.get(y)
        if res is None:
            G = self.group
            om, a = G.omega_decompose(y)
            res = {om: ONE}
            for s in G.reduced_word(a):
                res = add(self.mult_right_gen(res, s), scale(res, _V_MINUS_VINV))
            self._bar_memo[y] = res
        return res

    def bar_involution(self, h: Mapping[ExtElt, LaurentPoly]) -> HeckeElt:
        out: HeckeElt = {}
        for y, c in h.items():
            cb = c.bar()
            for x, f in self._bar_standard(y).items():
                _accumulate(out, x, f * cb)
        return out

    # -- Kazhdan-Lusztig basis -----------------------------------------------

    def left_mult_kl_gen(self, s: int, h: Mapping[ExtElt, LaurentPoly]) -> HeckeElt:
        """KL(s) * h with KL(s) = H_s + v."""
        G = self.group
        out: HeckeElt = {}
        for w, c in h.items():
            sw = G.left_mult(s, w)
            _accumulate(out, sw, c)
            _accumulate(out, w, c * (V if G.length(sw) > G.length(w) else V_INV))
        return out

    def right_mult_kl_gen(self, h: Mapping[ExtElt, LaurentPoly], s: int) -> HeckeElt:
        """h * KL(s)."""
        G = self.group
        out: HeckeElt = {}
        for w, c in h.items():
            ws = G.right_mult(w, s)
            _accumulate(out, ws, c)
            _accumulate(out, w, c * (V if G.length(ws) > G.length(w) else V_INV))
        return out

    def kl_element(self, w: ExtElt) -> HeckeElt:
        """KL(w) in the standard basis (memoized)."""
        res = self.kl_memo.get(w)
        if res is not None:
            return res
        G = self.group
        om, a = G.omega_decompose(w)
        if om != G.identity:
            res = {G.multiply(om, y): c for y, c in self.kl_element(a).items()}
        else:
            s = G.first_left_descent(w)
            res = self.left_mult_kl_gen(s, self.kl_element(G.left_mult(s, w)))
            res = self._straighten(res, w, self.kl_element)
        with self._lock:
            self.kl_memo.setdefault(w, res)
        return self.kl_memo[w]

    def _straighten(self, h: HeckeElt, top: ExtElt, basis) -> HeckeElt:
        """Subtract bar-invariant multiples of lower basis elements from the
        self-dual ``h`` until every coefficient below ``top`` lies in v Z[v]."""
        G = self.group
        by_len: dict[int, set] = defaultdict(set)
        for y in h:
            by_len[G.length(y)].add(y)
        for n in range(G.length(top) - 1, -1, -1):
            for y in list(by_len.get(n, ())):
                f = h.get(y)
                if not f or f.min_exp > 0:
                    continue
                c = f.self_dual_completion()
                for z, g in basis(y).items():
                    _accumulate(h, z, -(c * g))
                    by_len[G.length(z)].add(z)
        return h

    def kl_poly(self, y: ExtElt, w: ExtElt) -> LaurentPoly:
        return self.kl_element(w).get(y, LaurentPoly())

    def mu(self, y: ExtElt, w: ExtElt) -> int:
        return self.kl_poly(y, w)[1]

    def to_kl_basis(self, h: Mapping[ExtElt, LaurentPoly]) -> HeckeElt:
        """Coefficients of ``h`` in the KL basis (``h`` must be a finite combination)."""
        G = self.group
        rest = dict(h)
        out: HeckeElt = {}
        while rest:
            top = max(rest, key=lambda y: (G.length(y), G.serialize(y)))
            c = rest[top]
            out[top] = c
            for z, g in self.kl_element(top).items():
                _accumulate(rest, z, -(c * g))
        return out


class CanonicalBasisProvider(Protocol):
    """Source of a distinguished basis ``w -> {y: coefficient}`` of the Hecke algebra."""

    label: str

    def element(self, w: ExtElt) -> HeckeElt:
        ...


class KLProvider:
    """Default provider: the Kazhdan-Lusztig basis (the p-canonical basis for p >> 0)."""

    label = "KL (valid for p >> 0)"

    def __init__(self, hecke: HeckeAlgebra):
        self.hecke = hecke
        self.group = hecke.group

    def element(self, w: ExtElt) -> HeckeElt:
        return self.hecke.kl_element(w)


class TableProvider:
    """Provider backed by an externally supplied table (e.g. p-canonical data)."""

    def __init__(self, group: WeylGroup, entries: Mapping[ExtElt, HeckeElt], label: str):
        self.group = group
        self.entries = dict(entries)
        self.label = label

    def element(self, w: ExtElt) -> HeckeElt:
        try:
            return self.entries[w]
        except KeyError:
            raise IncompleteProviderError(
                f"canonical-basis table has no entry for {self.group.word_string(w)}"
            ) from None

    def validate(self) -> list[str]:
        """Unitriangularity and Bruhat-support defects, one message per problem."""
        return validate_basis_entries(self.group, self.entries)


def validate_basis_entries(group: WeylGroup, entries: Mapping[ExtElt, Mapping]) -> list[str]:
    problems = []
    for w, h in entries.items():
        name = group.serialize(w)
        if h.get(w) != ONE:
            problems.append(f"{name}: coefficient at w is {h.get(w, LaurentPoly())}, expected 1")
        for y in h:
            if y == w:
                continue
            try:
                ok = group.bruhat_leq(y, w) and y != w
            except Exception:
                ok = False
            if not ok:
                problems.append(f"{name}: support element {group.serialize(y)} is not below w in Bruhat order")
    return problems


def is_self_dual(hecke: HeckeAlgebra, h: Mapping[ExtElt, LaurentPoly]) -> bool:
    return hecke.bar_involution(h) == dict(h)
