"""The antispherical right module N = sgn (x)_{H_W} H_aff.

Basis ``N_w`` for ``w`` in W_aff^empty (minimal in ``W w``), right action

    N_w H_s = N_{ws}                          if ws > w, ws in W_aff^empty
            = N_{ws} + (v^-1 - v) N_w         if ws < w
            = -v N_w                          if ws not in W_aff^empty.

Equivalently ``H_{xw} -> (-v)^{l(x)} N_w`` (x in W) is a module map from the
regular representation, which is what makes the alternating sums of KL
polynomials agree with the canonical basis of ``N``.
"""

from __future__ import annotations

import threading
from typing import Mapping

from .errors import DatumError
from .hecke import HeckeAlgebra, _accumulate
from .laurent import ONE, V, V_INV, LaurentPoly
from .weyl import ExtElt

ASElt = dict[ExtElt, LaurentPoly]

_MINUS_V = -V


class AntisphericalModule:
    def __init__(self, hecke: HeckeAlgebra):
        self.hecke = hecke
        self.group = hecke.group
        self.canonical_memo: dict[ExtElt, ASElt] = {self.group.identity: {self.group.identity: ONE}}
        self._lock = threading.Lock()

    def _check(self, w: ExtElt) -> None:
        G = self.group
        if not G.is_min_in_Ww(w) or G.omega_decompose(w)[0] != G.identity:
            raise DatumError(f"{G.word_string(w)} is not in W_aff^empty")

    def as_mult_gen(self, n: Mapping[ExtElt, LaurentPoly], s: int) -> ASElt:
        """n * H_s."""
        G = self.group
        out: ASElt = {}
        for w, c in n.items():
            ws = G.right_mult(w, s)
            if not G.is_min_in_Ww(ws):
                _accumulate(out, w, c * _MINUS_V)
                continue
            _accumulate(out, ws, c)
            if G.length(ws) < G.length(w):
                _accumulate(out, w, c * (V_INV - V))
        return out

    def as_mult_kl_gen(self, n: Mapping[ExtElt, LaurentPoly], s: int) -> ASElt:
        """n * (H_s + v)."""
        G = self.group
        out: ASElt = {}
        for w, c in n.items():
            ws = G.right_mult(w, s)
            if not G.is_min_in_Ww(ws):
                continue
            _accumulate(out, ws, c)
            _accumulate(out, w, c * (V if G.length(ws) > G.length(w) else V_INV))
        return out

    def act(self, n: Mapping[ExtElt, LaurentPoly], h: Mapping[ExtElt, LaurentPoly]) -> ASElt:
        """n * h for a Hecke algebra element h in the standard basis (affine support)."""
        G = self.group
        out: ASElt = {}
        for y, c in h.items():
            term = dict(n)
            for s in G.reduced_word(y):
                term = self.as_mult_gen(term, s)
            for w, f in term.items():
                _accumulate(out, w, f * c)
        return out

    def bar(self, n: Mapping[ExtElt, LaurentPoly]) -> ASElt:
        """Bar involution, via bar(N_w) = N_e * bar(H_w)."""
        G = self.group
        out: ASElt = {}
        for w, c in n.items():
            term = {G.identity: ONE}
            for s in G.reduced_word(w):
                nxt = self.as_mult_gen(term, s)
                for y, f in term.items():
                    _accumulate(nxt, y, f * (V - V_INV))
                term = nxt
            cb = c.bar()
            for y, f in term.items():
                _accumulate(out, y, f * cb)
        return out

    def as_canonical(self, w: ExtElt) -> ASElt:
        """Canonical basis element: self-dual, N_w + sum_{y<w} n_{y,w} N_y, n in vZ[v]."""
        res = self.canonical_memo.get(w)
        if res is not None:
            return res
        self._check(w)
        G = self.group
        s = G.first_right_descent(w)
        res = self.as_mult_kl_gen(self.as_canonical(G.right_mult(w, s)), s)
        res = self.hecke._straighten(res, w, self.as_canonical)
        with self._lock:
            self.canonical_memo.setdefault(w, res)
        return self.canonical_memo[w]

    def antispherical_poly(self, y: ExtElt, w: ExtElt) -> LaurentPoly:
        return self.as_canonical(w).get(y, LaurentPoly())

    def antispherical_value(self, y: ExtElt, w: ExtElt) -> int:
        """sum over z in W of (-1)^l(z) h_{zy,w}(1), straight from the KL basis."""
        G = self.group
        h = self.hecke.kl_element(w)
        total = 0
        for z in G.finite_elements():
            c = h.get(G.multiply(z, y))
            if c:
                total += (-1) ** G.length(z) * c.eval_at_one()
        return total

    def project(self, h: Mapping[ExtElt, LaurentPoly]) -> ASElt:
        """Image of a Hecke element under H_{xw} -> (-v)^{l(x)} N_w."""
        G = self.group
        out: ASElt = {}
        for y, c in h.items():
            x = y
            k = 0
            while True:
                s = G.first_left_descent(x, G.finite_gens)
                if s is None:
                    break
                x = G.left_mult(s, x)
                k += 1
            _accumulate(out, x, c * (_MINUS_V ** k if k else ONE))
        return out
