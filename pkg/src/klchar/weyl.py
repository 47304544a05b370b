"""Finite, affine and extended affine Weyl groups.

An element of W_ext = W x| X is stored as ``ExtElt(fin, trans)`` representing
``w t_mu``: ``fin`` is the matrix of ``w`` acting on X-coordinates (row-major)
and ``trans`` is ``mu``.  It acts on weights at level ``p`` by

    (w t_mu) . lam = w(lam + p mu + rho) - rho.

Simple reflections are indexed by integers: ``1..r`` are the finite simple
reflections (Bourbaki numbering) and ``0`` is the affine one
``s_0 = t_theta s_theta``, theta being the root whose coroot is the highest
coroot.  All tie-breaking uses the smallest generator index.
"""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .errors import DatumError, NonFinitaryError
from .rootdata import RootDatum, Weight, halve, pairing, positive_roots, rho

Matrix = tuple[tuple[int, ...], ...]

_PARABOLIC_LIMIT = 200_000


class ExtElt(NamedTuple):
    fin: Matrix
    trans: Weight


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _matvec(a: Matrix, v: Sequence[int]) -> Weight:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in a)


def _matinv(a: Matrix) -> Matrix:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    out = tuple(tuple(m[i][n + j] for j in range(n)) for i in range(n))
    if any(x.denominator != 1 for row in out for x in row):
        raise DatumError("finite part is not invertible over the integers")
    return tuple(tuple(int(x) for x in row) for row in out)


class WeylGroup:
    """The extended affine Weyl group of a root datum, with W and W_aff inside it."""

    def __init__(self, rd: RootDatum):
        self.rd = rd
        n = rd.x_rank
        self.rank = rd.rank
        self.eye: Matrix = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.zero: Weight = (0,) * n
        self.identity = ExtElt(self.eye, self.zero)
        self._roots = positive_roots(rd)
        self._positive = rd.positive_root_set
        self.two_rho = rho(rd)
        theta, theta_co = rd.highest_coroot_root
        self.theta = theta
        gens = [self._affine_generator(theta, theta_co)]
        for a, co in zip(rd.simple_roots, rd.simple_coroots):
            gens.append(ExtElt(self._reflection(a, co), self.zero))
        self.gens: tuple[ExtElt, ...] = tuple(gens)
        self.gen_index = {g: i for i, g in enumerate(gens)}
        self.finite_gens = tuple(range(1, self.rank + 1))
        self.affine_gens = tuple(range(self.rank + 1))
        self._length: dict[ExtElt, int] = {}
        self._inv: dict[Matrix, Matrix] = {}
        self._bruhat: dict[tuple[ExtElt, ExtElt], bool] = {}
        self._parabolic: dict[frozenset, tuple[ExtElt, ...]] = {}
        self._lmul: dict[tuple[int, ExtElt], ExtElt] = {}
        self._rmul: dict[tuple[ExtElt, int], ExtElt] = {}

    def __repr__(self) -> str:
        return f"WeylGroup({self.rd.descriptor})"

    # -- construction --------------------------------------------------------

    def _reflection(self, root: Weight, coroot: Weight) -> Matrix:
        n = self.rd.x_rank
        return tuple(tuple(int(i == j) - root[i] * coroot[j] for j in range(n)) for i in range(n))

    def _affine_generator(self, theta: Weight, theta_co: Weight) -> ExtElt:
        # t_theta s_theta = s_theta t_{-theta}
        return ExtElt(self._reflection(theta, theta_co), tuple(-x for x in theta))

    def translation(self, mu: Sequence[int]) -> ExtElt:
        self.rd.check_weight(mu)
        return ExtElt(self.eye, tuple(mu))

    def from_word(self, word: Iterable[int]) -> ExtElt:
        x = self.identity
        for i in word:
            x = self.multiply(x, self.gens[i])
        return x

    # -- group law -----------------------------------------------------------

    def _finv(self, m: Matrix) -> Matrix:
        inv = self._inv.get(m)
        if inv is None:
            inv = self._inv[m] = _matinv(m)
        return inv

    def multiply(self, x: ExtElt, y: ExtElt) -> ExtElt:
        """(w t_mu)(w' t_mu') = ww' t_{w'^{-1}(mu) + mu'}."""
        if len(x.trans) != len(y.trans):
            raise DatumError("elements belong to different root data")
        shifted = _matvec(self._finv(y.fin), x.trans)
        return ExtElt(_matmul(x.fin, y.fin), tuple(a + b for a, b in zip(shifted, y.trans)))

    def inverse(self, x: ExtElt) -> ExtElt:
        return ExtElt(self._finv(x.fin), tuple(-c for c in _matvec(x.fin, x.trans)))

    def is_affine(self, x: ExtElt) -> bool:
        return self.rd.in_root_lattice(x.trans)

    # -- actions -------------------------------------------------------------

    def act(self, x: ExtElt, lam: Sequence[int], finite_part: bool = False) -> Weight:
        """Linear action of the finite part of ``x``.

        Elements with a translation part are rejected unless ``finite_part`` is set.
        """
        self.rd.check_weight(lam)
        if any(x.trans) and not finite_part:
            raise DatumError("act() needs a finite element; pass finite_part=True to drop the translation")
        return _matvec(x.fin, lam)

    def dot_act_doubled(self, x: ExtElt, lam2: Sequence[int], p: int) -> Weight:
        """Dot action on doubled coordinates: 2(x . lam) from 2 lam."""
        v = tuple(a + 2 * p * m + r for a, m, r in zip(lam2, x.trans, self.two_rho))
        return tuple(a - r for a, r in zip(_matvec(x.fin, v), self.two_rho))

    def dot_act(self, x: ExtElt, lam: Sequence[int], p: int) -> Weight:
        self.rd.check_weight(lam)
        return halve(self.rd, self.dot_act_doubled(x, [2 * c for c in lam], p))

    # -- length and descents -------------------------------------------------

    def length(self, x: ExtElt) -> int:
        """Iwahori-Matsumoto length: sum over alpha > 0 of |<mu, alpha^vee> + [w(alpha) < 0]|."""
        n = self._length.get(x)
        if n is None:
            n = 0
            for a, co in self._roots:
                k = pairing(x.trans, co)
                if _matvec(x.fin, a) not in self._positive:
                    k += 1
                n += abs(k)
            self._length[x] = n
        return n

    def left_mult(self, i: int, x: ExtElt) -> ExtElt:
        key = (i, x)
        y = self._lmul.get(key)
        if y is None:
            y = self._lmul[key] = self.multiply(self.gens[i], x)
        return y

    def right_mult(self, x: ExtElt, i: int) -> ExtElt:
        key = (x, i)
        y = self._rmul.get(key)
        if y is None:
            y = self._rmul[key] = self.multiply(x, self.gens[i])
        return y

    def descents(self, x: ExtElt, side: str = "left", gens: Iterable[int] | None = None) -> list[int]:
        """Generator indices s with l(sx) < l(x) (left) or l(xs) < l(x) (right)."""
        n = self.length(x)
        if gens is None:
            gens = self.affine_gens
        if side == "left":
            return [i for i in gens if self.length(self.left_mult(i, x)) < n]
        if side == "right":
            return [i for i in gens if self.length(self.right_mult(x, i)) < n]
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def first_left_descent(self, x: ExtElt, gens: Iterable[int] | None = None) -> int | None:
        n = self.length(x)
        for i in self.affine_gens if gens is None else gens:
            if self.length(self.left_mult(i, x)) < n:
                return i
        return None

    def first_right_descent(self, x: ExtElt, gens: Iterable[int] | None = None) -> int | None:
        n = self.length(x)
        for i in self.affine_gens if gens is None else gens:
            if self.length(self.right_mult(x, i)) < n:
                return i
        return None

    def reduced_word(self, x: ExtElt) -> list[int]:
        """Reduced word of an affine element, peeling the smallest left descent first."""
        word = []
        while self.length(x) > 0:
            i = self.first_left_descent(x)
            word.append(i)
            x = self.left_mult(i, x)
        if x != self.identity:
            raise DatumError("reduced_word() needs an affine element; use omega_decompose first")
        return word

    # -- Omega ---------------------------------------------------------------

    def omega_decompose(self, x: ExtElt) -> tuple[ExtElt, ExtElt]:
        """Split ``x = omega * a`` with l(omega) = 0 and ``a`` affine."""
        y = x
        while self.length(y) > 0:
            y = self.right_mult(y, self.first_right_descent(y))
        return y, self.multiply(self.inverse(y), x)

    def omega_group(self) -> list[ExtElt]:
        """Length-zero elements, one per class of X/ZPhi."""
        seen = [self.identity]
        queue = deque(seen)
        basis = [self.translation(v) for v in self.eye]
        while queue:
            w = queue.popleft()
            for t in basis:
                om, _ = self.omega_decompose(self.multiply(w, t))
                if om not in seen:
                    seen.append(om)
                    queue.append(om)
        seen.sort(key=self.sort_key)
        return seen

    # -- Bruhat order --------------------------------------------------------

    def bruhat_leq(self, y: ExtElt, x: ExtElt) -> bool:
        oy, ay = self.omega_decompose(y)
        ox, ax = self.omega_decompose(x)
        if oy != ox:
            raise DatumError("Bruhat order compares elements in the same W_aff-coset only")
        return self._bruhat_affine(ay, ax)

    def _bruhat_affine(self, y: ExtElt, x: ExtElt) -> bool:
        ly, lx = self.length(y), self.length(x)
        if ly > lx:
            return False
        if ly == lx:
            return y == x
        key = (y, x)
        res = self._bruhat.get(key)
        if res is None:
            s = self.first_left_descent(x)
            sy = self.left_mult(s, y)
            res = self._bruhat_affine(sy if self.length(sy) < ly else y, self.left_mult(s, x))
            self._bruhat[key] = res
        return res

    # -- parabolic subgroups and coset representatives -----------------------

    def parabolic_elements(self, J: Iterable[int]) -> tuple[ExtElt, ...]:
        """All elements of W_J, by closure; raises for non-finitary ``J``."""
        key = frozenset(J)
        if key in self._parabolic:
            return self._parabolic[key]
        if key >= set(self.affine_gens):
            # every proper subset of S_aff is finitary, S_aff itself never is
            raise NonFinitaryError(f"subset {sorted(key)} generates the whole affine Weyl group")
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for i in sorted(key):
                    y = self.right_mult(x, i)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            if len(seen) > _PARABOLIC_LIMIT:
                raise NonFinitaryError(f"subset {sorted(key)} does not generate a finite subgroup")
            frontier = nxt
        out = tuple(sorted(seen, key=self.sort_key))
        self._parabolic[key] = out
        return out

    def finite_elements(self) -> tuple[ExtElt, ...]:
        return self.parabolic_elements(self.finite_gens)

    def longest_element(self, J: Iterable[int]) -> ExtElt:
        return max(self.parabolic_elements(J), key=self.length)

    def wK_reps(self, K: Iterable[int], J: Iterable[int]) -> list[ExtElt]:
        """W_K^J: elements y of W_K that are minimal in y W_J (J a subset of K)."""
        K, J = set(K), set(J)
        if not J <= K:
            raise ValueError("wK_reps needs J to be a subset of K")
        return [y for y in self.parabolic_elements(K) if not self.descents(y, "right", J)]

    def is_min_in_Ww(self, x: ExtElt) -> bool:
        return self.first_left_descent(x, self.finite_gens) is None

    def is_strongly_minimal(self, x: ExtElt, J: Iterable[int], exhaustive: bool = False) -> bool:
        """l(u x y) = l(u) + l(x) + l(y) for all u in W, y in W_J.

        The fast path tests only u = w_o, y = w_J, which implies the general case.
        """
        J = frozenset(J)
        lx = self.length(x)
        if exhaustive:
            WJ = self.parabolic_elements(J)
            for u in self.finite_elements():
                ux = self.multiply(u, x)
                base = self.length(u) + lx
                for y in WJ:
                    if self.length(self.multiply(ux, y)) != base + self.length(y):
                        return False
            return True
        w0 = self.longest_element(self.finite_gens)
        wJ = self.longest_element(J)
        return self.length(self.multiply(self.multiply(w0, x), wJ)) == self.length(w0) + lx + self.length(wJ)

    def enumerate_min_reps(self, J: Iterable[int], bound: int) -> list[ExtElt]:
        """Elements of W_aff^J of length at most ``bound``, ordered by (length, reduced word)."""
        J = frozenset(J)
        self.parabolic_elements(J)
        level = [self.identity]
        found = [self.identity]
        for _ in range(bound):
            nxt = {}
            for x in level:
                for i in self.affine_gens:
                    y = self.right_mult(x, i)
                    if y not in nxt and self.length(y) > self.length(x) and self.is_min_in_Ww(y):
                        nxt[y] = None
            level = list(nxt)
            found.extend(level)
        return sorted((x for x in found if self.is_strongly_minimal(x, J)), key=self.sort_key)

    def ball(self, bound: int, gens: Sequence[int] | None = None) -> list[ExtElt]:
        """All elements of length at most ``bound`` in the subgroup generated by ``gens``."""
        gens = self.affine_gens if gens is None else tuple(gens)
        seen = {self.identity}
        level = [self.identity]
        for _ in range(bound):
            nxt = []
            for x in level:
                for i in gens:
                    y = self.right_mult(x, i)
                    if y not in seen and self.length(y) > self.length(x):
                        seen.add(y)
                        nxt.append(y)
            level = nxt
        return sorted(seen, key=self.sort_key)

    def sort_key(self, x: ExtElt) -> tuple:
        """(length, reduced word of the affine part, Omega part)."""
        om, a = self.omega_decompose(x)
        return (self.length(x), self.reduced_word(a), om.trans, om.fin)

    # -- serialization -------------------------------------------------------

    def serialize(self, x: ExtElt) -> str:
        cols = ",".join("(" + ",".join(str(x.fin[i][j]) for i in range(len(x.fin))) + ")" for j in range(len(x.fin)))
        return f"w=[{cols}];t=({','.join(map(str, x.trans))})"

    def parse(self, text: str) -> ExtElt:
        m = _ELT.fullmatch(text.strip())
        if not m:
            raise DatumError(f"cannot parse element {text!r}")
        cols = [tuple(int(c) for c in col.split(",")) for col in _COL.findall(m.group(1))]
        trans = tuple(int(c) for c in m.group(2).split(",")) if m.group(2) else ()
        n = self.rd.x_rank
        if len(cols) != n or any(len(c) != n for c in cols) or len(trans) != n:
            raise DatumError(f"element {text!r} has the wrong dimension for {self.rd.descriptor}")
        fin = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        return ExtElt(fin, trans)

    def word_string(self, x: ExtElt) -> str:
        om, a = self.omega_decompose(x)
        word = "".join(f"s{i}" for i in self.reduced_word(a)) or "e"
        if om != self.identity:
            word = f"omega[{','.join(map(str, om.trans))}]*" + word
        return word


_ELT = re.compile(r"w=\[((?:\(-?\d+(?:,-?\d+)*\),?)*)\];t=\((-?\d+(?:,-?\d+)*)?\)")
_COL = re.compile(r"\(([^)]*)\)")
