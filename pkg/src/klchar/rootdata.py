"""Root data of simple type, weight lattices and the pairing with coweights.

Conventions
-----------
Simple roots are numbered as in Bourbaki.  The Cartan matrix is stored with
``cartan[i][j] = <alpha_j, alpha_i^vee>``, so that for example

    B2: [[2, -1], [-2, 2]]   (alpha_1 long, alpha_2 short)
    G2: [[2, -3], [-1, 2]]   (alpha_1 short, alpha_2 long)

Weights are integer tuples in a fixed basis of X:

* ``sc`` (simply connected): the fundamental weights, so ``<lambda, alpha_i^vee>``
  is simply the i-th coordinate;
* ``adj`` (adjoint): the simple roots.

Coweights are integer tuples in the dual basis of Y, and the pairing is the
dot product.  The half-sum of positive roots is generally only in X/2, so
``rho`` returns 2*rho.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DatumError

Weight = tuple[int, ...]
Coweight = tuple[int, ...]

_DESCRIPTOR = re.compile(r"^([A-G])(\d+)(sc|adj)?$")
_FLAVORS = {"simply_connected": "sc", "adjoint": "adj", "sc": "sc", "adj": "adj"}


def _chain(n: int) -> list[list[int]]:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Cartan matrix of the given finite type, Bourbaki numbering."""
    n = rank
    if series == "A" and n >= 1:
        return _chain(n)
    if series == "B" and n >= 2:
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if series == "C" and n >= 2:
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if series == "D" and n >= 4:
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if series == "E" and n in (6, 7, 8):
        a = [[0] * n for _ in range(n)]
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        for i in range(n):
            a[i][i] = 2
        for i, j in edges:
            a[i][j] = a[j][i] = -1
        return a
    if series == "F" and n == 4:
        a = _chain(4)
        a[2][1] = -2
        return a
    if series == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    raise DatumError(f"no finite root system of type {series}{rank}")


def _is_positive_definite(sym: list[list[Fraction]]) -> bool:
    m = [row[:] for row in sym]
    n = len(m)
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


def _symmetrizer(cartan: list[list[int]]) -> list[Fraction]:
    """Half squared root lengths d_j, so that (alpha_i, alpha_j) = cartan[j][i] * d_j."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    # (alpha_j, alpha_i) = cartan[i][j] d_i = cartan[j][i] d_j
                    d[j] = cartan[i][j] * d[i] / cartan[j][i]
                    stack.append(j)
    scale = min(d)
    return [x / scale for x in d]


def _solve(matrix: list[list[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    """Solve matrix @ x = rhs over Q for square invertible ``matrix``."""
    n = len(matrix)
    m = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


@dataclass(frozen=True)
class RootDatum:
    series_label: str
    lattice_flavor: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Weight, ...]
    simple_coroots: tuple[Coweight, ...]
    x_rank: int

    @property
    def descriptor(self) -> str:
        return f"{self.series_label}{self.rank}{'sc' if self.lattice_flavor == 'simply_connected' else 'adj'}"

    def __str__(self) -> str:
        return self.descriptor

    def _root_matrix(self) -> list[list[int]]:
        # column i holds the coordinates of alpha_i
        return [[self.simple_roots[i][j] for i in range(self.rank)] for j in range(self.x_rank)]

    def root_coordinates(self, lam: Sequence[int]) -> list[Fraction]:
        """Coefficients of ``lam`` in the basis of simple roots (rational)."""
        self.check_weight(lam)
        sol = _solve(self._root_matrix(), lam)
        assert sol is not None
        return sol

    def in_root_lattice(self, lam: Sequence[int]) -> bool:
        return all(c.denominator == 1 for c in self.root_coordinates(lam))

    def check_weight(self, lam: Sequence[int]) -> None:
        if len(lam) != self.x_rank:
            raise DatumError(f"weight {tuple(lam)} has dimension {len(lam)}, expected {self.x_rank}")

    @cached_property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        return tuple(_symmetrizer([list(r) for r in self.cartan]))

    @cached_property
    def _positive(self) -> tuple[tuple[Weight, Coweight, tuple[int, ...]], ...]:
        n = self.rank
        a = self.cartan
        # simultaneous reflection orbit of (root, coroot) in simple-root / simple-coroot coordinates
        found: dict[tuple[int, ...], tuple[int, ...]] = {}
        frontier = []
        for i in range(n):
            e = tuple(int(j == i) for j in range(n))
            found[e] = e
            frontier.append(e)
        while frontier:
            nxt = []
            for c in frontier:
                d = found[c]
                for i in range(n):
                    k = sum(c[j] * a[i][j] for j in range(n))
                    c2 = tuple(c[j] - (k if j == i else 0) for j in range(n))
                    if all(x >= 0 for x in c2) and any(c2) and c2 not in found:
                        kd = sum(d[j] * a[j][i] for j in range(n))
                        found[c2] = tuple(d[j] - (kd if j == i else 0) for j in range(n))
                        nxt.append(c2)
            frontier = nxt
        out = []
        for c, d in found.items():
            root = tuple(sum(c[i] * self.simple_roots[i][k] for i in range(n)) for k in range(self.x_rank))
            coroot = tuple(sum(d[i] * self.simple_coroots[i][k] for i in range(n)) for k in range(self.x_rank))
            out.append((root, coroot, c))
        out.sort(key=lambda t: (sum(t[2]), tuple(-x for x in t[2])))
        return tuple(out)

    @cached_property
    def positive_root_set(self) -> frozenset[Weight]:
        return frozenset(r for r, _, _ in self._positive)

    @cached_property
    def highest_coroot_root(self) -> tuple[Weight, Coweight]:
        """The positive root whose coroot is the highest coroot."""
        simple_co = [list(c) for c in self.simple_coroots]

        def coheight(co):
            sol = _solve([[simple_co[i][k] for i in range(self.rank)] for k in range(self.x_rank)], co)
            return sum(sol)

        root, coroot, _ = max(self._positive, key=lambda t: coheight(t[1]))
        return root, coroot


def build_root_datum(series: str, rank: int, lattice_flavor: str = "simply_connected") -> RootDatum:
    """Construct the root datum of simple type ``series``/``rank``.

    >>> build_root_datum("A", 2).cartan
    ((2, -1), (-1, 2))
    """
    if lattice_flavor not in _FLAVORS:
        raise DatumError(f"unknown lattice flavor {lattice_flavor!r}")
    flavor = "simply_connected" if _FLAVORS[lattice_flavor] == "sc" else "adjoint"
    if rank < 1:
        raise DatumError("rank must be at least 1")
    a = cartan_matrix(series, rank)
    sym = _symmetrizer(a)
    form = [[Fraction(a[j][i]) * sym[j] for j in range(rank)] for i in range(rank)]
    if not _is_positive_definite(form):
        raise DatumError(f"{series}{rank}: Cartan matrix is not of finite type")
    eye = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    if flavor == "simply_connected":
        roots = tuple(tuple(a[j][i] for j in range(rank)) for i in range(rank))
        coroots = tuple(eye)
    else:
        roots = tuple(eye)
        coroots = tuple(tuple(a[j][i] for i in range(rank)) for j in range(rank))
    return RootDatum(
        series_label=series,
        lattice_flavor=flavor,
        rank=rank,
        cartan=tuple(tuple(r) for r in a),
        simple_roots=roots,
        simple_coroots=coroots,
        x_rank=rank,
    )


def parse_descriptor(text: str) -> RootDatum:
    """Parse a descriptor such as ``"A2sc"`` or ``"B3adj"``; a bare ``"G2"`` means simply connected."""
    m = _DESCRIPTOR.match(text.strip())
    if not m:
        raise DatumError(f"bad datum descriptor {text!r} (expected e.g. A2sc, B3adj)")
    series, rank, flavor = m.group(1), int(m.group(2)), m.group(3) or "sc"
    return build_root_datum(series, rank, flavor)


def positive_roots(rd: RootDatum) -> list[tuple[Weight, Coweight]]:
    """Positive roots with their coroots, ordered by height then lexicographically."""
    return [(r, c) for r, c, _ in rd._positive]


def pairing(lam: Sequence[int], coweight: Sequence[int]) -> int:
    if len(lam) != len(coweight):
        raise DatumError(f"cannot pair vectors of dimensions {len(lam)} and {len(coweight)}")
    return sum(x * y for x, y in zip(lam, coweight))


def dominance_leq(rd: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``mu - lam`` is a nonnegative integer combination of simple roots."""
    rd.check_weight(lam)
    rd.check_weight(mu)
    diff = [m - l for l, m in zip(lam, mu)]
    coeffs = rd.root_coordinates(diff)
    return all(c.denominator == 1 and c >= 0 for c in coeffs)


def is_dominant(rd: RootDatum, lam: Sequence[int]) -> bool:
    rd.check_weight(lam)
    return all(pairing(lam, co) >= 0 for co in rd.simple_coroots)


def rho(rd: RootDatum) -> Weight:
    """Twice the half-sum of positive roots, in X-coordinates."""
    return tuple(sum(r[k] for r, _ in positive_roots(rd)) for k in range(rd.x_rank))


def coxeter_number(rd: RootDatum) -> int:
    return 1 + max(sum(c) for _, _, c in rd._positive)


def height(rd: RootDatum, lam: Sequence[int]) -> int:
    """<lam, 2 rho^vee>: strictly increases along every positive root."""
    return sum(pairing(lam, co) for _, co in positive_roots(rd))


def halve(rd: RootDatum, doubled: Sequence[int]) -> Weight:
    if any(c % 2 for c in doubled):
        raise DatumError(f"doubled weight {tuple(doubled)} has odd coordinates")
    return tuple(c // 2 for c in doubled)


def inner_product(rd: RootDatum, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """A W-invariant rational inner product with (alpha, alpha) = 2 for short roots."""
    a = rd.root_coordinates(lam)
    b = rd.root_coordinates(mu)
    d = rd.symmetrizer
    total = Fraction(0)
    for i in range(rd.rank):
        if a[i] == 0:
            continue
        for j in range(rd.rank):
            if b[j]:
                total += a[i] * b[j] * rd.cartan[j][i] * d[j]
    return total
