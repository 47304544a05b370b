"""Per-datum bundle of the group, Hecke algebra, antispherical module and caches."""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

from .antispherical import AntisphericalModule
from .cache import cache_load, cache_path, cache_store
from .hecke import HeckeAlgebra, KLProvider
from .rootdata import RootDatum, inner_product, parse_descriptor
from .weyl import WeylGroup


class Context:
    def __init__(self, rd: RootDatum | str):
        if isinstance(rd, str):
            rd = parse_descriptor(rd)
        self.rd = rd
        self.group = WeylGroup(rd)
        self.hecke = HeckeAlgebra(self.group)
        self.module = AntisphericalModule(self.hecke)
        self.kl_provider = KLProvider(self.hecke)
        n = rd.x_rank
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        self.gram: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(inner_product(rd, a, b) for b in basis) for a in basis
        )
        scale = math.lcm(*(x.denominator for row in self.gram for x in row))
        self.int_gram: tuple[tuple[int, ...], ...] = tuple(tuple(int(x * scale) for x in row) for row in self.gram)
        self.weyl_chars: dict = {}

    @property
    def descriptor(self) -> str:
        return self.rd.descriptor

    def form(self, a, b) -> Fraction:
        g = self.gram
        return sum((a[i] * b[j] * g[i][j] for i in range(len(a)) if a[i] for j in range(len(b)) if b[j]), Fraction(0))

    def load_cache(self, cache_dir: Path) -> int:
        """Merge persisted KL and antispherical entries into the memos; returns entries read."""
        kl = cache_load(cache_path(cache_dir, self.descriptor), self.group)
        asp = cache_load(cache_path(cache_dir, self.descriptor, "ASCACHE"), self.group, "ASCACHE")
        self.hecke.kl_memo.update(kl)
        self.module.canonical_memo.update(asp)
        return len(kl) + len(asp)

    def save_cache(self, cache_dir: Path) -> None:
        cache_store(cache_path(cache_dir, self.descriptor), self.group, self.hecke.kl_memo)
        cache_store(
            cache_path(cache_dir, self.descriptor, "ASCACHE"), self.group, self.module.canonical_memo, "ASCACHE"
        )
