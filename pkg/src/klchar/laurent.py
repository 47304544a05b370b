"""Integer Laurent polynomials in one variable ``v``."""

from __future__ import annotations

import re
from typing import Iterator, Mapping

_TERM = re.compile(r"^(-?\d+)\^(-?\d+)$")


class LaurentPoly:
    """Finite-support map exponent -> nonzero integer coefficient.

    >>> v = LaurentPoly.v()
    >>> (v + v**-1) * v
    LaurentPoly('1 + v^2')
    >>> (v**3 - 2 * v).eval_at_one()
    -1
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c: dict[int, int] = {e: c for e, c in (coeffs or {}).items() if c}
        self._hash: int | None = None

    @classmethod
    def v(cls, exp: int = 1) -> LaurentPoly:
        return cls({exp: 1})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    # -- container protocol --------------------------------------------------

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def exponents(self) -> list[int]:
        return sorted(self._c)

    @property
    def min_exp(self) -> int:
        return min(self._c)

    @property
    def max_exp(self) -> int:
        return max(self._c)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return LaurentPoly.const(other) - self

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._c.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if len(self._c) == 1:
            (e, c), = self._c.items()
            if n < 0 and abs(c) != 1:
                raise ValueError("only monomials with unit coefficient are invertible")
            return LaurentPoly({e * n: c ** abs(n)})
        if n < 0:
            raise ValueError("only monomials are invertible")
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by v**k."""
        return LaurentPoly({e + k: c for e, c in self._c.items()})

    def bar(self) -> LaurentPoly:
        """The ring involution v -> v^{-1}."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    def positive_part(self) -> LaurentPoly:
        return LaurentPoly({e: c for e, c in self._c.items() if e > 0})

    def self_dual_completion(self) -> LaurentPoly:
        """The bar-invariant polynomial agreeing with ``self`` in degrees <= 0."""
        out = {}
        for e, c in self._c.items():
            if e <= 0:
                out[e] = c
                if e < 0:
                    out[-e] = c
        return LaurentPoly(out)

    # -- text forms ----------------------------------------------------------

    def serialize(self) -> str:
        """Comma-separated ``exp^coeff`` pairs sorted by exponent."""
        return ",".join(f"{e}^{c}" for e, c in self)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        out = {}
        for term in filter(None, text.strip().split(",")):
            m = _TERM.match(term.strip())
            if not m:
                raise ValueError(f"bad Laurent polynomial term {term!r}")
            e, c = int(m.group(1)), int(m.group(2))
            if e in out or c == 0:
                raise ValueError(f"non-normalized Laurent polynomial {text!r}")
            out[e] = c
        return cls(out)

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, c in self:
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if not mono:
                coeff = str(abs(c))
            else:
                coeff = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            parts.append((sign, coeff + mono))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.v()
V_INV = LaurentPoly.v(-1)
