"""Characters, blocks of the dot-action, and the tilting/simple character formulas.

Induced-module characters are computed with Freudenthal's recursion.  Block
geometry follows the level-p dot action on X: every weight is ``x . base``
with ``base`` in the closed fundamental domain

    C = {lam : 0 <= <lam + rho, alpha^vee> <= p for all positive coroots}

and ``x`` the minimal element of ``x W_J``, where ``W_J`` is the stabilizer of
``base``.  Tilting multiplicities come from a canonical-basis provider via

    d^J_{y,w} = sum_{z in W} (-1)^{l(z)} h_{z y w_J, w w_J}(1),

and simple multiplicities in regular blocks from Lusztig's formula
``c_{y,w} = (-1)^{l(w)+l(y)} h_{w_o y, w_o w}(1)``, propagated to walls by
summing over ``W_K`` and to all weights by Steinberg's tensor product theorem.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .context import Context
from .errors import DatumError, GuardError, KLCharError, NonFinitaryError, ProviderError
from .hecke import CanonicalBasisProvider
from .rootdata import Weight, coxeter_number, height, is_dominant, pairing, positive_roots, _solve
from .weyl import ExtElt

VALIDITY_KL = "KL (valid for p >> 0)"


class SignedCharacter:
    """Finite-support map weight -> integer (a virtual character)."""

    def __init__(self, mults: Mapping[Weight, int] | None = None):
        self.mults: dict[Weight, int] = {tuple(k): v for k, v in (mults or {}).items() if v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SignedCharacter):
            return NotImplemented
        return self.mults == other.mults

    def __repr__(self) -> str:
        return f"{type(self).__name__}({dict(sorted(self.mults.items()))})"

    def __getitem__(self, lam: Weight) -> int:
        return self.mults.get(tuple(lam), 0)

    def __len__(self) -> int:
        return len(self.mults)

    def items(self):
        return sorted(self.mults.items(), reverse=True)

    def __add__(self, other: SignedCharacter) -> SignedCharacter:
        out = dict(self.mults)
        for k, v in other.mults.items():
            out[k] = out.get(k, 0) + v
        return _wrap(out)

    def __sub__(self, other: SignedCharacter) -> SignedCharacter:
        return self + other.scaled(-1)

    def scaled(self, c: int) -> SignedCharacter:
        return _wrap({k: c * v for k, v in self.mults.items()})

    def __mul__(self, other: SignedCharacter) -> SignedCharacter:
        out: dict[Weight, int] = defaultdict(int)
        for a, m in self.mults.items():
            for b, n in other.mults.items():
                out[tuple(x + y for x, y in zip(a, b))] += m * n
        return _wrap(out)

    def twist(self, p: int) -> SignedCharacter:
        """Frobenius twist: every weight multiplied by ``p``."""
        return _wrap({tuple(p * c for c in k): v for k, v in self.mults.items()})

    @property
    def dim(self) -> int:
        return sum(self.mults.values())

    def to_text(self) -> str:
        return "\n".join(f"({','.join(map(str, k))}): {v}" for k, v in sorted(self.mults.items())) + "\n"

    def to_json(self) -> list:
        return [[list(k), v] for k, v in sorted(self.mults.items())]


class Character(SignedCharacter):
    """Effective character: all multiplicities nonnegative."""

    def __init__(self, mults: Mapping[Weight, int] | None = None):
        super().__init__(mults)
        neg = [k for k, v in self.mults.items() if v < 0]
        if neg:
            raise ValueError(f"negative multiplicity at {neg[0]}")


def _wrap(mults: Mapping[Weight, int]) -> SignedCharacter:
    if all(v >= 0 for v in mults.values()):
        return Character(mults)
    return SignedCharacter(mults)


def char_add(a: SignedCharacter, b: SignedCharacter) -> SignedCharacter:
    return a + b


def char_mul(a: SignedCharacter, b: SignedCharacter) -> SignedCharacter:
    return a * b


def frobenius_twist(ch: SignedCharacter, p: int) -> SignedCharacter:
    return ch.twist(p)


# -- Weyl group orbits and Weyl characters -----------------------------------


def _reflect(ctx: Context, i: int, lam: Sequence[int]) -> Weight:
    k = pairing(lam, ctx.rd.simple_coroots[i])
    a = ctx.rd.simple_roots[i]
    return tuple(x - k * y for x, y in zip(lam, a))


def dominant_conjugate(ctx: Context, lam: Sequence[int]) -> Weight:
    lam = tuple(lam)
    while True:
        for i, co in enumerate(ctx.rd.simple_coroots):
            if pairing(lam, co) < 0:
                lam = _reflect(ctx, i, lam)
                break
        else:
            return lam


def w_orbit(ctx: Context, lam: Sequence[int]) -> list[Weight]:
    seen = {tuple(lam)}
    stack = [tuple(lam)]
    while stack:
        mu = stack.pop()
        for i in range(ctx.rd.rank):
            nu = _reflect(ctx, i, mu)
            if nu not in seen:
                seen.add(nu)
                stack.append(nu)
    return sorted(seen)


def is_w_invariant(ctx: Context, ch: SignedCharacter) -> bool:
    return all(ch[_reflect(ctx, i, lam)] == m for lam, m in ch.mults.items() for i in range(ctx.rd.rank))


def weyl_dimension(ctx: Context, lam: Sequence[int]) -> int:
    """Product over positive coroots of <lam + rho, a^vee> / <rho, a^vee>."""
    two_rho = ctx.group.two_rho
    num = den = 1
    for _, co in positive_roots(ctx.rd):
        num *= pairing([2 * x + r for x, r in zip(lam, two_rho)], co)
        den *= pairing(two_rho, co)
    dim = Fraction(num, den)
    assert dim.denominator == 1
    return int(dim)


def _dominant_weights_below(ctx: Context, lam: Weight) -> list[Weight]:
    roots = [r for r, _ in positive_roots(ctx.rd)]
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a in roots:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in seen and is_dominant(ctx.rd, nu):
                seen.add(nu)
                stack.append(nu)
    return sorted(seen, key=lambda m: (-height(ctx.rd, m), m))


def dominant_multiplicities(ctx: Context, lam: Sequence[int]) -> dict[Weight, int]:
    """Weight multiplicities of the induced module at dominant weights (Freudenthal).

    Works with the integer multiple ``ctx.int_gram`` of the form; the
    recursion only involves ratios, so the scale cancels.
    """
    lam = tuple(lam)
    gram = ctx.int_gram
    n = len(gram)
    roots = [r for r, _ in positive_roots(ctx.rd)]
    # nu -> (nu, a) as a dot product with a precomputed vector
    functionals = [(a, [sum(gram[i][j] * a[j] for j in range(n)) for i in range(n)]) for a in roots]
    two_rho = ctx.group.two_rho

    def norm_shift(mu):
        v = [2 * x + r for x, r in zip(mu, two_rho)]
        return sum(v[i] * gram[i][j] * v[j] for i in range(n) for j in range(n))

    conj: dict[Weight, Weight] = {}
    top = norm_shift(lam)
    mult: dict[Weight, int] = {}
    for mu in _dominant_weights_below(ctx, lam):
        if mu == lam:
            mult[mu] = 1
            continue
        acc = 0
        for a, g in functionals:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                d = conj.get(nu)
                if d is None:
                    d = conj[nu] = dominant_conjugate(ctx, nu)
                m = mult.get(d, 0)
                if not m:
                    break
                acc += m * sum(x * y for x, y in zip(nu, g))
                k += 1
        # 2 acc / (|lam+rho|^2 - |mu+rho|^2), with norms computed on doubled vectors
        value, rem = divmod(8 * acc, top - norm_shift(mu))
        assert rem == 0
        if value:
            mult[mu] = value
    return mult


def weyl_character(ctx: Context, lam: Sequence[int]) -> Character:
    """Character of the induced module N(lam) for dominant ``lam``."""
    lam = tuple(lam)
    ctx.rd.check_weight(lam)
    if not is_dominant(ctx.rd, lam):
        raise DatumError(f"weyl_character needs a dominant weight, got {lam}")
    ch = ctx.weyl_chars.get(lam)
    if ch is None:
        out = {}
        for mu, m in dominant_multiplicities(ctx, lam).items():
            for nu in w_orbit(ctx, mu):
                out[nu] = m
        ch = ctx.weyl_chars[lam] = Character(out)
    return ch


def euler_character(ctx: Context, lam: Sequence[int]) -> SignedCharacter:
    """Weyl's character for an arbitrary weight: 0 on dot-walls, else signed Weyl character."""
    rho2 = ctx.group.two_rho
    v = tuple(2 * x + r for x, r in zip(lam, rho2))
    sign = 1
    while True:
        for i, co in enumerate(ctx.rd.simple_coroots):
            k = pairing(v, co)
            if k == 0:
                return SignedCharacter()
            if k < 0:
                v = _reflect(ctx, i, v)
                sign = -sign
                break
        else:
            break
    dom = tuple((x - r) // 2 for x, r in zip(v, rho2))
    return weyl_character(ctx, dom).scaled(sign)


def decompose_into_induced(ctx: Context, ch: SignedCharacter) -> dict[Weight, int]:
    """Coefficients of ``ch`` in the basis of induced-module characters."""
    if not is_w_invariant(ctx, ch):
        raise DatumError("decompose_into_induced needs a W-invariant character")
    rest = dict(ch.mults)
    out: dict[Weight, int] = {}
    while rest:
        top = max(rest, key=lambda m: (height(ctx.rd, m), m))
        c = rest[top]
        out[top] = c
        for mu, m in weyl_character(ctx, top).mults.items():
            v = rest.get(mu, 0) - c * m
            if v:
                rest[mu] = v
            else:
                rest.pop(mu, None)
    return dict(sorted(out.items(), key=lambda kv: (-height(ctx.rd, kv[0]), kv[0])))


def character_from_expansion(ctx: Context, expansion: Mapping[Weight, int]) -> SignedCharacter:
    total = SignedCharacter()
    for lam, c in expansion.items():
        total = total + weyl_character(ctx, lam).scaled(c)
    return total


# -- blocks ------------------------------------------------------------------


@dataclass(frozen=True)
class BlockPoint:
    base: Weight
    J: frozenset[int]
    p: int


@dataclass
class MultiplicityRow:
    w: ExtElt
    entries: dict[ExtElt, int] = field(default_factory=dict)
    J: frozenset[int] = frozenset()
    kind: str = "tilting"


def _theta_coroot(ctx: Context):
    return ctx.rd.highest_coroot_root[1]


def in_fundamental_domain(ctx: Context, lam: Sequence[int], p: int) -> bool:
    v = [2 * x + r for x, r in zip(lam, ctx.group.two_rho)]
    return all(0 <= pairing(v, co) <= 2 * p for _, co in positive_roots(ctx.rd))


def stabilizer_J(ctx: Context, base: Sequence[int], p: int) -> frozenset[int]:
    G = ctx.group
    return frozenset(i for i in G.affine_gens if G.dot_act(G.gens[i], base, p) == tuple(base))


def to_fundamental_domain(ctx: Context, lam: Sequence[int], p: int) -> tuple[BlockPoint, ExtElt]:
    """(BlockPoint, x) with x . base = lam and x minimal in x W_J."""
    if p < 2:
        raise DatumError("p must be at least 2")
    G = ctx.group
    lam = tuple(lam)
    ctx.rd.check_weight(lam)
    theta_co = _theta_coroot(ctx)
    nu2 = tuple(2 * c for c in lam)
    word = []
    while True:
        shifted = [a + r for a, r in zip(nu2, G.two_rho)]
        i = next((i for i, co in enumerate(ctx.rd.simple_coroots, 1) if pairing(shifted, co) < 0), None)
        if i is None and pairing(shifted, theta_co) > 2 * p:
            i = 0
        if i is None:
            break
        nu2 = G.dot_act_doubled(G.gens[i], nu2, p)
        word.append(i)
    base = tuple(c // 2 for c in nu2)
    J = stabilizer_J(ctx, base, p)
    x = G.from_word(word)
    while True:
        i = G.first_right_descent(x, sorted(J))
        if i is None:
            break
        x = G.right_mult(x, i)
    assert G.dot_act(x, base, p) == lam
    return BlockPoint(base, J, p), x


def same_block(ctx: Context, lam: Sequence[int], mu: Sequence[int], p: int) -> bool:
    return to_fundamental_domain(ctx, lam, p)[0].base == to_fundamental_domain(ctx, mu, p)[0].base


def facet_points(ctx: Context, p: int) -> dict[frozenset[int], list[Weight]]:
    """All points of C grouped by their stabilizer type J."""
    rd = ctx.rd
    coroots = [list(c) for c in rd.simple_coroots]
    matrix = coroots
    theta_co = _theta_coroot(ctx)
    theta_coeffs = _solve([[coroots[i][k] for i in range(rd.rank)] for k in range(rd.x_rank)], theta_co)
    out: dict[frozenset[int], list[Weight]] = defaultdict(list)
    for a in product(range(p + 1), repeat=rd.rank):
        if sum(c * x for c, x in zip(theta_coeffs, a)) > p:
            continue
        shifted = _solve(matrix, a)
        two = [2 * s - r for s, r in zip(shifted, ctx.group.two_rho)]
        if any(Fraction(t).denominator != 1 or int(t) % 2 for t in two):
            continue
        lam = tuple(int(t) // 2 for t in two)
        out[stabilizer_J(ctx, lam, p)].append(lam)
    return {J: sorted(v) for J, v in out.items()}


def facet_point(ctx: Context, J: Iterable[int], p: int) -> Weight | None:
    pts = facet_points(ctx, p).get(frozenset(J))
    return pts[0] if pts else None


def orbit_dominant(ctx: Context, bp: BlockPoint, bound: int) -> list[tuple[ExtElt, Weight]]:
    G = ctx.group
    return [(w, G.dot_act(w, bp.base, bp.p)) for w in G.enumerate_min_reps(bp.J, bound)]


# -- tilting characters ------------------------------------------------------


def _split_finite(ctx: Context, x: ExtElt) -> tuple[int, ExtElt]:
    """x = z y with z in W and y minimal in W x; returns (l(z), y)."""
    G = ctx.group
    k = 0
    while True:
        s = G.first_left_descent(x, G.finite_gens)
        if s is None:
            return k, x
        x = G.left_mult(s, x)
        k += 1


def tilting_row(ctx: Context, bp: BlockPoint, w: ExtElt, provider: CanonicalBasisProvider | None = None) -> MultiplicityRow:
    """Multiplicities d^J_{y,w} of induced modules in T(w . base)."""
    G = ctx.group
    provider = provider or ctx.kl_provider
    J = sorted(bp.J)
    if not G.is_strongly_minimal(w, J):
        raise DatumError(f"{G.word_string(w)} is not strongly minimal for J={J}")
    wJ = G.longest_element(J)
    lJ = G.length(wJ)
    h = provider.element(G.multiply(w, wJ))
    sums: dict[ExtElt, int] = defaultdict(int)
    for x, c in h.items():
        k, y_ = _split_finite(ctx, x)
        sums[y_] += (-1) ** k * c.eval_at_one()
    entries = {}
    for y_, val in sums.items():
        if not val:
            continue
        y = G.multiply(y_, wJ)
        if G.length(y) == G.length(y_) - lJ and G.is_strongly_minimal(y, J):
            entries[y] = val
    if entries.get(w) != 1:
        raise ProviderError(f"tilting row of {G.word_string(w)} has diagonal entry {entries.get(w)}, expected 1")
    if any(v < 0 for v in entries.values()):
        raise ProviderError(f"tilting row of {G.word_string(w)} has a negative entry")
    return MultiplicityRow(w, dict(sorted(entries.items(), key=lambda kv: G.sort_key(kv[0]))), bp.J, "tilting")


def tilting_expansion(ctx: Context, lam: Sequence[int], p: int, provider=None) -> dict[Weight, int]:
    lam = tuple(lam)
    if not is_dominant(ctx.rd, lam):
        raise DatumError(f"tilting characters are indexed by dominant weights, got {lam}")
    bp, w = to_fundamental_domain(ctx, lam, p)
    row = tilting_row(ctx, bp, w, provider)
    G = ctx.group
    out = {G.dot_act(y, bp.base, p): d for y, d in row.entries.items()}
    return dict(sorted(out.items(), key=lambda kv: (-height(ctx.rd, kv[0]), kv[0])))


def tilting_character(ctx: Context, lam: Sequence[int], p: int, provider=None) -> Character:
    ch = character_from_expansion(ctx, tilting_expansion(ctx, lam, p, provider))
    return Character(ch.mults)


def tilting_characters(ctx: Context, lams: Iterable[Sequence[int]], p: int, provider=None, workers: int = 1) -> list[Character]:
    """Evaluate many tilting characters; results do not depend on ``workers``."""
    lams = [tuple(l) for l in lams]
    if workers <= 1:
        return [tilting_character(ctx, l, p, provider) for l in lams]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda l: tilting_character(ctx, l, p, provider), lams))


# -- simple characters -------------------------------------------------------


def lusztig_bound(ctx: Context, p: int) -> int:
    return p * (p - coxeter_number(ctx.rd) + 2)


def check_lusztig_guard(ctx: Context, w: ExtElt, p: int) -> None:
    h = coxeter_number(ctx.rd)
    if p < h:
        raise GuardError(f"Lusztig's formula needs p >= h (p={p}, h={h})")
    G = ctx.group
    shifted = [a + r for a, r in zip(G.dot_act_doubled(w, G.zero, p), G.two_rho)]
    bound = lusztig_bound(ctx, p)
    for _, co in positive_roots(ctx.rd):
        if pairing(shifted, co) > 2 * bound:
            raise GuardError(
                f"{G.word_string(w)} violates <w.0 + rho, a^vee> <= p(p-h+2) = {bound} "
                f"(value {Fraction(pairing(shifted, co), 2)})"
            )


def simple_row_regular(ctx: Context, w: ExtElt, p: int, assume_lusztig: bool = False) -> MultiplicityRow:
    """c^empty_{y,w} = (-1)^{l(w)+l(y)} h_{w_o y, w_o w}(1)."""
    G = ctx.group
    if not G.is_min_in_Ww(w):
        raise DatumError(f"{G.word_string(w)} is not in W_aff^empty")
    if assume_lusztig:
        if p < coxeter_number(ctx.rd):
            raise GuardError(f"regular blocks need p >= h (p={p})")
    else:
        check_lusztig_guard(ctx, w, p)
    w0 = G.longest_element(G.finite_gens)
    l0 = G.length(w0)
    lw = G.length(w)
    entries = {}
    for x, c in ctx.hecke.kl_element(G.multiply(w0, w)).items():
        y = G.multiply(w0, x)
        if G.length(x) == l0 + G.length(y):
            val = (-1) ** (lw + G.length(y)) * c.eval_at_one()
            if val:
                entries[y] = val
    return MultiplicityRow(w, dict(sorted(entries.items(), key=lambda kv: G.sort_key(kv[0]))), frozenset(), "simple")


def simple_row(ctx: Context, bp: BlockPoint, w: ExtElt, assume_lusztig: bool = False) -> MultiplicityRow:
    """c^J_{y,w} for the facet type of ``bp``, summed from the regular row over W_J."""
    G = ctx.group
    J = sorted(bp.J)
    reg = simple_row_regular(ctx, w, bp.p, assume_lusztig)
    if not J:
        return reg
    entries: dict[ExtElt, int] = defaultdict(int)
    for y_, c in reg.entries.items():
        y = y_
        while True:
            i = G.first_right_descent(y, J)
            if i is None:
                break
            y = G.right_mult(y, i)
        if G.is_strongly_minimal(y, J):
            entries[y] += c
    entries = {y: c for y, c in entries.items() if c}
    return MultiplicityRow(w, dict(sorted(entries.items(), key=lambda kv: G.sort_key(kv[0]))), bp.J, "simple")


def restricted_split(ctx: Context, lam: Sequence[int], p: int) -> tuple[Weight, Weight]:
    if ctx.rd.lattice_flavor != "simply_connected":
        raise DatumError("the Steinberg reduction needs a simply connected datum")
    parts = [divmod(c, p) for c in lam]
    return tuple(r for _, r in parts), tuple(q for q, _ in parts)


def simple_character(
    ctx: Context, lam: Sequence[int], p: int, assume_lusztig: bool = False
) -> tuple[dict[Weight, int], Character]:
    """(induced expansion, character) of L(lam) via Lusztig's formula and Steinberg's theorem."""
    lam = tuple(lam)
    if not is_dominant(ctx.rd, lam):
        raise DatumError(f"simple characters are indexed by dominant weights, got {lam}")
    lam0, lam1 = restricted_split(ctx, lam, p)
    bp, w = to_fundamental_domain(ctx, lam0, p)
    row = simple_row(ctx, bp, w, assume_lusztig)
    G = ctx.group
    exp0 = {G.dot_act(y, bp.base, p): c for y, c in row.entries.items()}
    ch0 = character_from_expansion(ctx, exp0)
    if not any(lam1):
        expansion, ch = exp0, ch0
    else:
        _, ch1 = simple_character(ctx, lam1, p, assume_lusztig)
        ch = ch0 * ch1.twist(p)
        expansion = decompose_into_induced(ctx, ch)
    if any(v < 0 for v in ch.mults.values()):
        raise KLCharError(f"simple character of {lam} came out non-effective")
    expansion = dict(sorted(expansion.items(), key=lambda kv: (-height(ctx.rd, kv[0]), kv[0])))
    return expansion, Character(ch.mults)


# -- translation identities --------------------------------------------------


@dataclass
class TranslationReport:
    J: tuple[int, ...]
    K: tuple[int, ...]
    p: int
    y: ExtElt
    w: ExtElt
    c_lhs: int | None = None
    c_rhs: int | None = None
    d_lhs: int | None = None
    d_rhs: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def c_ok(self) -> bool:
        return self.c_lhs == self.c_rhs

    @property
    def d_ok(self) -> bool:
        return all(v == self.d_lhs for v in self.d_rhs.values())

    @property
    def ok(self) -> bool:
        return self.c_ok and self.d_ok


def _simple_character_in_block(ctx: Context, bp: BlockPoint, w: ExtElt, assume_lusztig: bool) -> SignedCharacter:
    G = ctx.group
    row = simple_row(ctx, bp, w, assume_lusztig)
    return character_from_expansion(ctx, {G.dot_act(y, bp.base, bp.p): c for y, c in row.entries.items()})


def translate_character(ctx: Context, ch: SignedCharacter, lam: Weight, mu: Weight, p: int) -> dict[Weight, int]:
    """Induced expansion of pr_mu(ch * ch N(nu)) with nu dominant in W(mu - lam).

    Requires ``nu`` in the closure of the lowest alcove, where L(nu) = N(nu).
    """
    nu = dominant_conjugate(ctx, [m - l for m, l in zip(mu, lam)])
    if not in_fundamental_domain(ctx, nu, p):
        raise GuardError(f"translation weight {nu} is not in the lowest alcove closure")
    expansion = decompose_into_induced(ctx, ch * weyl_character(ctx, nu))
    base = to_fundamental_domain(ctx, mu, p)[0].base
    return {x: c for x, c in expansion.items() if to_fundamental_domain(ctx, x, p)[0].base == base}


def translation_identity_check(
    ctx: Context,
    J: Iterable[int],
    K: Iterable[int],
    y: ExtElt,
    w: ExtElt,
    p: int,
    provider=None,
    assume_lusztig: bool = False,
    check_c: bool = True,
) -> TranslationReport:
    """Evaluate both sides of the c- and d-translation identities for J in K.

    The c left-hand side goes through characters (translation of ch L(w . lam)
    to the K-wall, projected to its block); the right-hand side sums the
    J-row over W_K^J.  The d sides are two independent tilting rows.
    """
    G = ctx.group
    J, K = frozenset(J), frozenset(K)
    if not J <= K:
        raise ValueError("J must be a subset of K")
    for S in (J, K):
        G.parabolic_elements(S)
    lam = facet_point(ctx, J, p)
    mu = facet_point(ctx, K, p)
    if lam is None or mu is None:
        raise NonFinitaryError(f"C_J or C_K is empty at p={p}")
    for x in (y, w):
        if not G.is_strongly_minimal(x, K):
            raise DatumError(f"{G.word_string(x)} is not in W_aff^K")
    bpJ, bpK = BlockPoint(lam, J, p), BlockPoint(mu, K, p)
    rep = TranslationReport(tuple(sorted(J)), tuple(sorted(K)), p, y, w)
    reps = G.wK_reps(K, J)

    if check_c:
        rowJ = simple_row(ctx, bpJ, w, assume_lusztig)
        rep.c_rhs = sum(rowJ.entries.get(G.multiply(y, z), 0) for z in reps)
        chL = _simple_character_in_block(ctx, bpJ, w, assume_lusztig)
        translated = translate_character(ctx, chL, lam, mu, p)
        rep.c_lhs = translated.get(G.dot_act(y, mu, p), 0)

    wK, wJ = G.longest_element(K), G.longest_element(J)
    rep.d_lhs = tilting_row(ctx, bpK, w, provider).entries.get(y, 0)
    rowJ = tilting_row(ctx, bpJ, G.multiply(G.multiply(w, wK), wJ), provider)
    for u in reps:
        rep.d_rhs[u] = rowJ.entries.get(G.multiply(y, u), 0)
    return rep
