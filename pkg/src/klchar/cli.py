"""Command-line interface.

Exit codes: 0 success, 1 other library error (corrupt cache, invalid table),
2 usage/parse error, 3 guard refusal, 4 incomplete canonical-basis provider,
5 query outside a truncated computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .cells import build_cell_graph, cell_partition, cells_report, humphreys_cell
from .characters import (
    BlockPoint,
    character_from_expansion,
    facet_points,
    orbit_dominant,
    simple_character,
    tilting_row,
    to_fundamental_domain,
    translation_identity_check,
    weyl_character,
    weyl_dimension,
)
from .cache import cache_load, cache_path, cache_store, default_cache_dir, dumps, loads, table_hash, verify_table
from .context import Context
from .errors import (
    DatumError,
    GuardError,
    IncompleteProviderError,
    KLCharError,
    NonFinitaryError,
    OutOfTruncationError,
)
from .hecke import TableProvider, validate_basis_entries
from .laurent import LaurentPoly
from .rootdata import is_dominant

SCHEMA = "tiltchar/1"

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_GUARD, EXIT_PROVIDER, EXIT_TRUNCATION = 0, 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}; expected comma-separated integers") from None


def parse_gens(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(c) for c in text.replace("s", "").split(",") if c)
    except ValueError:
        raise UsageError(f"cannot parse generator set {text!r}") from None


def parse_element(ctx: Context, text: str):
    """Accepts ``e``, ``w0``, words like ``s0s1``, index lists ``0,1`` or serialized elements."""
    G = ctx.group
    text = text.strip()
    if text == "e":
        return G.identity
    if text == "w0":
        return G.longest_element(G.finite_gens)
    if text.startswith("w="):
        return G.parse(text)
    try:
        if text.startswith("s"):
            word = [int(c) for c in text[1:].split("s")]
        else:
            word = [int(c) for c in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse element {text!r}") from None
    if any(not 0 <= i <= ctx.rd.rank for i in word):
        raise UsageError(f"generator index out of range in {text!r}")
    return G.from_word(word)


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _wkey(lam) -> str:
    return ",".join(map(str, lam))


def _coords(ctx: Context) -> str:
    return "fundamental weights" if ctx.rd.lattice_flavor == "simply_connected" else "simple roots"


def _char_json(ch) -> dict:
    return {_wkey(k): v for k, v in sorted(ch.mults.items())}


def _poly_json(f: LaurentPoly) -> dict:
    return {str(e): c for e, c in f}


def _provider(ctx: Context, args):
    path = getattr(args, "provider_table", None)
    if not path:
        return ctx.kl_provider
    text = Path(path).read_text()
    entries = loads(ctx.group, text)
    problems = validate_basis_entries(ctx.group, entries)
    if problems:
        raise KLCharError("provider table rejected:\n  " + "\n  ".join(problems))
    return TableProvider(ctx.group, entries, f"p-canonical (table {table_hash(text)})")


def _check_p(p: int) -> None:
    if not is_prime(p):
        raise UsageError(f"--p must be a prime, got {p}")


# -- commands ----------------------------------------------------------------


def cmd_weylchar(ctx: Context, args) -> dict:
    lam = parse_weight(args.weight)
    ch = weyl_character(ctx, lam)
    return {
        "lambda": list(lam),
        "dimension": weyl_dimension(ctx, lam),
        "character": _char_json(ch),
    }


def cmd_tiltchar(ctx: Context, args) -> dict:
    _check_p(args.p)
    lam = parse_weight(args.weight)
    provider = _provider(ctx, args)
    G = ctx.group
    if not is_dominant(ctx.rd, lam):
        raise DatumError(f"tilting characters are indexed by dominant weights, got {lam}")
    bp, w = to_fundamental_domain(ctx, lam, args.p)
    row = tilting_row(ctx, bp, w, provider)
    expansion = {G.dot_act(y, bp.base, args.p): d for y, d in row.entries.items()}
    ch = character_from_expansion(ctx, expansion)
    return {
        "schema": SCHEMA,
        "lambda": list(lam),
        "basis": provider.label,
        "block": {"base": list(bp.base), "J": sorted(bp.J), "w": G.word_string(w)},
        "row": {G.word_string(y): d for y, d in row.entries.items()},
        "induced_expansion": {_wkey(k): v for k, v in sorted(expansion.items(), reverse=True)},
        "dimension": ch.dim,
        "character": _char_json(ch),
    }


def cmd_simplechar(ctx: Context, args) -> dict:
    _check_p(args.p)
    lam = parse_weight(args.weight)
    if args.assume_lusztig:
        print("warning: --assume-lusztig overrides the p(p-h+2) validity guard", file=sys.stderr)
    expansion, ch = simple_character(ctx, lam, args.p, args.assume_lusztig)
    return {
        "schema": SCHEMA,
        "lambda": list(lam),
        "basis": ctx.kl_provider.label,
        "assume_lusztig": args.assume_lusztig,
        "induced_expansion": {_wkey(k): v for k, v in expansion.items()},
        "dimension": ch.dim,
        "character": _char_json(ch),
    }


def cmd_klpoly(ctx: Context, args) -> dict:
    y, w = parse_element(ctx, args.y), parse_element(ctx, args.w)
    f = ctx.hecke.kl_poly(y, w)
    G = ctx.group
    return {"y": G.word_string(y), "w": G.word_string(w), "poly": str(f), "coefficients": _poly_json(f)}


def cmd_asppoly(ctx: Context, args) -> dict:
    y, w = parse_element(ctx, args.y), parse_element(ctx, args.w)
    f = ctx.module.antispherical_poly(y, w)
    G = ctx.group
    return {"y": G.word_string(y), "w": G.word_string(w), "poly": str(f), "coefficients": _poly_json(f)}


def cmd_blocks(ctx: Context, args) -> dict:
    _check_p(args.p)
    G = ctx.group
    if args.weight is None:
        facets = facet_points(ctx, args.p)
        return {
            "p": args.p,
            "facets": [
                {"J": sorted(J), "points": [list(x) for x in pts]}
                for J, pts in sorted(facets.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
            ],
        }
    lam = parse_weight(args.weight)
    bp, x = to_fundamental_domain(ctx, lam, args.p)
    orbit = orbit_dominant(ctx, BlockPoint(bp.base, bp.J, bp.p), args.bound)
    return {
        "p": args.p,
        "lambda": list(lam),
        "base": list(bp.base),
        "J": sorted(bp.J),
        "x": G.word_string(x),
        "bound": args.bound,
        "orbit": [{"w": G.word_string(w), "weight": list(mu)} for w, mu in orbit],
    }


def cmd_cells(ctx: Context, args) -> dict:
    provider = _provider(ctx, args) if args.provider_table else None
    g = build_cell_graph(ctx, args.bound, "finite" if args.finite else "affine", provider)
    part = cell_partition(ctx, g)
    warnings = []
    if not args.finite:
        warnings.append("cells are strongly connected components inside the ball; incomplete cells may be larger")
    rep = cells_report(ctx, part, warnings)
    rep["basis"] = provider.label if provider else ctx.kl_provider.label
    return rep


def cmd_humphreys(ctx: Context, args) -> dict:
    _check_p(args.p)
    lam = parse_weight(args.weight)
    part = cell_partition(ctx, build_cell_graph(ctx, args.bound))
    rep = humphreys_cell(ctx, lam, args.p, part, args.mode)
    G = ctx.group
    return {
        "lambda": list(lam),
        "p": args.p,
        "mode": rep.mode,
        "element": G.word_string(rep.element),
        "cell": {"id": rep.cell, "minimal_member": G.word_string(rep.members[0]), "size": len(rep.members), "complete": rep.complete},
        "orbit": rep.orbit,
        "note": rep.note,
    }


def cmd_translate_check(ctx: Context, args) -> dict:
    _check_p(args.p)
    if args.assume_lusztig:
        print("warning: --assume-lusztig overrides the p(p-h+2) validity guard", file=sys.stderr)
    G = ctx.group
    y, w = parse_element(ctx, args.y), parse_element(ctx, args.w)
    rep = translation_identity_check(
        ctx, parse_gens(args.J), parse_gens(args.K), y, w, args.p, _provider(ctx, args), args.assume_lusztig
    )
    return {
        "J": list(rep.J),
        "K": list(rep.K),
        "p": rep.p,
        "y": G.word_string(y),
        "w": G.word_string(w),
        "c": {"lhs": rep.c_lhs, "rhs": rep.c_rhs, "equal": rep.c_ok},
        "d": {"lhs": rep.d_lhs, "rhs": {G.word_string(u): v for u, v in rep.d_rhs.items()}, "equal": rep.d_ok},
    }


def cmd_cache(args) -> tuple[dict, int]:
    cache_dir = Path(args.cache_dir) if args.cache_dir else default_cache_dir()
    ctx = Context(args.datum)
    G = ctx.group
    kl_file = cache_path(cache_dir, ctx.descriptor)
    if args.action == "stats":
        as_file = cache_path(cache_dir, ctx.descriptor, "ASCACHE")
        kl = cache_load(kl_file, G)
        asp = cache_load(as_file, G, "ASCACHE")
        return {"kl_entries": len(kl), "antispherical_entries": len(asp), "path": str(kl_file)}, EXIT_OK
    if args.action == "warm":
        for x in G.ball(args.bound):
            ctx.hecke.kl_element(x)
        cache_store(kl_file, G, {x: ctx.hecke.kl_element(x) for x in G.ball(args.bound)})
        return {"kl_entries": len(cache_load(kl_file, G))}, EXIT_OK
    if args.action == "verify":
        table = cache_load(kl_file, G)
        defects = verify_table(ctx.hecke, table)
        return {"entries": len(table), "defects": defects}, (EXIT_OK if not defects else EXIT_ERROR)
    # import
    if not args.table:
        raise UsageError("cache import needs a table path")
    text = Path(args.table).read_text()
    entries = loads(G, text)
    problems = validate_basis_entries(G, entries)
    if problems:
        return {"imported": 0, "problems": problems}, EXIT_ERROR
    target = cache_path(cache_dir, ctx.descriptor, "PCANONICAL")
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dumps(G, entries))
    return {"imported": len(entries), "path": str(target), "hash": table_hash(text)}, EXIT_OK


COMMANDS = {
    "weylchar": cmd_weylchar,
    "tiltchar": cmd_tiltchar,
    "simplechar": cmd_simplechar,
    "klpoly": cmd_klpoly,
    "asppoly": cmd_asppoly,
    "blocks": cmd_blocks,
    "cells": cmd_cells,
    "humphreys": cmd_humphreys,
    "translate-check": cmd_translate_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cache-dir", default=None, help="defaults to $KLCHAR_CACHE_DIR or ~/.cache/klchar")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the persistent cache")

    parser = argparse.ArgumentParser(prog="klchar", description="Kazhdan-Lusztig combinatorics and tilting characters")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        sp.add_argument("datum", help="e.g. A2sc, B2adj, G2")
        return sp

    sp = add("weylchar", help="character of an induced module")
    sp.add_argument("--lambda", dest="weight", required=True)

    for name in ("tiltchar", "simplechar"):
        sp = add(name, help=f"{name[:-4]} character")
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--lambda", dest="weight", required=True)
        sp.add_argument("--provider-table", default=None)
        sp.add_argument("--assume-lusztig", action="store_true")

    for name in ("klpoly", "asppoly"):
        sp = add(name, help="KL polynomial h_{y,w}" if name == "klpoly" else "antispherical polynomial n_{y,w}")
        sp.add_argument("--y", required=True)
        sp.add_argument("--w", required=True)

    sp = add("blocks", help="fundamental domain facets, or the block of a weight")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--lambda", dest="weight", default=None)
    sp.add_argument("--bound", type=int, default=4)

    sp = add("cells", help="truncated two-sided cells")
    sp.add_argument("--bound", type=int, default=6)
    sp.add_argument("--finite", action="store_true", help="use the finite Weyl group")
    sp.add_argument("--provider-table", default=None)

    sp = add("humphreys", help="cell of the element attached to a weight")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--lambda", dest="weight", required=True)
    sp.add_argument("--mode", choices=("traditional", "relative"), default="traditional")
    sp.add_argument("--bound", type=int, default=10)

    sp = add("translate-check", help="evaluate both translation identities")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--J", default="")
    sp.add_argument("--K", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--w", required=True)
    sp.add_argument("--provider-table", default=None)
    sp.add_argument("--assume-lusztig", action="store_true")

    sp = sub.add_parser("cache", parents=[common], help="persistent cache administration")
    sp.add_argument("action", choices=("stats", "verify", "import", "warm"))
    sp.add_argument("datum")
    sp.add_argument("table", nargs="?", default=None)
    sp.add_argument("--bound", type=int, default=8, help="ball radius for 'warm'")
    return parser


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.extend(_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(f"{pad}  - " + ", ".join(f"{a}={b}" for a, b in item.items()))
        else:
            lines.append(f"{pad}{k}: {v}")
    return lines


def emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(_text(report)))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "cache":
            report, code = cmd_cache(args)
            emit(report, args.format)
            return code
        ctx = Context(args.datum)
        cache_dir = Path(args.cache_dir) if args.cache_dir else default_cache_dir()
        if not args.no_cache:
            ctx.load_cache(cache_dir)
        body = COMMANDS[args.command](ctx, args)
        report = {"command": args.command, "datum": ctx.descriptor, "coordinates": _coords(ctx), **body}
        if not args.no_cache:
            ctx.save_cache(cache_dir)
        emit(report, args.format)
        return EXIT_OK
    except (UsageError, DatumError, NonFinitaryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except IncompleteProviderError as exc:
        print(f"incomplete provider: {exc}", file=sys.stderr)
        return EXIT_PROVIDER
    except OutOfTruncationError as exc:
        print(f"out of truncation: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION
    except (KLCharError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
