"""Line-oriented persistent store for canonical-basis elements.

Format::

    KLCACHE v1 A2sc
    <w> | <y>:<poly>;<y>:<poly>;...

where elements use :meth:`WeylGroup.serialize` and ``<poly>`` is
comma-separated ``exp^coeff`` pairs sorted by exponent.  Entries are written
sorted by (length, serialization) and terms likewise, so store/load/store is
byte-identical.  The antispherical module uses the same layout under the
``ASCACHE`` magic.
"""

from __future__ import annotations

import hashlib
import os
import re
from pathlib import Path
from typing import Mapping

from filelock import FileLock

from .errors import CacheError, DatumError
from .laurent import LaurentPoly
from .weyl import ExtElt, WeylGroup

VERSION = "v1"
CACHE_ENV = "KLCHAR_CACHE_DIR"

_TERM = re.compile(r"(w=\[[^\]]*\];t=\([^)]*\)):([^;]*)")

Table = dict[ExtElt, dict[ExtElt, LaurentPoly]]


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "klchar"


def cache_path(cache_dir: Path, descriptor: str, magic: str = "KLCACHE") -> Path:
    return Path(cache_dir) / f"{magic.lower()}-{descriptor}.txt"


def dumps(group: WeylGroup, table: Mapping[ExtElt, Mapping[ExtElt, LaurentPoly]], magic: str = "KLCACHE") -> str:
    def key(x):
        return (group.length(x), group.serialize(x))

    lines = [f"{magic} {VERSION} {group.rd.descriptor}"]
    for w in sorted(table, key=key):
        h = table[w]
        terms = ";".join(f"{group.serialize(y)}:{h[y].serialize()}" for y in sorted(h, key=key))
        lines.append(f"{group.serialize(w)} | {terms}")
    return "\n".join(lines) + "\n"


def loads(group: WeylGroup, text: str, magic: str = "KLCACHE") -> Table:
    """Parse a cache file; every malformed line raises :class:`CacheError`."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        return {}
    header = lines[0].split()
    if len(header) != 3 or header[0] != magic:
        raise CacheError(f"bad cache header {lines[0]!r}, expected '{magic} {VERSION} <datum>'")
    if header[1] != VERSION:
        raise CacheError(f"cache format version {header[1]} is not supported (expected {VERSION})")
    if header[2] != group.rd.descriptor:
        raise CacheError(f"cache is for datum {header[2]}, not {group.rd.descriptor}")
    table: Table = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            left, right = line.split(" | ", 1)
            w = group.parse(left)
            h = {}
            pos = 0
            for m in _TERM.finditer(right):
                if m.start() != pos:
                    raise ValueError("unparsable text between terms")
                h[group.parse(m.group(1))] = LaurentPoly.parse(m.group(2))
                pos = m.end() + 1
            if pos < len(right) or not h:
                raise ValueError("trailing or missing terms")
            if any(not c for c in h.values()):
                raise ValueError("zero coefficient stored")
        except (ValueError, DatumError) as exc:
            raise CacheError(f"corrupt cache entry on line {lineno}: {exc}") from None
        if w in table:
            raise CacheError(f"duplicate cache entry on line {lineno}")
        table[w] = h
    return table


def cache_store(path: Path, group: WeylGroup, table: Mapping, magic: str = "KLCACHE") -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(str(path) + ".lock"):
        existing = loads(group, path.read_text(), magic) if path.exists() else {}
        merged = {**existing, **table}
        tmp = path.with_suffix(path.suffix + ".tmp")
        tmp.write_text(dumps(group, merged, magic))
        tmp.replace(path)


def cache_load(path: Path, group: WeylGroup, magic: str = "KLCACHE") -> Table:
    path = Path(path)
    if not path.exists():
        return {}
    return loads(group, path.read_text(), magic)


def verify_table(hecke, table: Mapping[ExtElt, Mapping[ExtElt, LaurentPoly]]) -> list[str]:
    """Re-validate KL entries: self-duality, unit top coefficient, v Z[v] below.

    Self-duality is tested by expanding each entry in a freshly computed KL
    basis (never seeded from ``table``): an element is bar-invariant exactly
    when all its KL coefficients are.  For a valid entry the expansion stops
    after one step, which keeps verification linear in the table size.
    """
    from .hecke import HeckeAlgebra

    group = hecke.group
    fresh = HeckeAlgebra(group)
    defects = []
    for w in sorted(table, key=lambda x: (group.length(x), group.serialize(x))):
        h = table[w]
        name = group.word_string(w)
        if h.get(w) != LaurentPoly.const(1):
            defects.append(f"{name}: top coefficient is not 1")
        for y, c in h.items():
            if y != w and c.min_exp <= 0:
                defects.append(f"{name}: coefficient at {group.word_string(y)} not in vZ[v]")
        if any(c.bar() != c for c in fresh.to_kl_basis(h).values()):
            defects.append(f"{name}: not self-dual")
    return defects


def table_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:12]
