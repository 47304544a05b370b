"""Kazhdan-Lusztig combinatorics for affine Weyl groups and the tilting/simple
character formulas of reductive groups in positive characteristic."""

from .context import Context
from .errors import (
    CacheError,
    DatumError,
    GuardError,
    IncompleteProviderError,
    KLCharError,
    NonFinitaryError,
    OutOfTruncationError,
    ProviderError,
)
from .rootdata import RootDatum, build_root_datum, parse_descriptor
from .weyl import ExtElt, WeylGroup

__all__ = [
    "CacheError",
    "Context",
    "DatumError",
    "ExtElt",
    "GuardError",
    "IncompleteProviderError",
    "KLCharError",
    "NonFinitaryError",
    "OutOfTruncationError",
    "ProviderError",
    "RootDatum",
    "WeylGroup",
    "build_root_datum",
    "parse_descriptor",
]
