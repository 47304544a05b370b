"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class KLCharError(Exception):
    """Base class for all errors raised by klchar."""


class DatumError(KLCharError, ValueError):
    """Invalid root datum descriptor, weight dimension or datum mismatch."""


class NonFinitaryError(KLCharError, ValueError):
    """A subset of simple reflections generating an infinite parabolic subgroup."""


class GuardError(KLCharError):
    """A formula was requested outside the region where it is asserted to hold."""


class IncompleteProviderError(KLCharError):
    """A canonical-basis provider lacks an element needed for a computation."""


class ProviderError(KLCharError):
    """A canonical-basis table violates a basis invariant."""


class OutOfTruncationError(KLCharError):
    """A query falls outside a truncated (length-bounded) computation."""


class CacheError(KLCharError):
    """Corrupt, mismatched or unreadable persistent cache."""
