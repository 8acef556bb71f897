"""Exception types shared across the library.

Every deliberate failure mode gets its own class so callers (and the CLI
exit-code mapping) can tell a genuine pole from a misuse of an operation.
"""


class ZetalineError(Exception):
    """Base class for all library errors."""


class PoleError(ZetalineError):
    """The requested point is (numerically) a pole of the function."""


class DomainError(ZetalineError):
    """An argument lies outside the documented domain of an operation."""


class ConsistencyError(ZetalineError):
    """An internal cross-check failed, signalling a precision breakdown."""


class CompletenessError(ZetalineError):
    """A zero scan found a count incompatible with the counting estimate."""


class FormatError(ZetalineError):
    """A cache or table file is malformed."""


class ValidationError(ZetalineError):
    """Loaded data failed revalidation against the underlying function."""


class ConfigError(ZetalineError):
    """A construction was asked for with unusable parameters."""


class DensityError(ZetalineError):
    """A point set violates the zero-density precondition of an estimate."""
