class OccamError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgumentError(OccamError, ValueError):
    """An argument violates an operation's precondition."""


class OccOverflowError(OccamError, OverflowError):
    """An Occ(m,n,r) instance does not fit the configured integer width."""


class VerificationError(OccamError, AssertionError):
    """A construction or a cross-check failed its own post-condition."""


class UsageError(OccamError):
    """Malformed command-line usage (exit code 3)."""
