"""Exception taxonomy shared by all glnlab modules.

The CLI maps these onto process exit codes (see cli.EXIT_CODES); library
users can catch the base class.
"""


class GlnlabError(Exception):
    """Base class for all glnlab errors."""


class ParseError(GlnlabError, ValueError):
    """Malformed permutation / multisegment / word string."""


class RankMismatchError(GlnlabError, ValueError):
    """Operands live in symmetric groups of different ranks."""


class SupportMismatchError(GlnlabError, ValueError):
    """Multisegments do not share a support class."""


class BudgetExceededError(GlnlabError, RuntimeError):
    """A configured memory or basis-size budget was exceeded.

    ``checkpoint`` optionally names a cache file from which the
    computation can be resumed.
    """

    def __init__(self, message: str, checkpoint: str | None = None):
        super().__init__(message)
        self.checkpoint = checkpoint


class ConsistencyError(GlnlabError, RuntimeError):
    """An internal invariant failed (negative multiplicity, dimension
    identity violation).  Always a bug or a convention drift; never
    swallowed."""


class CacheFormatError(GlnlabError, RuntimeError):
    """Cache file is corrupt, truncated, or has the wrong version."""


class CoefficientOverflowError(GlnlabError, OverflowError):
    """A polynomial coefficient left the supported 64-bit range."""
