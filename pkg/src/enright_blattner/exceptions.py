"""Exception types shared across the package.

Each maps to a distinct CLI exit code (see ``cli.EXIT_CODES``).
"""


class TruncationError(ValueError):
    """A coefficient was requested outside the window a series was expanded to."""


class OrderingHypothesisError(RuntimeError):
    """Signs of a resolution slice do not alternate with the size classes."""


class CapExceededError(RuntimeError):
    """A configured computation cap (Weyl group size, depth ceiling) was hit."""


class UnsupportedRankError(ValueError):
    """The hollow-table formula would need modification rules at this rank."""
