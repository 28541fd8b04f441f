"""Exception types shared across the package.

Domain errors derive from :class:`BettiForgeError`; the command line maps
those to exit status 1 and :class:`ParseError` to exit status 2.
"""


class BettiForgeError(ValueError):
    """Base class for mathematical (domain) failures."""


class InvalidSequenceError(BettiForgeError):
    """A degree sequence is empty or not strictly increasing."""


class NotInConeError(BettiForgeError):
    """The greedy decomposition got stuck.

    ``partial`` holds the terms peeled so far as ``(coefficient, sequence)``
    pairs and ``residual`` the table that was left over.
    """

    def __init__(self, message, partial=(), residual=None):
        super().__init__(message)
        self.partial = tuple(partial)
        self.residual = residual


class NotSelfDualError(BettiForgeError):
    pass


class NotOrderIdealError(BettiForgeError):
    """A cell set is not closed downwards; ``witness`` is a cell whose
    predecessor is missing and ``missing`` that predecessor."""

    def __init__(self, message, witness=None, missing=None):
        super().__init__(message)
        self.witness = witness
        self.missing = missing


class InvalidOSequenceError(BettiForgeError):
    pass


class InvalidParametersError(BettiForgeError):
    pass


class ParseError(ValueError):
    """Malformed input file (text grid or JSON)."""
