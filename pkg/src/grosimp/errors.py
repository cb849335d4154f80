"""Exception types shared across the package."""


class GrosimpError(Exception):
    """Base class for all errors raised by this package."""


class TruncationError(GrosimpError, ValueError):
    """A construction needs simplices beyond the stored dimension bound.

    Raised instead of silently clamping: a silently truncated mapping
    space would corrupt every comparison built on top of it.
    """


class BudgetExceeded(GrosimpError, RuntimeError):
    """A bounded search spent its step budget before finishing."""

    def __init__(self, message, spent=None, limit=None):
        super().__init__(message)
        self.spent = spent
        self.limit = limit


class WorkspaceError(GrosimpError, ValueError):
    """A workspace file could not be parsed or its references resolved."""


class MarkedEdgeError(GrosimpError, ValueError):
    """A marked edge violates a precondition; carries the offending edge."""

    def __init__(self, message, edge):
        super().__init__(message)
        self.edge = edge


class ExtensionSearchError(GrosimpError, RuntimeError):
    """No extension of an inverse witness to the full walking-isomorphism
    nerve exists within the dimension bound; carries the edge at fault."""

    def __init__(self, message, edge):
        super().__init__(message)
        self.edge = edge
