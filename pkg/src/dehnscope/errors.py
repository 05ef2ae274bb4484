"""Exception hierarchy shared by all modules."""


class DehnscopeError(Exception):
    """Base class for library errors."""


class ParseError(DehnscopeError, ValueError):
    pass


class InvalidVertex(DehnscopeError, KeyError):
    pass


class EmptyGraph(DehnscopeError, ValueError):
    pass


class Disconnected(DehnscopeError, ValueError):
    pass


class EmptySet(DehnscopeError, ValueError):
    pass


class NotReducible(DehnscopeError, ValueError):
    pass


class TooLarge(DehnscopeError, ValueError):
    pass


class FewerThanTwoFactors(DehnscopeError, ValueError):
    pass


class NotFinitelyPresented(DehnscopeError):
    """The flag complex is not simply connected, so the group is not finitely presented."""

    def __init__(self, message, status=None):
        super().__init__(message)
        self.status = status


class D1Unverified(DehnscopeError):
    """Simple connectivity of the flag complex could not be decided within budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class CapExceeded(DehnscopeError):
    pass


class NotAlternating(DehnscopeError, ValueError):
    pass


class NotInKernel(DehnscopeError, ValueError):
    pass


class ColourClash(DehnscopeError, ValueError):
    pass


class MalformedMap(DehnscopeError, ValueError):
    pass


class BoundaryMismatch(DehnscopeError, ValueError):
    pass


class NotASquareComplexCell(DehnscopeError, ValueError):
    pass


class NotNullHomotopic(DehnscopeError, ValueError):
    pass


class CorridorsCross(DehnscopeError, ValueError):
    pass


class NotBoundaryToBoundary(DehnscopeError, ValueError):
    pass


class NotIrreducible(DehnscopeError, ValueError):
    pass


class TooSmall(DehnscopeError, ValueError):
    pass


class NotEssential(DehnscopeError, ValueError):
    pass


class SupportIrreducible(DehnscopeError, ValueError):
    pass


class NoCommonColour(DehnscopeError, ValueError):
    pass


class PreconditionFailed(DehnscopeError, ValueError):
    pass
