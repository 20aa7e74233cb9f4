"""Exception hierarchy shared by every module in the package."""


class SomborError(ValueError):
    """Base class for all errors raised by this package."""


class VertexRangeError(SomborError):
    pass


class LoopError(SomborError):
    pass


class DuplicateEdgeError(SomborError):
    pass


class DisconnectedGraphError(SomborError):
    pass


class PendentPathError(SomborError):
    pass


class CutEdgeError(SomborError):
    pass


class CapExceededError(SomborError):
    """An operation was asked to work above one of the fixed order caps."""


class ParameterError(SomborError):
    """Family or bound parameters outside their valid range."""


class RadicalError(SomborError):
    pass


class MajorizationError(SomborError):
    pass


class EmptyClassError(SomborError):
    pass


class FormatError(SomborError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
