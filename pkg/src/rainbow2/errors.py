"""Exception hierarchy shared by every module of the package."""


class RainbowError(Exception):
    """Base class for all package errors."""


class InvalidGraph(RainbowError, ValueError):
    pass


class Disconnected(RainbowError):
    pass


class PaletteTooLarge(RainbowError):
    pass


class InstanceTooLarge(RainbowError):
    pass


class BadCyclePattern(RainbowError, ValueError):
    pass


class NoCycle(RainbowError):
    pass


class StructureError(RainbowError):
    """The input graph does not have the structure a coloring branch needs."""


class NotDiameter2(StructureError):
    pass


class HasBridge(StructureError):
    pass


class NotPendantStructure(StructureError):
    pass


class NotRc2Structure(StructureError):
    pass


class CompletionFailed(RainbowError):
    """Verification still fails after the repair budget is spent.

    The partial trace is kept on the exception so callers can inspect it.
    """

    def __init__(self, message, trace=None, failing_pair=None):
        super().__init__(message)
        self.trace = trace
        self.failing_pair = failing_pair


class GenerationExhausted(RainbowError):
    pass


class UnknownName(RainbowError, KeyError):
    pass


class ParseError(RainbowError, ValueError):
    pass
