"""Exception types raised by topoclust."""


class TopoclustError(Exception):
    """Base class for all topoclust errors."""


class ParseError(TopoclustError):
    """An edge-list line could not be parsed."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class MalformedGraphError(TopoclustError):
    """The graph is too small or structurally unusable (<3 nodes or no edges)."""


class DisconnectedError(TopoclustError):
    """An operation requiring a connected graph met an unreachable node."""


class ParamError(TopoclustError):
    """A parameter is outside its valid range."""


class NumericError(TopoclustError):
    """Non-finite values where finite ones are required."""


class EmptyInputError(TopoclustError):
    """An operation received an empty series."""


class InvariantViolation(TopoclustError):
    """A domain-type invariant does not hold (e.g. histogram mass != 1)."""


class TooFewNetworksError(TopoclustError):
    """Pairwise operations need at least two networks."""


class UndefinedError(TopoclustError):
    """The requested quantity is undefined for this input (e.g. constant series)."""


class DegenerateError(TopoclustError):
    """Degenerate input for a fit (e.g. all degree values equal the threshold)."""


class ManifestError(TopoclustError):
    """The corpus manifest is invalid."""


class PipelineIOError(TopoclustError):
    """An output location cannot be written or a required intermediate is missing."""
