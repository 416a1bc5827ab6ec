"""Exception types raised across the package."""


class EqaoaError(Exception):
    """Base class for all package errors."""


class GraphError(EqaoaError, ValueError):
    """Invalid graph structure or unknown builtin graph name."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EncodingError(EqaoaError, ValueError):
    """Dimension is not a power of two or the encoding is unsupported."""


class ResourceLimitError(EqaoaError):
    """Requested problem exceeds a configured size cap."""


class OptimizerError(EqaoaError, RuntimeError):
    """The classical optimizer hit a non-finite objective value."""
