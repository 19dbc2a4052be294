"""Exception types shared across the package."""


class ScofoError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(ScofoError, ValueError):
    """Invalid, inconsistent or out-of-range argument values."""


class ModelError(ScofoError, ValueError):
    """A model violates its structural invariants (shapes, normalization)."""


class UnsupportedOperationError(ScofoError, RuntimeError):
    """The requested operation is not available for this model/state combination."""


class NumericError(ScofoError, ArithmeticError):
    """Non-finite inputs or invalid numeric state."""


class NumericInstabilityError(NumericError):
    """Signed-sum accumulation cancelled catastrophically; use the naive path."""


class OrderingError(ScofoError, ValueError):
    """An event stream violated its time-ordering contract."""


class AnnotationError(ScofoError, ValueError):
    """A ground-truth annotation is inconsistent with the event stream."""


class FitError(ScofoError, ValueError):
    """A regression/fit has degenerate input."""


class ParseError(ScofoError, ValueError):
    """A file could not be parsed.

    ``line`` carries the 1-based offending line number when known.
    """

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        prefix = ""
        if path is not None:
            prefix += str(path)
        if line is not None:
            prefix += f":{line}"
        if prefix:
            message = f"{prefix}: {message}"
        super().__init__(message)
