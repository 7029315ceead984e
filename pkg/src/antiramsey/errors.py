class AntiRamseyError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(AntiRamseyError, ValueError):
    """Malformed input: a bad partite spec, coloring, file, or out-of-range parameter."""


class CapacityError(AntiRamseyError, RuntimeError):
    """An exhaustive search was asked to run beyond its configured size limit."""

    def __init__(self, message: str, parameter: str | None = None):
        super().__init__(message)
        self.parameter = parameter
