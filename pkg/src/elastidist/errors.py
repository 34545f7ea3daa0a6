"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised for invalid inputs: non-finite coordinates, bad radii,
    degenerate carriers where a supporting line is required, and so on."""


class DimensionError(InputError):
    """Raised when an operation requires a specific ambient dimension
    (or matching dimensions) and the inputs do not satisfy it."""


class SizeLimitError(InputError):
    """Raised when an exhaustive computation is refused because the
    instance exceeds its hard size guard."""


class ConvergenceError(RuntimeError):
    """Raised when an iterative numeric procedure fails to converge.
    Carries the last bracket for diagnosis."""

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket
