"""Exception types shared across the package."""


class InconsistencyError(RuntimeError):
    """An internal invariant was violated; this always signals a bug."""


class IncompatibleWeightError(ValueError):
    """A weight vector does not reproduce the term order on a monomial set."""

    def __init__(self, smaller, larger, message=None):
        self.pair = (smaller, larger)
        super().__init__(message or f"weight does not separate {smaller} < {larger}")
