class DomainError(ValueError):
    """Input outside the domain of an operation."""


class UndecidedError(RuntimeError):
    """A local search exhausted its precision budget without a verdict."""

    def __init__(self, prime, precision):
        super().__init__(f"local solvability at {prime} undecided at precision {precision}")
        self.prime = prime
        self.precision = precision
