"""Exception types shared across the package."""


class HopfCohError(Exception):
    """Base class for every error raised by hopfcoh."""


class NotPrime(HopfCohError, ValueError):
    def __init__(self, p):
        super().__init__(f"{p} is not prime")
        self.p = p


class NoSuchRoot(HopfCohError, ValueError):
    def __init__(self, p, n):
        super().__init__(f"no primitive root of unity of order {n} in F_{p} ({n} does not divide {p - 1})")
        self.p = p
        self.n = n


class ShapeMismatch(HopfCohError, ValueError):
    pass


class BudgetExceeded(HopfCohError):
    def __init__(self, needed, budget):
        super().__init__(f"search space of size {needed} exceeds budget {budget}")
        self.needed = needed
        self.budget = budget


class NotInvertible(HopfCohError, ValueError):
    pass


class PrerequisiteFailed(HopfCohError):
    """A structure handed to a constructor failed one of its axiom checks."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class IncompatiblePair(HopfCohError, ValueError):
    pass


class NotAnAction(HopfCohError, ValueError):
    pass


class ParseError(HopfCohError, ValueError):
    pass
