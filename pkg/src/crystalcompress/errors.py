"""Exception types shared across the package."""


class CrystalError(Exception):
    """Base class for all package errors."""


class ParseError(CrystalError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class SpecMismatch(CrystalError, ValueError):
    """Objects built for different root systems were combined."""


class InvariantViolation(CrystalError):
    """An internal invariant failed; signals a bug upstream of the caller."""


class ReductionViolated(InvariantViolation):
    pass


class InverseLawViolated(InvariantViolation):
    pass


class LowerDecompositionViolated(InvariantViolation):
    """The split produced by the lower decomposition broke a structural bound."""


class NonTermination(InvariantViolation):
    def __init__(self, cap):
        super().__init__(f"compression did not reach a fixed point within {cap} steps")
        self.cap = cap


class CapExceeded(CrystalError):
    def __init__(self, cap):
        super().__init__(f"component has more than {cap} nodes")
        self.cap = cap


class MultipleSources(InvariantViolation):
    pass


class NotInN(CrystalError, ValueError):
    """Matrix is not a member of the compressed set."""
