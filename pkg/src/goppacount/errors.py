"""Exception types shared across modules."""


class ConsistencyError(ArithmeticError):
    """A sum that must be divisible came out with a remainder."""


class CapacityError(RuntimeError):
    """A materialization would exceed a configured resource limit."""

    def __init__(self, resource: str, needed: int, limit: int):
        self.resource = resource
        self.needed = needed
        self.limit = limit
        super().__init__(f"{resource}: need {needed}, limit is {limit}")


class StructuralLawError(AssertionError):
    """A group-theoretic identity that must hold was violated."""


class HypothesisError(ValueError):
    """Parameters fall outside the supported (n, r) range."""
