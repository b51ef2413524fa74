"""Exception types shared across the package."""


class InfeasibleError(RuntimeError):
    """A computation would exceed its configured budget."""

    def __init__(self, what: str, required: int, budget: int):
        super().__init__(f"{what}: needs {required} elements, budget is {budget}")
        self.required = required
        self.budget = budget


class UnreachableError(ValueError):
    """Two vertices lie in different components."""


class InconsistentObservations(ValueError):
    """No vertex is within the claimed radius of every observation."""


class ConsistencyError(ArithmeticError):
    """An exact computation produced an impossible intermediate (e.g. non-integral count)."""
