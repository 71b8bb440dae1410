"""Exception types shared across the package."""


class UncertainCentersError(Exception):
    """Base class for all library errors."""


class InvalidInstanceError(UncertainCentersError):
    """An instance violates one or more structural invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class InstanceFormatError(UncertainCentersError):
    """An instance file could not be parsed."""


class SearchBudgetExceeded(UncertainCentersError):
    """A search was aborted because its state space exceeds the configured
    budget.  The answer is undecided, never wrong."""


class SimulationError(UncertainCentersError):
    """A simulation run broke one of its runtime invariants."""
