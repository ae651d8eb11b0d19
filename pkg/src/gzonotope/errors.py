class ValidationError(ValueError):
    """Malformed graph, partition or argument."""


class BudgetError(RuntimeError):
    """An exhaustive enumeration would exceed its configured size guard."""
