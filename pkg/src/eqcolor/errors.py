"""Exception types shared across the package."""


class OutOfScopeError(ValueError):
    """Raised when a closed-form evaluator is asked about parameters it
    makes no claim for (sum of part sizes exceeding n).  Callers that still
    want an answer should fall back to the brute-force oracle."""


class SearchBudgetExceeded(RuntimeError):
    """Raised when an exhaustive search runs out of its node budget.

    Distinguishable from 'infeasible' on purpose: a search that hits its
    budget has proven nothing.
    """

    def __init__(self, nodes: int, budget: int):
        super().__init__(f"search exceeded node budget ({nodes} > {budget})")
        self.nodes = nodes
        self.budget = budget


class FormatError(ValueError):
    """Malformed graph or coloring file; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
