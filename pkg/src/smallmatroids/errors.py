"""Exceptions shared by the python and compiled kernels."""


class BudgetExceededError(RuntimeError):
    """Search node budget exhausted; the run is rejected, never truncated."""

    def __init__(self, nodes, budget):
        super().__init__(f"node budget exceeded: {nodes} > {budget}")
        self.nodes = nodes
        self.budget = budget
