"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoop(GraphError):
    pass


class DuplicateColoredEdge(GraphError):
    pass


class NonPositiveLength(GraphError):
    pass


class NodeOutOfRange(GraphError):
    pass


class UnknownNode(GraphError):
    pass


class InvalidK(ValueError):
    pass


class DisconnectedGraph(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


class EmptyClause(ValueError):
    pass


class InfeasiblePathWitness(AssertionError):
    """A gadget path decoded to an assignment that fails some clause.

    This can only happen if the gadget construction is wrong.
    """


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
