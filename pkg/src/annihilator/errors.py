"""Exception hierarchy shared by every module of the package."""


class AnnihilatorError(Exception):
    """Base class for all errors raised by annihilator."""


class GraphError(AnnihilatorError, ValueError):
    """Invalid graph construction input."""


class LoopEdge(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class BadVertex(GraphError):
    pass


class ParseError(AnnihilatorError, ValueError):
    """Malformed graph6 or edge-list input.

    ``line`` is the 1-based line number when the error came from a stream.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Unsupported(AnnihilatorError):
    pass


class BadInput(AnnihilatorError, ValueError):
    pass


class BadParameter(AnnihilatorError, ValueError):
    pass


class NotAnnihilating(AnnihilatorError, ValueError):
    pass


class NotBipartite(AnnihilatorError, ValueError):
    pass


class NotConnected(AnnihilatorError, ValueError):
    pass


class TooLarge(AnnihilatorError, ValueError):
    pass


class IncompleteReport(AnnihilatorError, ValueError):
    pass


class InvariantViolation(AnnihilatorError, AssertionError):
    """A computed result broke a structural identity that must always hold."""


class BudgetExceeded(AnnihilatorError):
    """The independence-number search ran out of nodes.

    ``partial`` carries an incomplete report when the caller asked for one.
    """

    def __init__(self, nodes: int, budget: int, partial=None):
        self.nodes = nodes
        self.budget = budget
        self.partial = partial
        super().__init__(f"search exceeded budget of {budget} nodes")
