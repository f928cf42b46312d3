"""Exception hierarchy shared by every module."""


class WheelcheckError(Exception):
    """Base class for all library errors."""


class GraphError(WheelcheckError, ValueError):
    """Structured rejection of a graph or embedding."""


class NonSimple(GraphError):
    pass


class RotationMismatch(GraphError):
    pass


class OuterNotACycle(GraphError):
    pass


class EmbeddingInconsistent(GraphError):
    pass


class UnsupportedLength(WheelcheckError, ValueError):
    pass


class MissingPathEdge(WheelcheckError, ValueError):
    pass


class NotAChord(WheelcheckError, ValueError):
    pass


class BoundsExceeded(WheelcheckError):
    pass


class ExceedsCaps(WheelcheckError, ValueError):
    """A coefficient query falls outside the truncation region."""


class EdgeBudgetExceeded(WheelcheckError):
    pass


class BadParameter(WheelcheckError, ValueError):
    pass


class PreconditionViolated(WheelcheckError):
    """A checker was called on an instance outside the theorem's hypotheses."""


class TheoremViolation(WheelcheckError):
    """A proven statement failed on a concrete instance.

    Carries the offending instance so it can be dumped and reproduced.
    """

    def __init__(self, message, graph=None, path=None, polynomial=None):
        super().__init__(message)
        self.graph = graph
        self.path = path
        self.polynomial = polynomial


class UnknownLemma(WheelcheckError, KeyError):
    pass


class BudgetExceeded(WheelcheckError):
    pass


class NotThreeColorable(WheelcheckError):
    pass
