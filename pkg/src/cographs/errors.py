"""Exception hierarchy shared by all modules."""


class CographError(Exception):
    """Base class for every error raised by this package."""


class NotCograph(CographError):
    """The input graph contains an induced P4."""


class Disconnected(CographError):
    """The operation needs a connected graph."""


class CompleteGraph(CographError):
    """Connectivity of a complete graph cannot be raised further."""


class MissingWeight(CographError):
    """A required pair has no entry in the weight map."""


class IsolatedVertex(CographError):
    """An edge cover was requested for a graph with an isolated vertex."""


class InstanceTooLarge(CographError):
    """The instance exceeds the size cap of an exact or brute-force routine."""


class TreeMismatch(CographError):
    """A parse tree does not realize the graph it was passed with."""


class TooSmall(CographError):
    """The graph has too few vertices for the requested structure."""


class EmptyTerminals(CographError):
    """A Steiner query was made with no terminals."""


class InputError(CographError):
    """Malformed document or arguments."""
