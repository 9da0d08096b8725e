"""Exception hierarchy shared across the package."""


class UdimError(Exception):
    """Base class for all udim errors."""


class GraphFormatError(UdimError):
    """Edge-list or partition text is malformed."""


class DisconnectedGraphError(UdimError):
    """An operation that needs a connected graph received a disconnected one."""


class NotUnicyclicError(UdimError):
    """The graph does not have exactly one cycle."""


class NotATreeError(UdimError):
    """The graph is not a tree."""


class InvalidPartitionError(UdimError):
    """The vertex sets do not form an ordered partition of the vertex set."""


class SolverCapError(UdimError):
    """The instance exceeds the configured size cap of an exact solver."""


class PreconditionError(UdimError):
    """A construction was invoked on a graph that violates its hypothesis."""
