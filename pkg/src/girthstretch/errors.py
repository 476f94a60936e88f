"""Exception types shared across the package."""


class GirthStretchError(Exception):
    """Base class for all package errors."""


class DomainError(GirthStretchError, ValueError):
    """An argument lies outside the operation's domain."""


class AcyclicGraphError(GirthStretchError):
    """The operation needs at least one cycle but the graph is a forest."""


class NotConnectedError(GirthStretchError):
    """The operation requires a connected graph."""


class DisconnectedGraphError(NotConnectedError):
    """A metric is undefined on a graph with unreachable pairs."""


class NumericalFailureError(GirthStretchError):
    """The eigensolver failed to converge."""


class DegenerateSpectrumError(GirthStretchError):
    """The Laplacian spectrum is degenerate (e.g. edgeless graph)."""


class EmptyIncidenceError(GirthStretchError):
    """Edge selection was requested on an empty cycle incidence."""


class GirthViolationError(GirthStretchError):
    """A girth-floor precondition does not hold."""


class ExhaustedAttemptsError(GirthStretchError):
    """No connected graph was generated within the attempt budget."""


class MaxRoundsExceededError(GirthStretchError):
    """Gossip did not converge within the round budget."""


class ZeroInitialNormError(GirthStretchError):
    """The initial value vector has zero Euclidean norm."""
