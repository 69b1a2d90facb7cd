"""Exception hierarchy shared by all lensurf modules."""


class LensurfError(Exception):
    """Base class for all errors raised by this library."""


class NonCoprime(LensurfError):
    """p and q have a common factor."""


class OutOfRange(LensurfError):
    """A parameter is outside its admissible range."""


class UnknownEdge(LensurfError):
    """An edge-class name does not exist in the triangulation."""


class DimensionMismatch(LensurfError):
    """A coordinate vector has the wrong length for the triangulation."""


class NonIntegralWeight(LensurfError):
    """Corner count at an edge class is not divisible by its degree."""


class NotNormal(LensurfError):
    """The vector fails the matching equations or the square condition."""


class NotConnected(LensurfError):
    """An operation requiring a connected surface got a disconnected one."""


class HypothesisViolated(LensurfError):
    """The (p, q) parameters fail the quad-basis hypotheses (p >= 5, 2 <= q < p/2)."""


class Inadmissible(LensurfError):
    """No consistent triangle completion exists for the quad vector."""


class OddP(LensurfError):
    """An operation defined only for even p got an odd p."""


class InvalidFraction(LensurfError):
    """p/q is not a valid input for continued-fraction expansion."""


class NegativeCoordinate(LensurfError):
    """A compression step drove some quad count below zero."""


class IndexOutOfRange(LensurfError):
    """A tetrahedron or block index is outside 1..p."""


class VerificationFailure(LensurfError):
    """A claim checked by the construction pipeline does not hold."""


class InternalConsistencyError(LensurfError):
    """Two independent computations of the same quantity disagree.

    Raised when the computed edge/vertex identification does not match the
    expected naming scheme, or when the two orientability checks disagree.
    Always indicates a bug, never bad user input.
    """
