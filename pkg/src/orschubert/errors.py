"""Exception hierarchy shared by all calculator modules."""

from __future__ import annotations


class SchubertError(ValueError):
    """Base class for domain errors raised by the calculator."""


class FrameError(SchubertError):
    """A partition does not fit the frame it is used with."""


class FrameMismatchError(SchubertError):
    """Two classes living on different Grassmannians were combined."""


class NotDoubledError(SchubertError):
    """A partition is not of the form (2a1, 2a1, 2a2, 2a2, ...)."""


class NotEvenError(SchubertError):
    """An operation needing an even Young diagram got a non-even one."""


class DecompositionError(SchubertError):
    """An even diagram decomposed in zero or several ways (classification bug)."""


class DegreeError(SchubertError):
    """A class is not concentrated in the degree an operation requires."""


class TagError(SchubertError):
    """An impossible combination of Euler/exterior tags was multiplied."""


class TwistError(SchubertError):
    """A class has the wrong twist for the requested operation."""


class ParityError(SchubertError):
    """Chow rank and Witt degree disagree mod 2 (internal inconsistency)."""


class AreaError(SchubertError):
    """The areas in a Schubert problem do not add up to the dimension."""


class ResourceError(SchubertError):
    """A computation exceeds the configured size limit."""


class InternalError(RuntimeError):
    """An invariant that valid input can never break was broken."""


class NotLiftableError(SchubertError):
    """A Chow class has no lift with the requested twist.

    ``obstruction`` is the nonzero mod-2 class Sq^2(x) that blocks the lift.
    """

    def __init__(self, message: str, obstruction=None):
        super().__init__(message)
        self.obstruction = obstruction
