"""Exception hierarchy shared by every module."""


class SupercharError(Exception):
    """Base class for all domain errors raised by the library."""


class ParityError(SupercharError):
    """Doubled coordinates have the wrong parity for the algebra family."""


class NotDominant(SupercharError):
    """The weight fails the dominance test."""


class WrongFamily(SupercharError):
    """The operation is not defined for this algebra family."""


class TooLarge(SupercharError):
    """An enumeration would exceed its budget."""


class MalformedDiagram(SupercharError):
    """A weight diagram violates its structural invariants."""


class IllegalStep(SupercharError):
    """A translation step is blocked."""


class NonCanonical(SupercharError):
    """A diagram carries core symbols outside the tail position."""


class CycleDetected(SupercharError):
    """The move graph of a block contains an oriented cycle."""


class InversionMismatch(SupercharError):
    """Two independent computations of the D matrix disagree."""


class OutOfRegime(SupercharError):
    """No clause of the recursion applies to the requested pair."""


class InternalError(SupercharError):
    """A structural property that must always hold was violated."""
