"""Exception types shared across the package."""


class QellError(Exception):
    """Base class for all package-specific errors."""


class CapExceeded(QellError):
    """Group enumeration grew past the configured element cap."""


class NotSubgroup(QellError):
    """An operation expected H <= G and the containment failed."""


class NotCentralizing(QellError):
    """An element was required to centralize (or intertwine) and does not."""


class NotCharacter(QellError):
    """A class function failed to decompose with nonnegative integer multiplicities."""


class NotRootOfUnity(QellError):
    """rational_angle was called on a cyclotomic number that is not a root of unity."""


class WrongCycleType(QellError):
    """A permutation did not have the cycle type required by the operation."""


class AxiomViolation(QellError):
    """A structural identity that should hold exactly failed a mechanical check."""


class ParseError(QellError):
    """Malformed group description or element expression."""
