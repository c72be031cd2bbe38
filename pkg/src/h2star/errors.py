"""Exception types shared across the toolkit.

Everything derives from ``H2StarError`` (itself a ``ValueError``) so the CLI
can map any domain failure to a single exit code.
"""


class H2StarError(ValueError):
    """Base class for all domain errors raised by this package."""


class DomainError(H2StarError):
    """Argument outside the mathematical domain of an operation."""


class DivisionByNonUnit(H2StarError):
    """Series division by a series whose constant term is numerically zero."""


class NonUnitConstant(H2StarError):
    """Series power of a series whose constant term is not exactly 1."""


class InvalidAtoms(H2StarError):
    """Atom weights or angles violate the convex-combination invariants."""


class InvalidLemmaPoint(H2StarError):
    """(p, y, zeta) outside the box [0, 2] x closed disk x closed disk."""


class DegenerateP1(H2StarError):
    """p1 at the boundary value 2, where the higher moments are forced."""


class InadmissibleMoments(H2StarError):
    """Moment data not realizable by any function with positive real part."""


class InsufficientCoefficients(H2StarError):
    """Coefficient vector too short for the requested Hankel determinant."""


class UnsupportedOrder(H2StarError):
    """Hankel determinant order above the supported maximum."""


class InvalidRadius(DomainError):
    """Sampling radius outside the open interval (0, 1)."""
