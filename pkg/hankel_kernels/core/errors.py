"""
Exception hierarchy

Each exception class carries the process exit code the CLI reports for it.
"""
from typing import Optional


class HankelKernelError(Exception):
    """Base class for every error raised by the package"""

    exit_code = 4


class DocumentError(HankelKernelError):
    """Symbol document is malformed or references something undeclared"""

    exit_code = 2


class InvariantViolation(HankelKernelError):
    """An exact certificate failed; indicates an engine bug"""

    exit_code = 4


class DomainRejection(HankelKernelError, ValueError):
    """Input lies outside the class the engines accept"""

    exit_code = 3


class CirclePoleError(DomainRejection):
    """Rational function has a pole on the unit circle"""


class CircleDegenerateError(DomainRejection):
    """Zero or rank drop on the unit circle"""

    def __init__(self, message: str, witness: Optional[complex] = None):
        if witness is not None:
            message = f"{message} (near {witness.real:.6g}{witness.imag:+.6g}i)"
        super().__init__(message)
        self.witness = witness


class InexactSplitError(DomainRejection):
    """An irreducible factor over Q(i) has roots on both sides of the circle"""


class IrrationalRootError(DomainRejection):
    """A disk root needed for an exact step is not a Gaussian rational"""


class InexactFactorizationError(DomainRejection):
    """A factorization step would leave the Gaussian rationals"""


class NotAnalyticError(DomainRejection):
    """Matrix has poles in the closed unit disk"""


class PreconditionError(DomainRejection):
    """Operation called outside its precondition"""


class AtomProductError(DomainRejection):
    """Two non-Nevanlinna atoms were multiplied together"""


class UnsupportedShapeError(DomainRejection):
    """No construction is available for this matrix shape"""


class SingularMultiplierError(DomainRejection):
    """Multiplier does not satisfy the rank condition that was requested"""


class DependentSetError(DomainRejection):
    """A column set that must be independent is not"""
