"""Exception types shared across the package."""
from __future__ import annotations


class RomanovskiError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RomanovskiError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidEquation(DomainError):
    """The quadratic coefficient sigma is identically zero."""


class PoleError(DomainError):
    """Evaluation at a pole (gamma at a nonpositive integer, n = a, ...)."""


class PoleInC(PoleError):
    """A zero denominator factor inside a truncated hypergeometric sum."""


class ZeroLeadingTerm(RomanovskiError, ArithmeticError):
    """The master-formula prefactor vanishes (degenerate eigenvalue collision)."""


class AdmissibilityError(DomainError):
    """Requested level lies outside the bound-state range."""


class InadmissibleError(DomainError):
    """Matching equations have no admissible solution."""


class NonFiniteSample(RomanovskiError, FloatingPointError):
    """The integrand returned a non-finite value at an interior node."""


class ComplexRootError(DomainError):
    """The requested relativistic level has no real energy."""


class CatalogOnlyError(RomanovskiError, NotImplementedError):
    """The potential is catalogued but carries no verified closed-form spectrum."""
