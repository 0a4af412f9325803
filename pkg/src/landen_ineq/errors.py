"""Exception types shared across the package."""


class LandenError(Exception):
    """Base class for all package errors."""


class DomainError(LandenError, ValueError):
    """An argument lies outside the supported evaluation range."""


class ParamError(LandenError, ValueError):
    """A parameter is inadmissible (pole of a Pochhammer denominator, wrong sign, ...)."""


class SlowConvergence(LandenError, ArithmeticError):
    """A series hit ``max_terms`` before its tail estimate met the tolerance."""


class RegionMismatch(LandenError):
    """Parameters do not satisfy the hypotheses of the requested inequality."""


class CoefficientMismatch(LandenError):
    """A coefficient window is not monotone in the direction a claim requires."""
